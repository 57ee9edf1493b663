#pragma once

/**
 * @file cli.hpp
 * @brief `oddpow` command-line front end.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
 */

#include "oddpow/coeff_engine.hpp"
#include "oddpow/exact_arith.hpp"
#include "oddpow/identity_verifier.hpp"
#include "oddpow/selftest.hpp"
#include "oddpow/serialize.hpp"

#include "CLI11.hpp"

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace oddpow::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kIoError = 3,
};

struct CliConfig {
    std::string command;
    std::optional<std::size_t> m;
    std::optional<std::size_t> m_max;
    std::uint64_t x_max = 100;
    std::optional<std::size_t> n;
    std::string format = "text";
    std::optional<std::string> output_path;
    std::string mode = "all";
};

inline int cmd_coeffs(const CliConfig& cfg, std::ostream& out) {
    const std::size_t m = *cfg.m;
    const CoeffRow row = coeff_row(m);
    if (cfg.format == "json") {
        out << row_to_json(m, row).dump() << "\n";
    } else if (cfg.format == "csv") {
        out << kCsvHeader << row_to_csv(m, row);
    } else {
        out << identity_to_text(m, row) << "\n";
        out << "row:";
        for (std::size_t r = 0; r < row.size(); ++r) out << (r ? ", " : " ") << row[r];
        out << "\n";
        const bool agree = coeff_row_by_solve(m) == row;
        out << "routes: recursion and linear solve " << (agree ? "agree" : "DISAGREE") << "\n";
        if (m == 6)
            out << "note: " << describe_x13_divergence(row, coeff_row(7)) << "\n";
        if (!agree) return kVerifyFailed;
    }
    return kSuccess;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    const std::size_t m = *cfg.m;
    std::vector<VerifyReport> reports;
    if (cfg.mode == "numeric" || cfg.mode == "all") reports.push_back(verify_numeric(m, cfg.x_max));
    if (cfg.mode == "symbolic" || cfg.mode == "all") reports.push_back(verify_symbolic(m));
    if (cfg.mode == "symmetry" || cfg.mode == "all") reports.push_back(verify_symmetry(m, cfg.x_max));

    bool passed = true;
    for (const auto& r : reports) passed = passed && r.passed;

    if (cfg.format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        out << arr.dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "m,mode,range,passed,x,expected,actual\n";
        for (const auto& r : reports) {
            out << r.m << "," << to_string(r.mode) << "," << r.range << ","
                << (r.passed ? "true" : "false");
            if (r.first_failure)
                out << "," << r.first_failure->x << "," << r.first_failure->expected << ","
                    << r.first_failure->actual;
            else
                out << ",,,";
            out << "\n";
        }
    } else {
        for (const auto& r : reports) out << report_to_text(r) << "\n";
    }
    return passed ? kSuccess : kVerifyFailed;
}

inline int cmd_expand(const CliConfig& cfg, std::ostream& out) {
    const std::size_t m = *cfg.m;
    const CoeffRow row = coeff_row(m);
    const PolynomialQ expanded = expand_rhs(row);
    const PolynomialQ target = PolynomialQ::monomial(Rational(1), 2 * m + 1);
    const bool equal = expanded == target;
    if (cfg.format == "json") {
        Json j;
        j["m"] = m;
        j["expansion"] = expanded.str();
        j["target"] = target.str();
        j["equal"] = equal;
        out << j.dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "m,expansion,target,equal\n"
            << m << "," << expanded.str() << "," << target.str() << ","
            << (equal ? "true" : "false") << "\n";
    } else {
        for (std::size_t r = row.size(); r-- > 0;) {
            if (row[r].is_zero()) continue;
            out << "  A(" << m << "," << r << ") = " << row[r] << "  C_" << r
                << "(x) = " << convolution_sum_poly(r).str() << "\n";
        }
        out << "sum_r A(" << m << ",r)*C_r(x) = " << expanded.str() << "\n";
        out << (equal ? "equals " : "DIFFERS FROM ") << target.str() << "\n";
    }
    return equal ? kSuccess : kVerifyFailed;
}

inline int cmd_bernoulli(const CliConfig& cfg, std::ostream& out) {
    const std::size_t n = *cfg.n;
    const Rational b = bernoulli(n);
    if (cfg.format == "json") {
        Json j;
        j["n"] = n;
        j["value"] = b.str();
        out << j.dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "n,value\n" << n << "," << b << "\n";
    } else {
        out << b << "\n";
    }
    return kSuccess;
}

inline int cmd_export(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::size_t m_max = *cfg.m_max;
    std::vector<CoeffRow> rows;
    rows.reserve(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) rows.push_back(coeff_row(m));

    std::string body;
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (std::size_t m = 0; m <= m_max; ++m) arr.push_back(row_to_json(m, rows[m]));
        body = arr.dump() + "\n";
    } else if (cfg.format == "csv") {
        body = kCsvHeader;
        for (std::size_t m = 0; m <= m_max; ++m) body += row_to_csv(m, rows[m]);
    } else {
        body = rows_to_bfile(rows);
    }

    if (!cfg.output_path) {
        out << body;
        return kSuccess;
    }

    auto write = [&err](const std::string& path, const std::string& data) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (f) f << data;
        if (!f) {
            err << "error: cannot write " << path << "\n";
            return false;
        }
        return true;
    };
    if (!write(*cfg.output_path, body)) return kIoError;
    if (cfg.format != "text" && !write(*cfg.output_path + ".b.txt", rows_to_bfile(rows)))
        return kIoError;
    return kSuccess;
}

/// Parses argv-style arguments (without the program name) and dispatches.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact coefficient triangle for x^(2m+1) = sum_k sum_r A(m,r) k^r (x-k)^r",
                 "oddpow"};
    app.require_subcommand(1);
    CliConfig cfg;

    const auto add_format = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };

    auto* coeffs = app.add_subcommand("coeffs", "Print row A(m, 0..m)");
    coeffs->add_option("--m", cfg.m, "Row index m")->required();
    add_format(coeffs);

    auto* verify = app.add_subcommand("verify", "Verify the identity at m");
    verify->add_option("--m", cfg.m, "Row index m")->required();
    verify->add_option("--x-max", cfg.x_max, "Largest x for pointwise checks")->capture_default_str();
    verify->add_option("--mode", cfg.mode, "Verifier")
        ->check(CLI::IsMember({"numeric", "symbolic", "symmetry", "all"}))
        ->capture_default_str();
    add_format(verify);

    auto* expand = app.add_subcommand("expand", "Expand sum_r A(m,r) C_r(x) as a polynomial");
    expand->add_option("--m", cfg.m, "Row index m")->required();
    add_format(expand);

    auto* bern = app.add_subcommand("bernoulli", "Print B_n (B_1 = +1/2)");
    bern->add_option("--n", cfg.n, "Index n")->required();
    add_format(bern);

    auto* exp = app.add_subcommand("export", "Export rows 0..m-max");
    exp->add_option("--m-max", cfg.m_max, "Last row")->required();
    exp->add_option("--out", cfg.output_path, "Output file (default stdout)");
    add_format(exp);

    app.add_subcommand("selftest", "Run the invariant suite");

    // CLI11 wants argv order reversed when handed a vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (cfg.command == "coeffs") return cmd_coeffs(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "expand") return cmd_expand(cfg, out);
        if (cfg.command == "bernoulli") return cmd_bernoulli(cfg, out);
        if (cfg.command == "export") return cmd_export(cfg, out, err);
        if (cfg.command == "selftest") return run_selftest(out);
    } catch (const IdentityUnsatisfiable& e) {
        err << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}

}  // namespace oddpow::cli
