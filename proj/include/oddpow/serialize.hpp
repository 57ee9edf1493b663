#pragma once

// Text, JSON and CSV renderings shared by the CLI and export files.
// JSON keys keep insertion order so output is byte-stable.

#include "oddpow/coeff_engine.hpp"
#include "oddpow/exact_arith.hpp"
#include "oddpow/identity_verifier.hpp"

#include "json.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace oddpow {

using Json = nlohmann::ordered_json;

/// {"m": m, "coefficients": [{"r": r, "value": "num/den"}, ...]}
inline Json row_to_json(std::size_t m, std::span<const Rational> row) {
    Json coeffs = Json::array();
    for (std::size_t r = 0; r < row.size(); ++r) {
        Json entry;
        entry["r"] = r;
        entry["value"] = row[r].str();
        coeffs.push_back(std::move(entry));
    }
    Json out;
    out["m"] = m;
    out["coefficients"] = std::move(coeffs);
    return out;
}

inline CoeffRow row_from_json(const Json& j) {
    CoeffRow row;
    for (const auto& entry : j.at("coefficients")) {
        const auto r = entry.at("r").get<std::size_t>();
        if (r != row.size()) throw std::invalid_argument("row_from_json: r out of order");
        row.push_back(Rational::parse(entry.at("value").get<std::string>()));
    }
    return row;
}

inline constexpr const char* kCsvHeader = "m,r,value\n";

/// "m,r,value" lines without the header.
inline std::string row_to_csv(std::size_t m, std::span<const Rational> row) {
    std::string out;
    for (std::size_t r = 0; r < row.size(); ++r)
        out += std::to_string(m) + "," + std::to_string(r) + "," + row[r].str() + "\n";
    return out;
}

/// b-file listing of rows 0..rows.size()-1 read r = 0..m, indexed from 1.
inline std::string rows_to_bfile(const std::vector<CoeffRow>& rows) {
    std::string out;
    std::size_t index = 1;
    for (const auto& row : rows)
        for (const auto& value : row) out += std::to_string(index++) + " " + value.str() + "\n";
    return out;
}

inline Json report_to_json(const VerifyReport& report) {
    Json out;
    out["m"] = report.m;
    out["mode"] = std::string(to_string(report.mode));
    out["range"] = report.range;
    out["passed"] = report.passed;
    if (report.first_failure) {
        Json f;
        f["x"] = report.first_failure->x;
        f["expected"] = report.first_failure->expected;
        f["actual"] = report.first_failure->actual;
        out["first_failure"] = std::move(f);
    } else {
        out["first_failure"] = nullptr;
    }
    return out;
}

inline std::string report_to_text(const VerifyReport& report) {
    std::string out = "m=" + std::to_string(report.m) + " " + std::string(to_string(report.mode)) +
                      " [" + report.range + "]: ";
    if (report.passed) return out + "passed";
    const auto& f = *report.first_failure;
    out += "FAILED";
    if (f.x >= 0) out += " at x=" + std::to_string(f.x);
    return out + ": expected " + f.expected + ", got " + f.actual;
}

/**
 * The identity in display form, e.g.
 *   x^7 = Σ_{k=1}^{x} 140·k^3·(x-k)^3 - 14·k·(x-k) + 1
 * Terms run from r = m down to r = 0; zero terms are dropped and negative
 * ones are shown as subtraction.
 */
inline std::string identity_to_text(std::size_t m, std::span<const Rational> row) {
    std::string out = m == 0 ? "x" : "x^" + std::to_string(2 * m + 1);
    out += " = Σ_{k=1}^{x} ";
    bool first = true;
    for (std::size_t r = row.size(); r-- > 0;) {
        const Rational& c = row[r];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = negative ? -c : c;
        if (r == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1)) out += mag.str() + "·";
        if (r == 1) {
            out += "k·(x-k)";
        } else {
            const std::string e = std::to_string(r);
            out += "k^" + e + "·(x-k)^" + e;
        }
    }
    if (first) out += "0";
    return out;
}

}  // namespace oddpow
