#pragma once

#include "oddpow/coeff_engine.hpp"
#include "oddpow/exact_arith.hpp"
#include "oddpow/identity_verifier.hpp"
#include "oddpow/linear_solve.hpp"
#include "oddpow/polynomial.hpp"
#include "oddpow/power_sums.hpp"
#include "oddpow/serialize.hpp"
