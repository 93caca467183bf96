#pragma once

#include <gmpxx.h>

#include "hankelforge/rational.hpp"

namespace hankelforge {

/// Size of the cached factorial table. Defaults to 512; the environment
/// variable HANKELFORGE_FACTORIAL_CAP overrides it (read once, on first use).
unsigned factorial_cap();

/// n! as an exact integer. Values up to factorial_cap() come from a shared
/// table built once; larger arguments are computed on the fly.
mpz_class factorial(unsigned n);

/// Binomial coefficient with the conventions used throughout:
///   k < 0                -> 0 (checked before n is inspected)
///   n >= 0 and k > n     -> 0
///   n >= 0, 0 <= k <= n  -> n!/(k!(n-k)!)
///   n < 0 and k >= 0     -> throws std::invalid_argument
mpz_class binom_int(long n, long k);

/// Same as binom_int, as a Rational.
Rational binom(long n, long k);

/// Falling factorial e(e-1)...(e-k+1); empty product for k = 0. Defined for
/// any integer e, which is what differentiating Laurent monomials needs.
mpz_class falling(const mpz_class& e, unsigned k);

}  // namespace hankelforge
