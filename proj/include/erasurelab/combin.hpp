#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "erasurelab/errors.hpp"

namespace erasurelab {

// Coordinate subsets of [0, n) as bitmasks; enumeration budgets keep n <= 24.
using CoordSet = std::uint32_t;

inline int set_size(CoordSet s) { return __builtin_popcount(s); }

inline CoordSet full_set(int n) {
    return n == 0 ? 0u : (CoordSet(~0u) >> (32 - n));
}

// Binomial coefficient as uint64; valid for n <= 24 (enumeration scale).
std::uint64_t binomial(int n, int r);

mpz_class binomial_mpz(int n, int r);

// Number of b-dimensional subspaces of an a-dimensional space over F_q.
mpz_class gaussian_binomial(int a, int b, int q);

// Exact rational helpers shared by reports and the CLI.
//
// parse_rational accepts "a/b", integers and decimal literals ("0.01" is
// read as 1/100 exactly). rational_to_string prints "a/b", or "a" when the
// denominator is 1.
mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& x);

// Effective parallelism: hardware concurrency capped by ERASURELAB_THREADS.
int effective_threads();

}  // namespace erasurelab
