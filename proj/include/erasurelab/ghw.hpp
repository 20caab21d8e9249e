#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "erasurelab/code.hpp"

namespace erasurelab {

/// Generalized weights d_1 < d_2 < ... < d_k.
struct WeightHierarchy {
    std::vector<int> d;  // d[i-1] = d_i

    int operator[](int i) const { return d.at(i - 1); }  // 1-based, like the math
    int k() const { return int(d.size()); }
};

/// Support matrix: entry(i, r) counts r-subsets R of the coordinates with
/// dim [0]_R = i, for i in 0..k and r in 0..n.
struct SupportMatrix {
    int n = 0, k = 0;
    std::vector<std::vector<std::uint64_t>> a;  // a[i][r]

    std::uint64_t at(int i, int r) const { return a.at(i).at(r); }
};

/// Spectra matrix: entry(i, j) counts i-dimensional subcodes whose support
/// has size exactly j. Entries are exact integers of arbitrary size so the
/// closed-form constructors can fill rows beyond enumeration scale.
struct SpectraMatrix {
    int n = 0, k = 0;
    std::vector<std::vector<mpz_class>> A;  // A[i][j]

    const mpz_class& at(int i, int j) const { return A.at(i).at(j); }
};

/// Exact support matrix by classifying all 2^n coordinate subsets.
/// Deterministic for any thread count; throws BudgetExceeded when n > max_n.
SupportMatrix support_matrix(const LinearCode& c, int max_n = 24);

/// Exact spectra matrix by enumerating, for every dimension i, all
/// i-dimensional subspaces of the message space as canonical reduced-echelon
/// matrices and measuring the support of their images in the code.
/// Throws BudgetExceeded when some Gaussian binomial [k choose i]_q exceeds
/// per_dim_budget.
SpectraMatrix spectra_matrix(const LinearCode& c, const mpz_class& per_dim_budget = 10000000);

WeightHierarchy hierarchy_from_support(const SupportMatrix& m);
WeightHierarchy hierarchy_from_spectra(const SpectraMatrix& m);

/// Weight hierarchy; computes both the subset path and the subspace path and
/// insists they agree.
WeightHierarchy hierarchy(const LinearCode& c, int max_n = 24,
                          const mpz_class& per_dim_budget = 10000000);

/// Distinct supports realized by i-dimensional subcodes of minimal support
/// size d_i, as coordinate bitmasks (ascending). By Wei's structure results
/// their number equals A[i][d_i].
std::vector<CoordSet> support_realizers(const LinearCode& c, int i,
                                        const mpz_class& per_dim_budget = 10000000);

std::uint64_t count_support_realizers(const LinearCode& c, int i,
                                      const mpz_class& per_dim_budget = 10000000);

/// Visits every i-dimensional subspace of the message space F_q^k exactly
/// once. The callback receives the subspace basis in reduced echelon form as
/// i rows of k elements. Used by the spectra enumeration and by tests that
/// need the raw subspaces.
void for_each_subspace(const Field& f, int k, int i,
                       const std::function<void(const std::vector<std::vector<Elem>>&)>& visit);

}  // namespace erasurelab
