#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "erasurelab/ghw.hpp"

namespace erasurelab {

/// Which error event a polynomial describes: ambiguity of the received word,
/// or an incorrect maximum-likelihood decision.
enum class ErrorKind { amb, dec };

enum class Provenance {
    exact_lambda,      // Q = delta * Lambda, from the enumerated support matrix
    closed_form_mds,   // Kasami-Lin style closed form, MDS parameters only
    closed_form_amds,  // AMDS closed form from A^1_{n-k} and the proper index
    bound_lower,
    bound_upper,
};

const char* to_string(ErrorKind kind);
const char* to_string(Provenance prov);

/// Error probability in the basis p^r (1-p)^{n-r}: P(p) = sum_r Q_r p^r (1-p)^{n-r},
/// with exact rational coefficients Q_0..Q_n.
struct ErrorPolynomial {
    int n = 0;
    ErrorKind kind = ErrorKind::amb;
    Provenance provenance = Provenance::exact_lambda;
    std::vector<mpq_class> Q;

    /// Exact evaluation; requires 0 <= p <= 1 (OutOfRange otherwise).
    mpq_class eval(const mpq_class& p) const;

    /// Approximate evaluation for plotting/CSV output.
    double eval_double(double p) const;
};

/// delta_{*,i} for i = 0..k: 1 - q^-i for decoding, its ceiling (an indicator
/// of i > 0) for ambiguity.
std::vector<mpq_class> delta_vector(ErrorKind kind, int k, int q);

/// Q_{*,r} = sum_i a^i_r delta_{*,i}, assembled from the support matrix.
ErrorPolynomial q_vector(const SupportMatrix& lambda, ErrorKind kind, int q);

/// Exact P_*(p); OutOfRange unless 0 <= p <= 1.
mpq_class error_probability(const ErrorPolynomial& poly, const mpq_class& p);

/// Per-weight bound rows at r = d_i plus the Singleton-style and Liva-style
/// bound polynomials for P_dec.
struct BoundsRow {
    int i = 0;  // subcode dimension
    int d = 0;  // d_i
    mpq_class dec_lower;
    mpq_class dec_upper;
    std::optional<mpq_class> amb_lower;  // defined for i >= 2
    std::optional<mpq_class> amb_exact;  // defined for i == 1: Q_{amb,d_1} = A^1_{d_1}
};

struct BoundsReport {
    std::vector<BoundsRow> rows;      // i = 1..k
    ErrorPolynomial singleton_bound;  // lower bound for P_dec (exact for MDS codes)
    ErrorPolynomial liva_improved;    // upper bounds for P_dec
    ErrorPolynomial liva_original;
    std::optional<int> proper_mds_index;  // s with the improved truncation; absent
                                          // when the code has no full support
};

BoundsReport bounds_report(const LinearCode& c, const SupportMatrix& lambda,
                           const SpectraMatrix& spectra, const WeightHierarchy& d);

/// Spectra rows i >= s of a P_s-MDS [n,k]_q code from the alternating-sum
/// closed form (rows below s are left zero, apart from A[0][0] = 1). The
/// formula is applied from r = d_i on; see README for the boundary reading.
SpectraMatrix han_spectra(int n, int k, int q, int s);

ErrorPolynomial mds_closed_form(int n, int k, int q, ErrorKind kind);

/// AMDS closed forms. a1 is A^1_{n-k}; s is the least index with zero
/// Singleton defect; a_higher holds A^{i+1}_{n-k+i} for i = 1..s-2 (empty when
/// s <= 2) and is only consulted for the decoding polynomial.
ErrorPolynomial amds_closed_form(int n, int k, int q, const mpz_class& a1, int s,
                                 const std::vector<mpz_class>& a_higher, ErrorKind kind);

/// The Singleton-style decoding bound: coefficientwise the MDS decoding
/// closed form. A lower bound for P_dec of every [n,k]_q code.
ErrorPolynomial singleton_style_bound(int n, int k, int q);

struct LivaBounds {
    ErrorPolynomial improved;  // correction sum truncated at min(d_s, n-k)
    ErrorPolynomial original;  // correction sum over 1..n-k
};

/// Weight-distribution upper bounds for P_dec. `s` is the proper MDS index
/// when the code has one; without it no terms can be dropped and the improved
/// bound equals the original.
LivaBounds liva_bounds(int n, int k, int q, const std::vector<std::uint64_t>& weights,
                       std::optional<int> s, const WeightHierarchy& d);

/// Everything the reports need about one code, computed once.
struct CodeAnalysis {
    LinearCode code;
    SupportMatrix support;
    SpectraMatrix spectra;
    WeightHierarchy hierarchy;
    CodeProfile profile;
    ErrorPolynomial q_amb;
    ErrorPolynomial q_dec;
};

CodeAnalysis analyze(const LinearCode& c, int max_n = 24,
                     const mpz_class& per_dim_budget = 10000000,
                     std::uint64_t weight_budget = std::uint64_t(1) << 24);

enum class SmallPOrder { First, Second, TieAtPrefix };

struct CompareVerdict {
    SmallPOrder order = SmallPOrder::TieAtPrefix;
    int divergence_r = -1;   // first r with differing Q_r; -1 when identical
    std::string governing;   // "prop9", "prop10", "lex-extension" or "equal"
};

/// Small-p ordering of two codes with the same (n, k, q): lexicographic
/// comparison of (Q_1, ..., Q_n). "First" means P_*(C1) < P_*(C2) for every
/// sufficiently small p > 0. A divergence later than d_1 goes beyond the
/// paper's criteria and is labeled "lex-extension".
CompareVerdict compare_small_p(const CodeAnalysis& c1, const CodeAnalysis& c2, ErrorKind kind);

}  // namespace erasurelab
