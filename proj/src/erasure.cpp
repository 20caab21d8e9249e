#include "erasurelab/erasure.hpp"

#include <algorithm>

namespace erasurelab {

const char* to_string(ErrorKind kind) { return kind == ErrorKind::amb ? "amb" : "dec"; }

const char* to_string(Provenance prov) {
    switch (prov) {
        case Provenance::exact_lambda: return "exact-lambda";
        case Provenance::closed_form_mds: return "closed-form-mds";
        case Provenance::closed_form_amds: return "closed-form-amds";
        case Provenance::bound_lower: return "bound-lower";
        case Provenance::bound_upper: return "bound-upper";
    }
    return "?";
}

namespace {

mpq_class q_pow_inv(int q, int e) {
    // q^-e as an exact rational
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), q, e);
    return mpq_class(1, d);
}

}  // namespace

mpq_class ErrorPolynomial::eval(const mpq_class& p) const {
    if (p < 0 || p > 1) throw OutOfRange("p must lie in [0, 1]");
    mpq_class one_minus = 1 - p;
    // powers p^r * (1-p)^{n-r}, built incrementally from (1-p)^n
    mpq_class term = 1;
    for (int j = 0; j < n; ++j) term *= one_minus;
    mpq_class acc = Q[0] * term;
    for (int r = 1; r <= n; ++r) {
        if (one_minus == 0) {
            // p = 1: only the r = n term survives
            acc = Q[n];
            break;
        }
        term *= p;
        term /= one_minus;
        acc += Q[r] * term;
    }
    return acc;
}

double ErrorPolynomial::eval_double(double p) const {
    double acc = 0;
    for (int r = 0; r <= n; ++r) {
        double term = Q[r].get_d();
        for (int j = 0; j < r; ++j) term *= p;
        for (int j = 0; j < n - r; ++j) term *= 1 - p;
        acc += term;
    }
    return acc;
}

std::vector<mpq_class> delta_vector(ErrorKind kind, int k, int q) {
    if (k < 1 || q < 2) throw InvalidParams("delta_vector: need k >= 1, q >= 2");
    std::vector<mpq_class> delta(k + 1);
    delta[0] = 0;
    for (int i = 1; i <= k; ++i)
        delta[i] = kind == ErrorKind::dec ? mpq_class(1) - q_pow_inv(q, i) : mpq_class(1);
    return delta;
}

ErrorPolynomial q_vector(const SupportMatrix& lambda, ErrorKind kind, int q) {
    std::vector<mpq_class> delta = delta_vector(kind, lambda.k, q);
    ErrorPolynomial poly;
    poly.n = lambda.n;
    poly.kind = kind;
    poly.provenance = Provenance::exact_lambda;
    poly.Q.assign(lambda.n + 1, 0);
    for (int r = 0; r <= lambda.n; ++r)
        for (int i = 0; i <= lambda.k; ++i)
            if (lambda.a[i][r]) poly.Q[r] += mpq_class(mpz_class(lambda.a[i][r])) * delta[i];
    return poly;
}

mpq_class error_probability(const ErrorPolynomial& poly, const mpq_class& p) {
    return poly.eval(p);
}

BoundsReport bounds_report(const LinearCode& c, const SupportMatrix& lambda,
                           const SpectraMatrix& spectra, const WeightHierarchy& d) {
    const int n = c.n(), k = c.k(), q = c.q();
    if (lambda.n != n || lambda.k != k || spectra.n != n || spectra.k != k || d.k() != k)
        throw InconsistentInputs("bounds_report: inputs describe different codes");

    BoundsReport report;
    for (int i = 1; i <= k; ++i) {
        BoundsRow row;
        row.i = i;
        row.d = d[i];
        mpq_class A(spectra.at(i, d[i]));
        mpq_class choose(binomial_mpz(n, d[i]));

        // 1 - 1/max{1, q^{k-n+d_i}}
        int e = k - n + d[i];
        mpq_class fallback = e <= 0 ? mpq_class(0) : mpq_class(1) - q_pow_inv(q, e);

        row.dec_lower = A * (1 - q_pow_inv(q, i)) + (choose - A) * fallback;
        row.dec_upper = A * mpq_class(q - 1) * q_pow_inv(q, i) +
                        choose * (i == 1 ? mpq_class(0) : mpq_class(1) - q_pow_inv(q, i - 1));
        if (i >= 2) row.amb_lower = A + (choose - A) * (fallback > 0 ? mpq_class(1) : mpq_class(0));
        if (i == 1) row.amb_exact = A;
        report.rows.push_back(std::move(row));
    }

    report.singleton_bound = singleton_style_bound(n, k, q);

    CodeProfile profile = classify(c, d.d);
    report.proper_mds_index = profile.pjmds;
    if (profile.weights.empty())
        throw BudgetExceeded("bounds_report: weight distribution needed for the Liva bounds");
    LivaBounds liva = liva_bounds(n, k, q, profile.weights, profile.pjmds, d);
    report.liva_improved = std::move(liva.improved);
    report.liva_original = std::move(liva.original);
    return report;
}

SpectraMatrix han_spectra(int n, int k, int q, int s) {
    if (s < 1 || s > k) throw InvalidIndex("han_spectra: s must lie in 1..k");
    if (k > n || k < 1 || q < 2) throw InvalidParams("han_spectra: bad code parameters");
    SpectraMatrix out;
    out.n = n;
    out.k = k;
    out.A.assign(k + 1, std::vector<mpz_class>(n + 1, 0));
    out.A[0][0] = 1;
    for (int i = s; i <= k; ++i) {
        int di = n - k + i;
        for (int r = di; r <= n; ++r) {
            mpz_class sum = 0;
            for (int t = 0; t <= r - di; ++t) {
                mpz_class term = binomial_mpz(r, t) * gaussian_binomial(r + i - di - t, i, q);
                if (t % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            out.A[i][r] = binomial_mpz(n, r) * sum;
        }
    }
    return out;
}

ErrorPolynomial mds_closed_form(int n, int k, int q, ErrorKind kind) {
    if (k < 1 || k > n || q < 2) throw InvalidParams("mds_closed_form: bad parameters");
    ErrorPolynomial poly;
    poly.n = n;
    poly.kind = kind;
    poly.provenance = Provenance::closed_form_mds;
    poly.Q.assign(n + 1, 0);
    for (int r = n - k + 1; r <= n; ++r) {
        mpq_class choose(binomial_mpz(n, r));
        poly.Q[r] = kind == ErrorKind::amb ? choose : choose * (1 - q_pow_inv(q, r - n + k));
    }
    return poly;
}

ErrorPolynomial amds_closed_form(int n, int k, int q, const mpz_class& a1, int s,
                                 const std::vector<mpz_class>& a_higher, ErrorKind kind) {
    if (k < 1 || k >= n || q < 2) throw InvalidParams("amds_closed_form: bad parameters");
    if (s < 1 || s > k) throw InvalidIndex("amds_closed_form: s must lie in 1..k");
    if (a1 <= 0) throw InconsistentInputs("amds_closed_form: A^1_{n-k} must be positive");
    if (kind == ErrorKind::dec && int(a_higher.size()) < std::max(0, s - 2))
        throw InconsistentInputs("amds_closed_form: need A^{i+1}_{n-k+i} for i = 1..s-2");

    ErrorPolynomial poly;
    poly.n = n;
    poly.kind = kind;
    poly.provenance = Provenance::closed_form_amds;
    poly.Q.assign(n + 1, 0);
    if (kind == ErrorKind::amb) {
        poly.Q[n - k] = mpq_class(a1);
        for (int i = 1; i <= k; ++i) poly.Q[n - k + i] = mpq_class(binomial_mpz(n, n - k + i));
        return poly;
    }
    for (int i = 0; i <= k; ++i) {
        mpq_class coeff = mpq_class(binomial_mpz(n, n - k + i)) * (1 - q_pow_inv(q, i));
        if (i <= s - 2) {
            const mpz_class& A = i == 0 ? a1 : a_higher[i - 1];
            coeff += mpq_class(A) * mpq_class(q - 1) * q_pow_inv(q, i + 1);
        }
        poly.Q[n - k + i] = coeff;
    }
    return poly;
}

ErrorPolynomial singleton_style_bound(int n, int k, int q) {
    ErrorPolynomial poly = mds_closed_form(n, k, q, ErrorKind::dec);
    poly.provenance = Provenance::bound_lower;
    return poly;
}

LivaBounds liva_bounds(int n, int k, int q, const std::vector<std::uint64_t>& weights,
                       std::optional<int> s, const WeightHierarchy& d) {
    if (int(weights.size()) != n + 1)
        throw InvalidParams("liva_bounds: weight distribution must have n + 1 entries");
    if (d.k() != k) throw InvalidParams("liva_bounds: hierarchy must have k entries");

    // A^1_j = W_j / (q - 1): the q-1 nonzero words of a 1-dim subcode share
    // one support
    std::vector<mpq_class> A1(n + 1, 0);
    for (int j = 1; j <= n; ++j) {
        A1[j] = mpq_class(mpz_class(weights[j]), mpz_class(q - 1));
        A1[j].canonicalize();
    }

    // explicit return type: gmpxx would otherwise hand back a lazy expression
    // referencing the dead locals
    auto correction = [&](int i) -> mpq_class {
        mpq_class inner = 0;
        for (int j = 1; j <= i; ++j)
            inner += mpq_class(binomial_mpz(i, j)) * A1[j] / mpq_class(binomial_mpz(n, j));
        inner /= q - 1;
        if (inner > 1) inner = 1;
        return mpq_class(binomial_mpz(n, i)) * inner;
    };

    ErrorPolynomial base = singleton_style_bound(n, k, q);
    LivaBounds out;
    out.original = base;
    out.original.provenance = Provenance::bound_upper;
    for (int i = 1; i <= n - k; ++i) out.original.Q[i] += correction(i);

    // terms with r >= d_s already carry the Singleton coefficient and may be
    // dropped; the truncation point never exceeds the original n - k limit
    int upper = s ? std::min(d[*s], n - k) : n - k;
    out.improved = base;
    out.improved.provenance = Provenance::bound_upper;
    for (int i = d[1]; i <= upper; ++i) out.improved.Q[i] += correction(i);
    return out;
}

CodeAnalysis analyze(const LinearCode& c, int max_n, const mpz_class& per_dim_budget,
                     std::uint64_t weight_budget) {
    SupportMatrix support = support_matrix(c, max_n);
    SpectraMatrix spectra = spectra_matrix(c, per_dim_budget);
    WeightHierarchy hs = hierarchy_from_support(support);
    WeightHierarchy ha = hierarchy_from_spectra(spectra);
    if (hs.d != ha.d) throw Error("weight hierarchy paths disagree");
    CodeProfile profile = classify(c, hs.d, weight_budget);
    ErrorPolynomial amb = q_vector(support, ErrorKind::amb, c.q());
    ErrorPolynomial dec = q_vector(support, ErrorKind::dec, c.q());
    return CodeAnalysis{c,
                        std::move(support),
                        std::move(spectra),
                        std::move(hs),
                        std::move(profile),
                        std::move(amb),
                        std::move(dec)};
}

CompareVerdict compare_small_p(const CodeAnalysis& c1, const CodeAnalysis& c2, ErrorKind kind) {
    if (c1.code.n() != c2.code.n() || c1.code.k() != c2.code.k() || c1.code.q() != c2.code.q())
        throw MismatchedParameters("compare_small_p: codes must share (n, k, q)");

    const ErrorPolynomial& qa = kind == ErrorKind::amb ? c1.q_amb : c1.q_dec;
    const ErrorPolynomial& qb = kind == ErrorKind::amb ? c2.q_amb : c2.q_dec;

    CompareVerdict v;
    for (int r = 1; r <= c1.code.n(); ++r) {
        if (qa.Q[r] == qb.Q[r]) continue;
        v.order = qa.Q[r] < qb.Q[r] ? SmallPOrder::First : SmallPOrder::Second;
        v.divergence_r = r;
        int d1a = c1.hierarchy[1], d1b = c2.hierarchy[1];
        if (d1a != d1b)
            v.governing = "prop9";
        else if (r == d1a)
            v.governing = "prop10";
        else
            v.governing = "lex-extension";
        return v;
    }
    v.order = SmallPOrder::TieAtPrefix;
    v.governing = "equal";
    return v;
}

}  // namespace erasurelab
