#include "erasurelab/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace erasurelab {

namespace {

// q = p^m with p prime? Returns {p, m} or {0, 0}.
std::pair<int, int> prime_power_split(int q) {
    if (q < 2) return {0, 0};
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) return {q, 1};  // q itself is prime
    int m = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) return {0, 0};
    return {p, m};
}

using Poly = std::vector<int>;  // coefficients over F_p, index = degree

Poly poly_mod(Poly a, const Poly& b, int p) {
    // b is monic
    while (a.size() >= b.size()) {
        int lead = a.back();
        if (lead != 0) {
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                int v = a[shift + i] - lead * b[i];
                a[shift + i] = ((v % p) + p) % p;
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Monic polynomial of degree d from a packed integer code (base-p digits are
// the low coefficients; codes enumerate in lexicographically increasing order
// of the coefficient vector read least-significant first).
Poly unpack_monic(int code, int d, int p) {
    Poly out(d + 1, 0);
    for (int i = 0; i < d; ++i) {
        out[i] = code % p;
        code /= p;
    }
    out[d] = 1;
    return out;
}

bool is_irreducible(const Poly& f, int p) {
    int d = int(f.size()) - 1;
    // trial division by all monic polynomials of degree 1..d/2
    for (int e = 1; 2 * e <= d; ++e) {
        int count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            Poly g = unpack_monic(code, e, p);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly least_irreducible(int p, int m) {
    int count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
        Poly f = unpack_monic(code, m, p);
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable for m >= 1
}

Poly elem_to_poly(int x, int p) {
    Poly out;
    while (x > 0) {
        out.push_back(x % p);
        x /= p;
    }
    return out;
}

int poly_to_elem(const Poly& f, int p) {
    int x = 0;
    for (size_t i = f.size(); i-- > 0;) x = x * p + f[i];
    return x;
}

}  // namespace

Field::Field(int q, int p, int m) : q_(q), p_(p), m_(m) {
    Poly mod = m == 1 ? Poly{0, 1} : least_irreducible(p, m);
    modulus_.assign(mod.begin(), mod.end());

    add_.resize(size_t(q) * q);
    mul_.resize(size_t(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    for (int a = 0; a < q; ++a) {
        Poly pa = elem_to_poly(a, p);
        // digitwise negation
        Poly na = pa;
        for (int& c : na) c = (p - c) % p;
        neg_[a] = Elem(poly_to_elem(na, p));
        for (int b = 0; b < q; ++b) {
            Poly pb = elem_to_poly(b, p);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                int v = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
                s[i] = v % p;
            }
            add_[size_t(a) * q + b] = Elem(poly_to_elem(s, p));
            Poly prod = poly_mod(poly_mul(pa, pb, p), mod, p);
            mul_[size_t(a) * q + b] = Elem(poly_to_elem(prod, p));
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (mul_[size_t(a) * q + b] == 1) {
                inv_[a] = Elem(b);
                break;
            }
        }
    }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem acc = 1;
    Elem base = a;
    while (e != 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

const Field& make_field(int q, int max_q) {
    if (q > max_q)
        throw TooLarge("field order " + std::to_string(q) + " exceeds limit " +
                       std::to_string(max_q));
    auto [p, m] = prime_power_split(q);
    if (p == 0) throw NotPrimePower(std::to_string(q) + " is not a prime power");

    static std::mutex mu;
    static std::map<int, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) {
        it = cache.emplace(q, std::unique_ptr<Field>(new Field(q, p, m))).first;
    }
    return *it->second;
}

}  // namespace erasurelab
