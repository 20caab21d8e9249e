#pragma once

#include <cstdint>
#include <vector>

#include "erasurelab/errors.hpp"

namespace erasurelab {

using Elem = std::uint8_t;

/// Arithmetic in F_q for prime-power q, with full operation tables.
///
/// Elements are the integers 0..q-1; for q = p^m an element encodes the
/// coefficient vector of a polynomial over F_p in base p (least significant
/// digit = constant term). The modulus is the lexicographically least monic
/// irreducible polynomial of degree m over F_p, so the representation is
/// identical across builds. Fields are immutable once constructed and safe
/// to share between threads.
class Field {
  public:
    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }

    // Coefficients c_0..c_m of the modulus (c_m = 1); for m = 1 this is x - 0,
    // i.e. the identity reduction.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[size_t(a) * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return mul_[size_t(a) * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }

    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZero("inv(0)");
        return inv_[a];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const;

    bool is_element(int x) const { return x >= 0 && x < q_; }

  private:
    friend const Field& make_field(int q, int max_q);
    Field(int q, int p, int m);

    int q_, p_, m_;
    std::vector<Elem> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

/// Returns the field of order q. Fields are cached: repeated calls hand back
/// the same instance, which lives for the whole process.
///
/// Throws NotPrimePower when q is not a prime power and TooLarge when q
/// exceeds max_q.
const Field& make_field(int q, int max_q = 16);

}  // namespace erasurelab
