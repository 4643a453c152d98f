#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

#include "yfock/error.hpp"
#include "yfock/poly.hpp"

namespace yfock {

// Rational function over the integers in e1, e2, u, c, kept in canonical
// form: numerator and denominator coprime, denominator nonzero with positive
// leading coefficient in the lex order.  Equality is structural.
class RatFun {
  public:
    RatFun() : num_(), den_(1) {}
    RatFun(long v) : num_(v), den_(1) {}
    RatFun(const mpz_class& v) : num_(v), den_(1) {}
    RatFun(const IntPoly& p) : num_(p), den_(1) {}
    RatFun(const IntPoly& num, const IntPoly& den);
    RatFun(const mpq_class& q);

    static RatFun variable(int idx) { return RatFun(IntPoly::variable(idx)); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    bool operator==(const RatFun& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun inverse() const;
    RatFun pow(int n) const;

    // Substitutes e2 := -e1.  Throws pole_error when the denominator
    // vanishes identically under the substitution.
    RatFun subst_e2_neg_e1() const;

    mpq_class eval(const std::array<mpq_class, kMaxVars>& point) const;

    std::string to_string() const;

  private:
    void canonicalize();

    IntPoly num_, den_;
};

inline RatFun operator+(long a, const RatFun& b) { return RatFun(a) + b; }
inline RatFun operator-(long a, const RatFun& b) { return RatFun(a) - b; }
inline RatFun operator*(long a, const RatFun& b) { return RatFun(a) * b; }

} // namespace yfock
