#include "yfock/ratfun.hpp"

namespace yfock {

RatFun::RatFun(const IntPoly& num, const IntPoly& den) : num_(num), den_(den) {
    canonicalize();
}

RatFun::RatFun(const mpq_class& q)
    : num_(mpz_class(q.get_num())), den_(mpz_class(q.get_den())) {
    canonicalize();
}

void RatFun::canonicalize() {
    if (den_.is_zero()) throw domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    IntPoly g = IntPoly::gcd(den_, o.den_);
    IntPoly da = den_.divexact(g);
    IntPoly db = o.den_.divexact(g);
    return RatFun(num_ * db + o.num_ * da, da * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun();
    IntPoly g1 = IntPoly::gcd(num_, o.den_);
    IntPoly g2 = IntPoly::gcd(o.num_, den_);
    RatFun r;
    r.num_ = num_.divexact(g1) * o.num_.divexact(g2);
    r.den_ = den_.divexact(g2) * o.den_.divexact(g1);
    if (r.den_.leading_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw domain_error("division by zero");
    RatFun r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFun RatFun::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RatFun acc(1), base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

RatFun RatFun::subst_e2_neg_e1() const {
    IntPoly d = den_.subst_e2_neg_e1();
    if (d.is_zero()) {
        // Identify the vanishing factor for diagnostics: every denominator
        // killed by e2 := -e1 is divisible by (e1 + e2).
        IntPoly f = IntPoly::variable(0) + IntPoly::variable(1);
        int k = 0;
        IntPoly rest = den_;
        while (rest.divisible_by(f)) {
            rest = rest.divexact(f);
            ++k;
        }
        std::string factor = "(e1 + e2)";
        if (k > 1) factor += "^" + std::to_string(k);
        throw pole_error("denominator vanishes at e2 = -e1", factor);
    }
    return RatFun(num_.subst_e2_neg_e1(), d);
}

mpq_class RatFun::eval(const std::array<mpq_class, kMaxVars>& point) const {
    mpq_class d = den_.eval(point);
    if (d == 0) throw pole_error("denominator vanishes at evaluation point", den_.to_string());
    return num_.eval(point) / d;
}

std::string RatFun::to_string() const {
    if (num_.is_zero()) return "0";
    if (den_.is_one()) return num_.to_string();

    // Numerator: parenthesize multi-term numerators; factor a leading minus
    // out of the parentheses.
    std::string ns;
    bool neg_out = false;
    if (num_.terms().size() > 1) {
        IntPoly n = num_;
        if (n.leading_coeff() < 0) {
            neg_out = true;
            n = -n;
        }
        ns = "(" + n.to_string() + ")";
    } else {
        ns = num_.to_string();
    }

    // Denominator: bare when a single term that needs no parentheses
    // (a constant, or a unit-coefficient power of one variable); otherwise
    // parenthesized.
    std::string ds;
    if (den_.terms().size() == 1) {
        const auto& [e, c] = *den_.terms().begin();
        int nv = 0;
        for (int k = 0; k < kMaxVars; ++k)
            if (e[k] > 0) ++nv;
        bool bare = (nv == 0) || (nv == 1 && c == 1);
        ds = bare ? den_.to_string() : "(" + den_.to_string() + ")";
    } else {
        ds = "(" + den_.to_string() + ")";
    }

    return (neg_out ? "-" : "") + ns + "/" + ds;
}

} // namespace yfock
