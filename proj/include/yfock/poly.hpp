#pragma once
#include <array>
#include <map>
#include <string>
#include <gmpxx.h>

#include "yfock/error.hpp"

namespace yfock {

// Sparse integer polynomial in up to four variables e1, e2, u, c.
// Monomials are ordered lexicographically with e1 highest; iteration over
// terms() starts at the leading monomial.
inline constexpr int kMaxVars = 4;
using Exp = std::array<int, kMaxVars>;
extern const char* const kVarNames[kMaxVars];

struct ExpLexGreater {
    bool operator()(const Exp& a, const Exp& b) const { return a > b; }
};

class IntPoly {
public:
    using TermMap = std::map<Exp, mpz_class, ExpLexGreater>;

    IntPoly() = default;
    IntPoly(long v);
    IntPoly(const mpz_class& v);
    static IntPoly variable(int idx);
    static IntPoly monomial(const mpz_class& coeff, const Exp& e);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    int degree(int var) const;
    const mpz_class& leading_coeff() const;
    const Exp& leading_exp() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    // Integer content, nonnegative; zero for the zero polynomial.
    mpz_class content() const;
    // Exact division; throws domain_error when the division does not come out
    // exactly (callers only divide by known factors).
    IntPoly divexact(const IntPoly& d) const;
    bool divisible_by(const IntPoly& d) const;
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    // e2 := -e1; the image lives in the single variable e1.
    IntPoly subst_e2_neg_e1() const;
    mpq_class eval(const std::array<mpq_class, kMaxVars>& point) const;

    std::string to_string() const;

private:
    void add_term(const Exp& e, const mpz_class& c);
    TermMap terms_;
};

std::string monomial_to_string(const mpz_class& coeff, const Exp& e,
                               bool leading);

} // namespace yfock
