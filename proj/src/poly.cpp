#include "yfock/poly.hpp"

#include <vector>

namespace yfock {

const char* const kVarNames[kMaxVars] = {"e1", "e2", "u", "c"};

namespace {

const Exp kZeroExp = {0, 0, 0, 0};

mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace

IntPoly::IntPoly(long v) {
    if (v != 0) terms_[kZeroExp] = v;
}

IntPoly::IntPoly(const mpz_class& v) {
    if (v != 0) terms_[kZeroExp] = v;
}

IntPoly IntPoly::variable(int idx) {
    if (idx < 0 || idx >= kMaxVars) throw domain_error("variable index out of range");
    Exp e = kZeroExp;
    e[idx] = 1;
    IntPoly p;
    p.terms_[e] = 1;
    return p;
}

IntPoly IntPoly::monomial(const mpz_class& coeff, const Exp& e) {
    IntPoly p;
    if (coeff != 0) p.terms_[e] = coeff;
    return p;
}

bool IntPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == kZeroExp &&
           terms_.begin()->second == 1;
}

bool IntPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == kZeroExp);
}

int IntPoly::degree(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

const mpz_class& IntPoly::leading_coeff() const {
    static const mpz_class zero = 0;
    return terms_.empty() ? zero : terms_.begin()->second;
}

const Exp& IntPoly::leading_exp() const {
    static const Exp zero = kZeroExp;
    return terms_.empty() ? zero : terms_.begin()->first;
}

void IntPoly::add_term(const Exp& e, const mpz_class& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    r += o;
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    r -= o;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exp e;
            for (int k = 0; k < kMaxVars; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        g = zgcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw domain_error("division by zero polynomial");
    IntPoly rem = *this, quot;
    while (!rem.is_zero()) {
        const Exp& re = rem.leading_exp();
        const Exp& de = d.leading_exp();
        Exp qe;
        for (int k = 0; k < kMaxVars; ++k) {
            qe[k] = re[k] - de[k];
            if (qe[k] < 0) throw domain_error("inexact polynomial division");
        }
        mpz_class qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(),
                    rem.leading_coeff().get_mpz_t(),
                    d.leading_coeff().get_mpz_t());
        if (r != 0) throw domain_error("inexact polynomial division");
        IntPoly m = monomial(qc, qe);
        quot += m;
        rem -= m * d;
    }
    return quot;
}

bool IntPoly::divisible_by(const IntPoly& d) const {
    try {
        (void)divexact(d);
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

namespace {

// Univariate view in variable `var`: coefficient polynomials have that
// exponent cleared.
std::vector<IntPoly> to_univar(const IntPoly& p, int var) {
    std::vector<IntPoly> coeffs(p.degree(var) + 1);
    for (const auto& [e, c] : p.terms()) {
        Exp r = e;
        int d = r[var];
        r[var] = 0;
        coeffs[d] += IntPoly::monomial(c, r);
    }
    return coeffs;
}

IntPoly from_univar(const std::vector<IntPoly>& coeffs, int var) {
    IntPoly p;
    for (size_t d = 0; d < coeffs.size(); ++d) {
        for (const auto& [e, c] : coeffs[d].terms()) {
            Exp r = e;
            r[var] = static_cast<int>(d);
            p += IntPoly::monomial(c, r);
        }
    }
    return p;
}

int true_degree(const std::vector<IntPoly>& u) {
    for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
        if (!u[d].is_zero()) return d;
    return -1;
}

IntPoly poly_content(const std::vector<IntPoly>& u) {
    IntPoly g;
    for (const auto& c : u) g = IntPoly::gcd(g, c);
    return g;
}

std::vector<IntPoly> divide_all(const std::vector<IntPoly>& u, const IntPoly& g) {
    std::vector<IntPoly> r(u.size());
    for (size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero()) r[k] = u[k].divexact(g);
    return r;
}

// Pseudo-remainder of a by b in the univariate view.
std::vector<IntPoly> pseudo_rem(std::vector<IntPoly> a,
                                const std::vector<IntPoly>& b) {
    int db = true_degree(b);
    const IntPoly& lb = b[db];
    int da = true_degree(a);
    while (da >= db) {
        IntPoly la = a[da];
        for (int k = 0; k <= da; ++k)
            if (!a[k].is_zero()) a[k] = a[k] * lb;
        for (int k = 0; k <= db; ++k)
            a[da - db + k] -= la * b[k];
        a[da] = IntPoly();
        da = true_degree(a);
    }
    a.resize(da + 1);
    return a;
}

} // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    auto normalize = [](IntPoly p) {
        if (!p.is_zero() && p.leading_coeff() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);

    int var = -1;
    for (int k = 0; k < kMaxVars; ++k) {
        if (a.degree(k) > 0 || b.degree(k) > 0) {
            var = k;
            break;
        }
    }
    if (var < 0) return IntPoly(zgcd(a.leading_coeff(), b.leading_coeff()));

    auto ua = to_univar(a, var);
    auto ub = to_univar(b, var);
    IntPoly ca = poly_content(ua);
    IntPoly cb = poly_content(ub);
    IntPoly cg = gcd(ca, cb);
    ua = divide_all(ua, ca);
    ub = divide_all(ub, cb);

    if (true_degree(ua) < true_degree(ub)) std::swap(ua, ub);
    while (true) {
        int db = true_degree(ub);
        if (db < 0) break;
        if (db == 0) {
            // Both operands are primitive in `var`, so a remainder of
            // degree zero forces the primitive-part gcd down to 1.
            ua = {IntPoly(1)};
            break;
        }
        auto r = pseudo_rem(ua, ub);
        if (true_degree(r) >= 0) {
            IntPoly cr = poly_content(r);
            r = divide_all(r, cr);
        }
        ua = ub;
        ub = r;
    }
    return normalize(cg * from_univar(ua, var));
}

IntPoly IntPoly::subst_e2_neg_e1() const {
    IntPoly r;
    for (const auto& [e, c] : terms_) {
        Exp m = e;
        m[0] = e[0] + e[1];
        m[1] = 0;
        r.add_term(m, (e[1] % 2 == 0) ? c : mpz_class(-c));
    }
    return r;
}

mpq_class IntPoly::eval(const std::array<mpq_class, kMaxVars>& point) const {
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t(c);
        for (int k = 0; k < kMaxVars; ++k) {
            for (int j = 0; j < e[k]; ++j) t *= point[k];
        }
        acc += t;
    }
    return acc;
}

std::string monomial_to_string(const mpz_class& coeff, const Exp& e,
                               bool leading) {
    mpz_class a = coeff >= 0 ? coeff : mpz_class(-coeff);
    std::string s;
    if (leading) {
        if (coeff < 0) s += "-";
    } else {
        s += coeff < 0 ? " - " : " + ";
    }
    std::string vars;
    for (int k = 0; k < kMaxVars; ++k) {
        if (e[k] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += kVarNames[k];
        if (e[k] > 1) vars += "^" + std::to_string(e[k]);
    }
    if (vars.empty()) {
        s += a.get_str();
    } else if (a == 1) {
        s += vars;
    } else {
        s += a.get_str() + "*" + vars;
    }
    return s;
}

std::string IntPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool leading = true;
    for (const auto& [e, c] : terms_) {
        s += monomial_to_string(c, e, leading);
        leading = false;
    }
    return s;
}

} // namespace yfock
