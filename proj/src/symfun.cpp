#include "yfock/symfun.hpp"

#include <mutex>
#include <utility>
#include <vector>

namespace yfock {

namespace {

const char* basis_name(SymBasis b) {
    return b == SymBasis::SCHUR ? "schur" : "power";
}

} // namespace

SymFun SymFun::unit(SymBasis basis, const Partition& lam) {
    SymFun f(basis);
    f.add_term(lam, RatFun(1));
    return f;
}

int SymFun::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.begin()->first.size();
}

void SymFun::add_term(const Partition& lam, const RatFun& c) {
    if (c.is_zero())
        return;
    if (!coeffs_.empty() && lam.size() != degree())
        throw domain_error("mixed degrees in one symmetric function");
    auto it = coeffs_.find(lam);
    if (it == coeffs_.end()) {
        coeffs_.emplace(lam, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

RatFun SymFun::coeff(const Partition& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? RatFun(0) : it->second;
}

SymFun SymFun::operator+(const SymFun& o) const {
    if (basis_ != o.basis_)
        throw domain_error(std::string("cannot add ") + basis_name(basis_) +
                           " and " + basis_name(o.basis_) + " expansions");
    SymFun r = *this;
    for (const auto& [lam, c] : o.coeffs_)
        r.add_term(lam, c);
    return r;
}

SymFun SymFun::operator-(const SymFun& o) const {
    if (basis_ != o.basis_)
        throw domain_error(std::string("cannot subtract ") +
                           basis_name(o.basis_) + " from " +
                           basis_name(basis_) + " expansions");
    SymFun r = *this;
    for (const auto& [lam, c] : o.coeffs_)
        r.add_term(lam, -c);
    return r;
}

SymFun SymFun::operator*(const RatFun& c) const {
    SymFun r(basis_);
    if (c.is_zero())
        return r;
    for (const auto& [lam, v] : coeffs_)
        r.coeffs_.emplace(lam, v * c);
    return r;
}

mpz_class z_factor(const Partition& lam) {
    mpz_class z = 1;
    const auto& p = lam.parts();
    for (size_t a = 0; a < p.size();) {
        size_t b = a;
        while (b < p.size() && p[b] == p[a])
            ++b;
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(b - a));
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[a]),
                      static_cast<unsigned long>(b - a));
        z *= fact * pw;
        a = b;
    }
    return z;
}

int count_parts_divisible(const Partition& lam, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    int n = 0;
    for (int p : lam.parts())
        if (p % N == 0)
            ++n;
    return n;
}

namespace {

std::vector<int> beta_numbers(const Partition& lam) {
    int k = lam.length();
    std::vector<int> beta(k);
    for (int a = 1; a <= k; ++a)
        beta[a - 1] = lam.part(a) + k - a;
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int k = static_cast<int>(beta.size());
    std::vector<int> parts(k);
    for (int a = 1; a <= k; ++a)
        parts[a - 1] = beta[a - 1] - (k - a);
    return Partition(std::move(parts));
}

std::mutex char_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> char_cache;

// Murnaghan-Nakayama over beta numbers: peel a border strip of length equal
// to the first part of mu.
mpz_class character_rec(const Partition& lam, const Partition& mu) {
    if (mu.length() == 0)
        return 1;
    auto key = std::make_pair(lam.parts(), mu.parts());
    {
        std::lock_guard<std::mutex> lock(char_mutex);
        auto it = char_cache.find(key);
        if (it != char_cache.end())
            return it->second;
    }
    int r = mu.part(1);
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    Partition mu_rest(std::move(rest));

    std::vector<int> beta = beta_numbers(lam);
    mpz_class total = 0;
    for (size_t idx = 0; idx < beta.size(); ++idx) {
        int b = beta[idx];
        if (b < r)
            continue;
        int target = b - r;
        bool occupied = false;
        int height = 0;
        for (int c : beta) {
            if (c == target)
                occupied = true;
            if (target < c && c < b)
                ++height;
        }
        if (occupied)
            continue;
        std::vector<int> nb = beta;
        nb[idx] = target;
        mpz_class sub = character_rec(partition_from_beta(std::move(nb)),
                                      mu_rest);
        if (height % 2)
            total -= sub;
        else
            total += sub;
    }
    std::lock_guard<std::mutex> lock(char_mutex);
    char_cache.emplace(std::move(key), total);
    return total;
}

} // namespace

mpz_class character_value(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw domain_error("character requires partitions of equal size");
    return character_rec(lam, mu);
}

SymFun schur_to_power(const Partition& lam) {
    SymFun f(SymBasis::POWER);
    for (const Partition& mu : partitions_of(lam.size())) {
        mpq_class q(character_value(lam, mu), z_factor(mu));
        q.canonicalize();
        f.add_term(mu, RatFun(q));
    }
    return f;
}

SymFun power_to_schur(const Partition& mu) {
    SymFun f(SymBasis::SCHUR);
    for (const Partition& lam : partitions_of(mu.size()))
        f.add_term(lam, RatFun(character_value(lam, mu)));
    return f;
}

SymFun convert(const SymFun& f, SymBasis target) {
    if (f.basis() == target)
        return f;
    SymFun r(target);
    for (const auto& [lam, c] : f.coeffs()) {
        SymFun expanded = target == SymBasis::POWER ? schur_to_power(lam)
                                                    : power_to_schur(lam);
        r = r + expanded * c;
    }
    return r;
}

RatFun uglov_form(const SymFun& f, const SymFun& g, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    if (f.is_zero() || g.is_zero() || f.degree() != g.degree())
        return RatFun(0);
    SymFun fp = convert(f, SymBasis::POWER);
    SymFun gp = convert(g, SymBasis::POWER);
    RatFun ratio(-IntPoly::variable(1), IntPoly::variable(0));
    RatFun total(0);
    for (const auto& [lam, c] : fp.coeffs()) {
        RatFun d = gp.coeff(lam);
        if (d.is_zero())
            continue;
        total += c * d * RatFun(z_factor(lam)) *
                 ratio.pow(count_parts_divisible(lam, N));
    }
    return total;
}

namespace {

std::mutex jack_mutex;
std::map<std::pair<int, Partition>, SymFun> jack_cache;
std::map<std::pair<int, Partition>, RatFun> jack_norm_cache;

} // namespace

SymFun jack_glN(const Partition& lam, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    std::lock_guard<std::mutex> lock(jack_mutex);
    auto key = std::make_pair(N, lam);
    auto hit = jack_cache.find(key);
    if (hit != jack_cache.end())
        return hit->second;

    // Gram-Schmidt over the whole degree, processed in ascending order so
    // that each element is corrected only against already-built ones.
    for (const Partition& nu : partitions_of(lam.size())) {
        auto nu_key = std::make_pair(N, nu);
        if (jack_cache.count(nu_key))
            continue;
        SymFun p = SymFun::unit(SymBasis::SCHUR, nu);
        for (const auto& [mkey, pm] : jack_cache) {
            if (mkey.first != N || mkey.second.size() != nu.size())
                continue;
            RatFun proj = uglov_form(p, pm, N);
            if (proj.is_zero())
                continue;
            p = p - pm * (proj / jack_norm_cache.at(mkey));
        }
        RatFun norm = uglov_form(p, p, N);
        if (norm.is_zero())
            throw domain_error("degenerate pairing in basis construction");
        jack_cache.emplace(nu_key, p);
        jack_norm_cache.emplace(nu_key, norm);
    }
    return jack_cache.at(key);
}

RatFun jack_norm_formula(const Partition& lam, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    IntPoly e1 = IntPoly::variable(0), e2 = IntPoly::variable(1);
    IntPoly num(1), den(1);
    for (Cell s : hook_divisible_cells(lam, N)) {
        ArmLegHook alh = arm_leg_hook(lam, s);
        num = num * (IntPoly(alh.leg) * e1 - IntPoly(alh.arm + 1) * e2);
        den = den * (IntPoly(alh.leg + 1) * e1 - IntPoly(alh.arm) * e2);
    }
    return RatFun(num, den);
}

std::map<Partition, RatFun> schur_in_jack(const Partition& lam, int N) {
    SymFun s = SymFun::unit(SymBasis::SCHUR, lam);
    std::map<Partition, RatFun> out;
    for (const Partition& mu : partitions_of(lam.size())) {
        SymFun pm = jack_glN(mu, N);
        RatFun c = uglov_form(s, pm, N) / uglov_form(pm, pm, N);
        if (!c.is_zero())
            out.emplace(mu, c);
    }
    return out;
}

namespace {

RatFun eps_form(int p, int q) {
    return RatFun(IntPoly(p) * IntPoly::variable(0) +
                  IntPoly(q) * IntPoly::variable(1));
}

RatFun hook_product(const Partition& lam, int N, bool lower) {
    IntPoly e1 = IntPoly::variable(0), e2 = IntPoly::variable(1);
    IntPoly prod(1);
    for (Cell s : hook_divisible_cells(lam, N)) {
        ArmLegHook alh = arm_leg_hook(lam, s);
        prod = prod * (lower
                           ? IntPoly(alh.leg) * e1 - IntPoly(alh.arm + 1) * e2
                           : IntPoly(alh.leg + 1) * e1 - IntPoly(alh.arm) * e2);
    }
    return RatFun(prod);
}

} // namespace

RatFun lemma_ratio(const Partition& lam, int i, Cell cell, int N,
                   RatioPart which) {
    if (N < 1)
        throw domain_error("N must be positive");
    std::vector<Cell> rem = removable_cells(lam, i, N);
    if (std::find(rem.begin(), rem.end(), cell) == rem.end())
        throw domain_error("cell is not removable with the given residue");
    Partition mu = lam.with_cell_removed(cell);
    auto [al, ar] = split_left_right(addable_cells(lam, i, N), cell);
    auto [rl, rr] = split_left_right(removable_cells(mu, i, N), cell);
    int x = cell.first, y = cell.second;

    auto prod_over = [&](const std::vector<Cell>& cs, int shift) {
        RatFun p(1);
        for (Cell s : cs)
            p *= eps_form(x - s.first + shift, y - s.second + shift);
        return p;
    };

    RatFun lhs, rhs;
    bool flip = (ar.size() + rr.size()) % 2 != 0;
    switch (which) {
    case RatioPart::I:
        lhs = hook_product(lam, N, true) / hook_product(mu, N, true);
        rhs = (prod_over(al, 0) / prod_over(rl, -1)) *
              (prod_over(ar, 1) / prod_over(rr, 0));
        break;
    case RatioPart::II:
        lhs = hook_product(mu, N, false) / hook_product(lam, N, false);
        rhs = (prod_over(rl, 0) / prod_over(al, 1)) *
              (prod_over(rr, -1) / prod_over(ar, 0));
        break;
    case RatioPart::III:
        lhs = jack_norm_formula(lam, N) / jack_norm_formula(mu, N);
        rhs = (prod_over(al, 0) / prod_over(al, 1)) *
              (prod_over(ar, 1) / prod_over(ar, 0)) *
              (prod_over(rl, 0) / prod_over(rl, -1)) *
              (prod_over(rr, -1) / prod_over(rr, 0));
        flip = false;
        break;
    }
    if (flip)
        rhs = -rhs;
    if (lhs != rhs)
        throw domain_error("hook ratio identity failed");
    return lhs;
}

} // namespace yfock
