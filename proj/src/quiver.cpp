#include "yfock/quiver.hpp"

#include <algorithm>

#include "yfock/error.hpp"
#include "yfock/poly.hpp"

namespace yfock {

Laurent2 Laurent2::monomial(int a, int b, const mpz_class& c) {
    Laurent2 p;
    p.add_term(a, b, c);
    return p;
}

void Laurent2::add_term(int a, int b, const mpz_class& c) {
    if (c == 0)
        return;
    auto it = terms_.find({a, b});
    if (it == terms_.end()) {
        terms_.emplace(Exp{a, b}, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Laurent2 Laurent2::operator+(const Laurent2& o) const {
    Laurent2 r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e.first, e.second, c);
    return r;
}

Laurent2 Laurent2::operator-(const Laurent2& o) const {
    Laurent2 r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e.first, e.second, -c);
    return r;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const {
    Laurent2 r;
    for (const auto& [e, c] : terms_)
        for (const auto& [f, d] : o.terms_)
            r.add_term(e.first + f.first, e.second + f.second, c * d);
    return r;
}

Laurent2 Laurent2::dual() const {
    Laurent2 r;
    for (const auto& [e, c] : terms_)
        r.add_term(-e.first, -e.second, c);
    return r;
}

Laurent2 Laurent2::component(int i, int N) const {
    if (N < 1)
        throw domain_error("N must be positive");
    int want = ((i % N) + N) % N;
    Laurent2 r;
    for (const auto& [e, c] : terms_)
        if ((((e.second - e.first) % N) + N) % N == want)
            r.add_term(e.first, e.second, c);
    return r;
}

std::string Laurent2::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    auto power = [](const char* v, int k) -> std::string {
        if (k == 0)
            return "";
        std::string p = v;
        if (k != 1)
            p += "^" + std::to_string(k);
        return p;
    };
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        std::string mono = power("t1", e.first);
        std::string m2 = power("t2", e.second);
        if (!mono.empty() && !m2.empty())
            mono += "*";
        mono += m2;
        if (mono.empty())
            s += a.get_str();
        else if (a == 1)
            s += mono;
        else
            s += a.get_str() + "*" + mono;
    }
    return s;
}

Laurent2 diagram_character(const Partition& lam) {
    Laurent2 v;
    for (Cell s : lam.cells())
        v.add_term(s.first, s.second, 1);
    return v;
}

std::vector<std::pair<int, int>> tangent_weights(const Partition& lam, int N) {
    std::vector<std::pair<int, int>> w;
    for (Cell s : hook_divisible_cells(lam, N)) {
        ArmLegHook alh = arm_leg_hook(lam, s);
        w.emplace_back(alh.leg + 1, -alh.arm);
        w.emplace_back(-alh.leg, alh.arm + 1);
    }
    std::sort(w.begin(), w.end());
    return w;
}

Laurent2 tangent_character(const Partition& lam, int N) {
    Laurent2 t;
    for (auto [a, b] : tangent_weights(lam, N))
        t.add_term(a, b, 1);
    return t;
}

namespace {

// t1 + t2 - t1 t2 - 1
Laurent2 k_factor() {
    Laurent2 k;
    k.add_term(1, 0, 1);
    k.add_term(0, 1, 1);
    k.add_term(1, 1, -1);
    k.add_term(0, 0, -1);
    return k;
}

Laurent2 pairing_character(const Partition& mu, const Partition& lam, int N,
                           bool drop_diagonal_unit) {
    Laurent2 vl = diagram_character(lam);
    Laurent2 vmd = diagram_character(mu).dual();
    Laurent2 t1t2 = Laurent2::monomial(1, 1);
    Laurent2 n = k_factor() * vmd * vl + t1t2 * vl + vmd;
    if (drop_diagonal_unit)
        n = n - t1t2;
    return n.component(0, N);
}

} // namespace

Laurent2 grothendieck_tangent(const Partition& lam, int N) {
    return pairing_character(lam, lam, N, false);
}

Laurent2 normal_fiber(const Partition& mu, const Partition& lam, int N) {
    return pairing_character(mu, lam, N, true);
}

RatFun h_form(const Partition& lam, const Partition& mu, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    if (lam != mu)
        return RatFun(0);
    IntPoly e1 = IntPoly::variable(0), e2 = IntPoly::variable(1);
    RatFun f(1);
    for (Cell s : hook_divisible_cells(lam, N)) {
        ArmLegHook alh = arm_leg_hook(lam, s);
        f *= RatFun((IntPoly(alh.leg + 1) * e1 - IntPoly(alh.arm) * e2) *
                    (IntPoly(alh.leg) * e1 - IntPoly(alh.arm + 1) * e2));
    }
    return f;
}

RatFun bprime_normalization(const Partition& lam, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    IntPoly e1 = IntPoly::variable(0), e2 = IntPoly::variable(1);
    RatFun f(1);
    for (Cell s : hook_divisible_cells(lam, N)) {
        ArmLegHook alh = arm_leg_hook(lam, s);
        f *= RatFun(IntPoly(1),
                    IntPoly(alh.leg + 1) * e1 - IntPoly(alh.arm) * e2);
    }
    return f;
}

RatFun b_normalization(const Partition& lam, int N) {
    RatFun f = bprime_normalization(lam, N);
    return epsilon_sign(lam, N) % 2 ? -f : f;
}

namespace {

RatFun lin(int p, int q) {
    return RatFun(IntPoly(p) * IntPoly::variable(0) +
                  IntPoly(q) * IntPoly::variable(1));
}

RatFun weight_power(Cell s, int r) {
    return r == 0 ? RatFun(1) : lin(s.first, s.second).pow(r);
}

RatFun sign_of(int parity) { return RatFun(parity % 2 ? -1 : 1); }

// prod over cells of (e1(x - x' + d) + e2(y - y' + d)) relative to the pivot.
RatFun shifted_product(Cell pivot, const std::vector<Cell>& cells, int d) {
    RatFun p(1);
    for (Cell s : cells)
        p *= lin(pivot.first - s.first + d, pivot.second - s.second + d);
    return p;
}

void require_modes(int i, int r, int N) {
    if (N < 2)
        throw domain_error("fixed-point modes need N >= 2");
    if (i < 0 || i >= N)
        throw domain_error("mode index i out of range");
    if (r < 0)
        throw domain_error("mode degree r must be >= 0");
}

} // namespace

std::map<Partition, RatFun> fixed_point_action(bool raising, int i, int r,
                                               const Partition& lam, int N) {
    require_modes(i, r, N);
    std::map<Partition, RatFun> out;
    int vi = cell_count_residue(lam, i, N);
    int vi1 = cell_count_residue(lam, (i + 1) % N, N);
    if (raising) {
        for (Cell s : removable_cells(lam, i, N)) {
            Partition mu = lam.with_cell_removed(s);
            auto adds = addable_cells(lam, i, N);
            auto rems = removable_cells(mu, i, N);
            RatFun c = sign_of(vi - vi1 + static_cast<int>(adds.size()) -
                               static_cast<int>(rems.size())) *
                       weight_power(s, r) * shifted_product(s, adds, 1) /
                       shifted_product(s, rems, 0);
            if (!c.is_zero())
                out.emplace(mu, c);
        }
    } else {
        for (Cell s : addable_cells(lam, i, N)) {
            Partition up = lam.with_cell_added(s);
            auto adds = addable_cells(up, i, N);
            auto rems = removable_cells(lam, i, N);
            RatFun c = sign_of(vi - vi1 + 1 + static_cast<int>(adds.size()) -
                               static_cast<int>(rems.size())) *
                       weight_power(s, r) * shifted_product(s, rems, -1) /
                       shifted_product(s, adds, 0);
            if (!c.is_zero())
                out.emplace(up, c);
        }
    }
    return out;
}

std::map<Partition, RatFun> bprime_action(bool raising, int i, int r,
                                          const Partition& lam, int N) {
    require_modes(i, r, N);
    std::map<Partition, RatFun> out;
    int vi = cell_count_residue(lam, i, N);
    int vi1 = cell_count_residue(lam, (i + 1) % N, N);
    if (raising) {
        for (Cell s : removable_cells(lam, i, N)) {
            Partition mu = lam.with_cell_removed(s);
            auto [al, ar] = split_left_right(addable_cells(lam, i, N), s);
            auto [rl, rr] = split_left_right(removable_cells(mu, i, N), s);
            RatFun c = sign_of(vi - vi1 + static_cast<int>(al.size()) -
                               static_cast<int>(rl.size())) *
                       weight_power(s, r) * shifted_product(s, ar, 1) /
                       shifted_product(s, ar, 0) * shifted_product(s, rr, -1) /
                       shifted_product(s, rr, 0);
            if (!c.is_zero())
                out.emplace(mu, c);
        }
    } else {
        for (Cell s : addable_cells(lam, i, N)) {
            Partition up = lam.with_cell_added(s);
            auto [al, ar] = split_left_right(addable_cells(up, i, N), s);
            auto [rl, rr] = split_left_right(removable_cells(lam, i, N), s);
            RatFun c = sign_of(vi - vi1 + 1 + static_cast<int>(al.size()) -
                               static_cast<int>(rl.size())) *
                       weight_power(s, r) * shifted_product(s, al, 1) /
                       shifted_product(s, al, 0) * shifted_product(s, rl, -1) /
                       shifted_product(s, rl, 0);
            if (!c.is_zero())
                out.emplace(up, c);
        }
    }
    return out;
}

bool vv_weight_identities(const Partition& lam, int i, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    Laurent2 v = diagram_character(lam);
    Laurent2 k = k_factor();
    Laurent2 unit = Laurent2::monomial(0, 0);
    Laurent2 t1t2 = Laurent2::monomial(1, 1);

    Laurent2 lhs1 = (k * v + unit).component(i, N);
    Laurent2 lhs2 = (k * v.dual() + t1t2).component(-i, N);

    Laurent2 rhs1, rhs2;
    for (Cell s : addable_cells(lam, i, N)) {
        rhs1.add_term(s.first, s.second, 1);
        rhs2.add_term(1 - s.first, 1 - s.second, 1);
    }
    for (Cell s : removable_cells(lam, i, N)) {
        rhs1.add_term(s.first + 1, s.second + 1, -1);
        rhs2.add_term(-s.first, -s.second, -1);
    }
    return lhs1 == rhs1 && lhs2 == rhs2;
}

} // namespace yfock
