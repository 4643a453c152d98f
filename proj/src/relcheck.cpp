#include "yfock/relcheck.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "yfock/error.hpp"
#include "yfock/symfun.hpp"

namespace yfock {

namespace {

RatFun e_var(int k) { return RatFun(IntPoly::variable(k)); }

RatFun hbar() { return e_var(0) + e_var(1); }

struct Term {
    RatFun coeff;
    std::vector<OperatorId> word;
};
using Elt = std::vector<Term>;

Elt gen(OperatorId op) { return {{RatFun(1), {op}}}; }

Elt scale(Elt a, const RatFun& c) {
    for (auto& t : a)
        t.coeff *= c;
    return a;
}

Elt add(Elt a, const Elt& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Elt sub(Elt a, const Elt& b) {
    return add(std::move(a), scale(b, RatFun(-1)));
}

Elt mul(const Elt& a, const Elt& b) {
    Elt out;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            Term t{ta.coeff * tb.coeff, ta.word};
            t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
            out.push_back(std::move(t));
        }
    return out;
}

Elt comm(const Elt& a, const Elt& b) { return sub(mul(a, b), mul(b, a)); }

// [c_0, [c_1, ... [c_{k-1}, tail]...]]
Elt nested_comm(const std::vector<OperatorId>& chain) {
    Elt acc = gen(chain.back());
    for (int k = static_cast<int>(chain.size()) - 2; k >= 0; --k)
        acc = comm(gen(chain[k]), acc);
    return acc;
}

using CoeffList = std::vector<std::pair<Partition, RatFun>>;

const CoeffList& unit_act(const OperatorId& op, const Partition& lam, int N,
                          FockBasis basis) {
    using Key = std::tuple<int, int, int, int, std::vector<int>>;
    thread_local std::map<Key, CoeffList> cache;
    Key key{static_cast<int>(op.family), op.i, op.r, N, lam.parts()};
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    FockVec out = act(op, FockVec::unit(basis, lam), N);
    CoeffList flat(out.coeffs().begin(), out.coeffs().end());
    return cache.emplace(std::move(key), std::move(flat)).first->second;
}

using VecMap = std::map<Partition, RatFun>;

VecMap apply_word(const std::vector<OperatorId>& word, const Partition& lam,
                  int N, FockBasis basis) {
    VecMap cur{{lam, RatFun(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        VecMap next;
        for (const auto& [mu, c] : cur)
            for (const auto& [nu, d] : unit_act(*it, mu, N, basis))
                next[nu] += c * d;
        for (auto e = next.begin(); e != next.end();)
            e = e->second.is_zero() ? next.erase(e) : std::next(e);
        cur = std::move(next);
    }
    return cur;
}

VecMap evaluate(const Elt& elt, const Partition& lam, int N,
                FockBasis basis) {
    VecMap acc;
    for (const auto& term : elt)
        for (const auto& [nu, d] : apply_word(term.word, lam, N, basis))
            acc[nu] += term.coeff * d;
    for (auto e = acc.begin(); e != acc.end();)
        e = e->second.is_zero() ? acc.erase(e) : std::next(e);
    return acc;
}

enum class Family { AFFINE_YANGIAN, DRINFELD, CHEVALLEY };

Family family_of(const std::string& id) {
    if (id.rfind("eq:", 0) == 0)
        return Family::AFFINE_YANGIAN;
    if (id.rfind("sl:", 0) == 0)
        return Family::DRINFELD;
    if (id.rfind("aff:", 0) == 0)
        return Family::CHEVALLEY;
    throw domain_error("unknown relation id: " + id);
}

FockBasis basis_of(Family f) {
    switch (f) {
    case Family::AFFINE_YANGIAN: return FockBasis::BFIX;
    case Family::DRINFELD: return FockBasis::JACK;
    default: return FockBasis::SCHUR;
    }
}

int cartan_affine(int i, int j, int N) {
    if (N == 2)
        return i == j ? 2 : -2;
    if (i == j)
        return 2;
    if (j == (i + 1) % N || j == (i - 1 + N) % N)
        return -1;
    return 0;
}

int cartan_finite(int i, int j) {
    if (i == j)
        return 2;
    return std::abs(i - j) == 1 ? -1 : 0;
}

void require(bool cond, const char* msg) {
    if (!cond)
        throw domain_error(msg);
}

void require_modes(const RelationInstance& inst, size_t n) {
    require(inst.modes.size() == n, "wrong number of modes");
    for (int r : inst.modes)
        require(r >= 0, "modes must be nonnegative");
}

void require_sign(const RelationInstance& inst) {
    require(inst.sign == 1 || inst.sign == -1, "relation needs a sign");
}

// Serre sum over all permutations of the chain modes.
Elt serre_sum(OpFamily xf, int i, int j, const std::vector<int>& modes) {
    int k = static_cast<int>(modes.size()) - 1;
    int s = modes[k];
    std::vector<int> idx(k);
    for (int t = 0; t < k; ++t)
        idx[t] = t;
    Elt total;
    do {
        std::vector<OperatorId> chain;
        for (int t = 0; t < k; ++t)
            chain.push_back(OperatorId{xf, i, modes[idx[t]]});
        chain.push_back(OperatorId{xf, j, s});
        total = add(std::move(total), nested_comm(chain));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return total;
}

// Zero form of the instance's relation as a free-algebra element.
Elt relation_terms(const RelationInstance& inst) {
    const std::string& id = inst.id;
    Family fam = family_of(id);
    int N = inst.N;
    require(N >= 2, "relation suites need N >= 2");
    if (inst.mutation != 0)
        require(fam == Family::AFFINE_YANGIAN &&
                    (id == "eq:12" || id == "eq:13" || id == "eq:14" ||
                     id == "eq:15"),
                "no mutation points for this relation");

    auto wrap = [N](int k) { return ((k % N) + N) % N; };
    OpFamily XP, XM, HH;
    switch (fam) {
    case Family::AFFINE_YANGIAN:
        XP = OpFamily::AY_XP; XM = OpFamily::AY_XM; HH = OpFamily::AY_H;
        require(inst.i >= 0 && inst.i < N && inst.j >= 0 && inst.j < N,
                "index out of range");
        break;
    case Family::DRINFELD:
        XP = OpFamily::YSL_XP; XM = OpFamily::YSL_XM; HH = OpFamily::YSL_H;
        require(inst.i >= 1 && inst.i <= N - 1, "index out of range");
        require(id == "sl:1" || (inst.j >= 1 && inst.j <= N - 1),
                "index out of range");
        break;
    default:
        XP = OpFamily::AFFINE_E; XM = OpFamily::AFFINE_F;
        HH = OpFamily::AFFINE_H;
        require(inst.i >= 0 && inst.i < N && inst.j >= 0 && inst.j < N,
                "index out of range");
        break;
    }
    auto xp = [&](int i, int r) { return gen(OperatorId{XP, i, r}); };
    auto xm = [&](int i, int r) { return gen(OperatorId{XM, i, r}); };
    auto hh = [&](int i, int r) { return gen(OperatorId{HH, i, r}); };
    auto xs = [&](int i, int r) {
        return inst.sign > 0 ? xp(i, r) : xm(i, r);
    };
    const auto& md = inst.modes;
    RatFun e1 = e_var(0), e2 = e_var(1);

    if (fam == Family::AFFINE_YANGIAN) {
        if (N == 2) {
            static const char* allowed[] = {"eq:1", "eq:2",  "eq:3",  "eq:5",
                                            "eq:11", "eq:16", "eq:17", "eq:18"};
            bool ok = false;
            for (const char* a : allowed)
                ok = ok || id == a;
            require(ok, "relation not in the N=2 presentation");
        } else {
            require(id != "eq:17" && id != "eq:18",
                    "relation only exists for N=2");
        }
    }

    auto neighbor_pm = [&](int delta) {
        require(inst.j == wrap(inst.i + delta), "wrong neighbor index");
    };

    // Twisted-pair right sides: base - sum of two products, with the
    // mutation hook flipping one product's sign.
    auto base_minus_products = [&](Elt base, const RatFun& c1, Elt w1,
                                   const RatFun& c2, Elt w2) {
        RatFun f1 = inst.mutation == 1 ? -c1 : c1;
        RatFun f2 = inst.mutation == 2 ? -c2 : c2;
        return sub(sub(std::move(base), scale(std::move(w1), f1)),
                   scale(std::move(w2), f2));
    };

    if (id == "eq:1" || id == "sl:1") {
        require_modes(inst, 2);
        return comm(hh(inst.i, md[0]), hh(inst.j, md[1]));
    }
    if (id == "eq:2" || id == "sl:2") {
        require_modes(inst, 2);
        Elt z = comm(xp(inst.i, md[0]), xm(inst.j, md[1]));
        if (inst.i == inst.j)
            z = sub(std::move(z), hh(inst.i, md[0] + md[1]));
        return z;
    }
    if (id == "eq:3" || id == "sl:3") {
        require_modes(inst, 1);
        require_sign(inst);
        int a = fam == Family::AFFINE_YANGIAN
                    ? cartan_affine(inst.i, inst.j, N)
                    : cartan_finite(inst.i, inst.j);
        Elt g = xs(inst.j, md[0]);
        return sub(comm(hh(inst.i, 0), g), scale(g, RatFun(inst.sign * a)));
    }
    if (id == "eq:4") {
        require_modes(inst, 2);
        require_sign(inst);
        require(cartan_affine(inst.i, inst.j, N) == 0 && inst.i != inst.j,
                "indices must be distant");
        return sub(comm(hh(inst.i, md[0] + 1), xs(inst.j, md[1])),
                   comm(hh(inst.i, md[0]), xs(inst.j, md[1] + 1)));
    }
    if (id == "eq:5") {
        require_modes(inst, 2);
        require_sign(inst);
        require(inst.j == inst.i, "diagonal relation");
        int r = md[0], s = md[1];
        Elt base = sub(comm(hh(inst.i, r + 1), xs(inst.i, s)),
                       comm(hh(inst.i, r), xs(inst.i, s + 1)));
        RatFun c = RatFun(inst.sign) * hbar();
        return base_minus_products(std::move(base), c,
                                   mul(hh(inst.i, r), xs(inst.i, s)), c,
                                   mul(xs(inst.i, s), hh(inst.i, r)));
    }
    if (id == "eq:6" || id == "eq:7" || id == "eq:8" || id == "eq:9") {
        require_modes(inst, 2);
        bool plus = id == "eq:6" || id == "eq:7";
        neighbor_pm(id == "eq:6" || id == "eq:8" ? -1 : 1);
        int r = md[0], s = md[1];
        auto g = [&](int t) {
            return plus ? xp(inst.j, t) : xm(inst.j, t);
        };
        Elt base = sub(comm(hh(inst.i, r + 1), g(s)),
                       comm(hh(inst.i, r), g(s + 1)));
        RatFun c1, c2;
        if (id == "eq:6") { c1 = -e1; c2 = -e2; }
        if (id == "eq:7") { c1 = -e2; c2 = -e1; }
        if (id == "eq:8") { c1 = e2; c2 = e1; }
        if (id == "eq:9") { c1 = e1; c2 = e2; }
        return base_minus_products(std::move(base), c1,
                                   mul(hh(inst.i, r), g(s)), c2,
                                   mul(g(s), hh(inst.i, r)));
    }
    if (id == "eq:10") {
        require_modes(inst, 2);
        require_sign(inst);
        require(cartan_affine(inst.i, inst.j, N) == 0 && inst.i != inst.j,
                "indices must be distant");
        return sub(comm(xs(inst.i, md[0] + 1), xs(inst.j, md[1])),
                   comm(xs(inst.i, md[0]), xs(inst.j, md[1] + 1)));
    }
    if (id == "eq:11") {
        require_modes(inst, 2);
        require_sign(inst);
        require(inst.j == inst.i, "diagonal relation");
        int r = md[0], s = md[1];
        Elt base = sub(comm(xs(inst.i, r + 1), xs(inst.i, s)),
                       comm(xs(inst.i, r), xs(inst.i, s + 1)));
        RatFun c = RatFun(inst.sign) * hbar();
        return base_minus_products(std::move(base), c,
                                   mul(xs(inst.i, r), xs(inst.i, s)), c,
                                   mul(xs(inst.i, s), xs(inst.i, r)));
    }
    if (id == "eq:12" || id == "eq:13" || id == "eq:14" || id == "eq:15") {
        require_modes(inst, 2);
        bool plus = id == "eq:12" || id == "eq:13";
        neighbor_pm(id == "eq:12" || id == "eq:14" ? -1 : 1);
        int r = md[0], s = md[1];
        auto g = [&](int i, int t) { return plus ? xp(i, t) : xm(i, t); };
        Elt base = sub(comm(g(inst.i, r + 1), g(inst.j, s)),
                       comm(g(inst.i, r), g(inst.j, s + 1)));
        RatFun c1, c2;
        if (id == "eq:12") { c1 = -e1; c2 = -e2; }
        if (id == "eq:13") { c1 = -e2; c2 = -e1; }
        if (id == "eq:14") { c1 = e2; c2 = e1; }
        if (id == "eq:15") { c1 = e1; c2 = e2; }
        return base_minus_products(std::move(base), c1,
                                   mul(g(inst.i, r), g(inst.j, s)), c2,
                                   mul(g(inst.j, s), g(inst.i, r)));
    }
    if (id == "eq:16" || id == "sl:6") {
        require(inst.modes.size() >= 2, "wrong number of modes");
        for (int r : inst.modes)
            require(r >= 0, "modes must be nonnegative");
        require_sign(inst);
        require(inst.i != inst.j, "off-diagonal relation");
        int a = fam == Family::AFFINE_YANGIAN
                    ? cartan_affine(inst.i, inst.j, N)
                    : cartan_finite(inst.i, inst.j);
        require(static_cast<int>(inst.modes.size()) - 1 == 1 - a,
                "chain length must be 1 - a_ij");
        return serre_sum(inst.sign > 0 ? XP : XM, inst.i, inst.j, inst.modes);
    }
    if (id == "eq:17" || id == "eq:18") {
        require_modes(inst, 2);
        require_sign(inst);
        require(N == 2, "relation only exists for N=2");
        neighbor_pm(1);
        int r = md[0], s = md[1];
        auto g = [&](int t) { return xs(inst.j, t); };
        auto b = [&](int t) {
            return id == "eq:17" ? hh(inst.i, t) : xs(inst.i, t);
        };
        RatFun sh = RatFun(inst.sign) * hbar();
        Elt z = sub(comm(b(r + 2), g(s)),
                    scale(comm(b(r + 1), g(s + 1)), RatFun(2)));
        z = add(std::move(z), comm(b(r), g(s + 2)));
        z = add(std::move(z), scale(add(mul(b(r + 1), g(s)),
                                        mul(g(s), b(r + 1))), sh));
        z = sub(std::move(z), scale(add(mul(b(r), g(s + 1)),
                                        mul(g(s + 1), b(r))), sh));
        return add(std::move(z), scale(comm(b(r), g(s)), e1 * e2));
    }
    if (id == "sl:4" || id == "sl:5") {
        require_modes(inst, 2);
        require_sign(inst);
        int r = md[0], s = md[1];
        int a = cartan_finite(inst.i, inst.j);
        Elt lead = id == "sl:4" ? hh(inst.i, r) : xs(inst.i, r);
        Elt lead1 = id == "sl:4" ? hh(inst.i, r + 1) : xs(inst.i, r + 1);
        Elt base = sub(comm(lead1, xs(inst.j, s)),
                       comm(lead, xs(inst.j, s + 1)));
        RatFun c = RatFun(IntPoly(inst.sign * a), IntPoly(2)) * hbar();
        return base_minus_products(std::move(base), c,
                                   mul(lead, xs(inst.j, s)), c,
                                   mul(xs(inst.j, s), lead));
    }
    if (id == "aff:1") {
        require_modes(inst, 0);
        return comm(hh(inst.i, 0), hh(inst.j, 0));
    }
    if (id == "aff:2") {
        require_modes(inst, 0);
        Elt z = comm(xp(inst.i, 0), xm(inst.j, 0));
        if (inst.i == inst.j)
            z = sub(std::move(z), hh(inst.i, 0));
        return z;
    }
    if (id == "aff:3" || id == "aff:4") {
        require_modes(inst, 0);
        int a = cartan_affine(inst.i, inst.j, N);
        Elt g = id == "aff:3" ? xp(inst.j, 0) : xm(inst.j, 0);
        int c = id == "aff:3" ? a : -a;
        return sub(comm(hh(inst.i, 0), g), scale(g, RatFun(c)));
    }
    if (id == "aff:serre") {
        require_modes(inst, 0);
        require_sign(inst);
        require(inst.i != inst.j, "off-diagonal relation");
        int a = cartan_affine(inst.i, inst.j, N);
        int k = 1 - a;
        std::vector<int> modes(k + 1, 0);
        return serre_sum(inst.sign > 0 ? XP : XM, inst.i, inst.j, modes);
    }
    throw domain_error("unknown relation id: " + id);
}

CheckReport relation_report(const RelationInstance& inst) {
    Elt z = relation_terms(inst);
    FockBasis basis = basis_of(family_of(inst.id));
    const char* bname = basis == FockBasis::BFIX
                            ? "b"
                            : (basis == FockBasis::JACK ? "P" : "s");
    CheckReport rep;
    rep.instance = inst;
    rep.pass = true;
    for (int d = 0; d <= inst.D && rep.pass; ++d)
        for (const auto& lam : partitions_of(d)) {
            VecMap result = evaluate(z, lam, inst.N, basis);
            if (!result.empty()) {
                const auto& [nu, c] = *result.begin();
                rep.pass = false;
                rep.witness = CheckWitness{
                    lam, c,
                    std::string("coefficient of ") + bname + "_(" +
                        nu.to_string() + ")"};
                break;
            }
        }
    return rep;
}

std::vector<Cell> corner_cells(const Partition& lam) {
    std::vector<Cell> out;
    for (int a = 1; a <= lam.length(); ++a)
        if (lam.part(a) > lam.part(a + 1))
            out.push_back({a - 1, lam.part(a) - 1});
    return out;
}

CheckReport adjoint_report(const RelationInstance& inst) {
    int i = inst.i, N = inst.N;
    require(N >= 2, "relation suites need N >= 2");
    require(i >= 1 && i <= N - 1, "index out of range");
    require(inst.modes.size() == 1 && inst.modes[0] >= 0,
            "wrong number of modes");
    int r = inst.modes[0];
    CheckReport rep;
    rep.instance = inst;
    rep.pass = true;
    OperatorId up{OpFamily::YSL_XP, i, r};
    OperatorId dn{OpFamily::YSL_XM, i, r};
    OperatorId di{OpFamily::YSL_H, i, r};
    for (int d = 0; d <= inst.D && rep.pass; ++d)
        for (const auto& lam : partitions_of(d)) {
            FockVec hv = act(di, FockVec::unit(FockBasis::JACK, lam), N);
            for (const auto& [nu, c] : hv.coeffs())
                if (nu != lam) {
                    rep.pass = false;
                    rep.witness = CheckWitness{
                        lam, c, "diagonal family has off-diagonal entry"};
                    break;
                }
            if (!rep.pass)
                break;
            FockVec upl = act(up, FockVec::unit(FockBasis::JACK, lam), N);
            RatFun nl = jack_norm_formula(lam, N);
            for (Cell cell : corner_cells(lam)) {
                Partition mu = lam.with_cell_removed(cell);
                FockVec dnm = act(dn, FockVec::unit(FockBasis::JACK, mu), N);
                RatFun lhs = upl.coeff(mu) * jack_norm_formula(mu, N);
                RatFun rhs = dnm.coeff(lam) * nl;
                if (lhs != rhs) {
                    rep.pass = false;
                    rep.witness = CheckWitness{
                        lam, lhs - rhs,
                        "pairing mismatch against P_(" + mu.to_string() +
                            ")"};
                    break;
                }
            }
            if (!rep.pass)
                break;
        }
    return rep;
}

CheckReport appendix_report(const RelationInstance& inst) {
    CheckReport rep;
    rep.instance = inst;
    rep.pass = true;
    if (inst.id == "appendix-a") {
        RatFun e1 = e_var(0), e2 = e_var(1);
        RatFun w = e_var(2) - e_var(3);
        RatFun X = ((w - e1) * (w - e2)) / ((w + e1) * (w + e2));
        RatFun mid = hbar() * (X + RatFun(1)) * w;
        if (inst.mutation != 0)
            mid = -mid;
        RatFun expr = (X - RatFun(1)) * w * w + mid +
                      e1 * e2 * (X - RatFun(1));
        if (!expr.is_zero()) {
            rep.pass = false;
            rep.witness =
                CheckWitness{Partition(), expr,
                             "nonzero remainder " + expr.to_string()};
        }
        return rep;
    }
    if (inst.id == "appendix-b") {
        for (long a = 1; a <= 5; ++a)
            for (long x = 1; x <= 5; ++x)
                for (long y = 1; y <= 5; ++y) {
                    long ab = (a + x) * (a + y);
                    long ab2 = a * a + (x + y) * a + x * y;
                    long ba = (-a + x) * (-a + y);
                    long ba2 = a * a - (x + y) * a + x * y;
                    if (ab != ab2 || ba != ba2) {
                        rep.pass = false;
                        rep.witness = CheckWitness{
                            Partition(), RatFun(ab - ab2 + ba - ba2),
                            "grid point a=" + std::to_string(a) +
                                " e1=" + std::to_string(x) +
                                " e2=" + std::to_string(y)};
                        return rep;
                    }
                }
        return rep;
    }
    throw domain_error("unknown relation id: " + inst.id);
}

void push_ay(std::vector<RelationInstance>& out, int N, int D, int rmax) {
    if (N < 2)
        throw domain_error("affine Yangian checks need N >= 2");
    auto inst = [&](std::string id, int sign, int i, int j,
                    std::vector<int> modes) {
        out.push_back(RelationInstance{std::move(id), sign, i, j,
                                       std::move(modes), N, D, 0});
    };
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j)
            for (int r = 0; r <= rmax; ++r)
                for (int s = 0; s <= rmax; ++s)
                    if (i < j || r <= s)
                        inst("eq:1", 0, i, j, {r, s});
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int r = 0; r <= rmax; ++r)
                for (int s = 0; s <= rmax; ++s)
                    inst("eq:2", 0, i, j, {r, s});
    for (int sign : {1, -1})
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int r = 0; r <= rmax; ++r)
                    inst("eq:3", sign, i, j, {r});
    if (N >= 4)
        for (int sign : {1, -1})
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    if (i != j && cartan_affine(i, j, N) == 0)
                        for (int r = 0; r <= rmax; ++r)
                            for (int s = 0; s <= rmax; ++s)
                                inst("eq:4", sign, i, j, {r, s});
    for (int sign : {1, -1})
        for (int i = 0; i < N; ++i)
            for (int r = 0; r <= rmax; ++r)
                for (int s = 0; s <= rmax; ++s)
                    inst("eq:5", sign, i, i, {r, s});
    if (N >= 3)
        for (const char* id : {"eq:6", "eq:7", "eq:8", "eq:9"})
            for (int i = 0; i < N; ++i)
                for (int r = 0; r <= rmax; ++r)
                    for (int s = 0; s <= rmax; ++s) {
                        int delta =
                            (id[3] == '6' || id[3] == '8') ? -1 : 1;
                        int sign =
                            (id[3] == '6' || id[3] == '7') ? 1 : -1;
                        inst(id, sign, i, ((i + delta) % N + N) % N,
                             {r, s});
                    }
    if (N >= 4)
        for (int sign : {1, -1})
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j)
                    if (cartan_affine(i, j, N) == 0)
                        for (int r = 0; r <= rmax; ++r)
                            for (int s = 0; s <= rmax; ++s)
                                inst("eq:10", sign, i, j, {r, s});
    for (int sign : {1, -1})
        for (int i = 0; i < N; ++i)
            for (int r = 0; r <= rmax; ++r)
                for (int s = r; s <= rmax; ++s)
                    inst("eq:11", sign, i, i, {r, s});
    if (N >= 3)
        for (const char* id : {"eq:12", "eq:13", "eq:14", "eq:15"})
            for (int i = 0; i < N; ++i)
                for (int r = 0; r <= rmax; ++r)
                    for (int s = 0; s <= rmax; ++s) {
                        char c = id[3] == '1' ? id[4] : '0';
                        int delta = (c == '2' || c == '4') ? -1 : 1;
                        int sign = (c == '2' || c == '3') ? 1 : -1;
                        inst(id, sign, i, ((i + delta) % N + N) % N,
                             {r, s});
                    }
    // Serre chains: adjacent pairs everywhere, distant pairs once.
    for (int sign : {1, -1})
        for (int i = 0; i < N; ++i) {
            std::vector<int> neighbors;
            if (N == 2)
                neighbors = {(i + 1) % 2};
            else
                neighbors = {(i + 1) % N, (i - 1 + N) % N};
            for (int j : neighbors) {
                int k = 1 - cartan_affine(i, j, N);
                std::vector<int> tuple(k, 0);
                for (;;) {
                    for (int s = 0; s <= rmax; ++s) {
                        std::vector<int> modes = tuple;
                        modes.push_back(s);
                        inst("eq:16", sign, i, j, modes);
                    }
                    int t = k - 1;
                    while (t >= 0 && tuple[t] == rmax)
                        --t;
                    if (t < 0)
                        break;
                    ++tuple[t];
                    for (int u = t + 1; u < k; ++u)
                        tuple[u] = tuple[t];
                }
            }
        }
    if (N >= 4)
        for (int sign : {1, -1})
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j)
                    if (cartan_affine(i, j, N) == 0)
                        for (int r = 0; r <= rmax; ++r)
                            for (int s = 0; s <= rmax; ++s)
                                inst("eq:16", sign, i, j, {r, s});
    if (N == 2)
        for (const char* id : {"eq:17", "eq:18"})
            for (int sign : {1, -1})
                for (int i = 0; i < 2; ++i)
                    for (int r = 0; r <= rmax; ++r)
                        for (int s = 0; s <= rmax; ++s)
                            inst(id, sign, i, (i + 1) % 2, {r, s});
}

void push_sl(std::vector<RelationInstance>& out, int N, int D, int rmax) {
    if (N < 2)
        throw domain_error("Drinfeld checks need N >= 2");
    auto inst = [&](std::string id, int sign, int i, int j,
                    std::vector<int> modes) {
        out.push_back(RelationInstance{std::move(id), sign, i, j,
                                       std::move(modes), N, D, 0});
    };
    for (int i = 1; i <= N - 1; ++i)
        for (int j = i; j <= N - 1; ++j)
            for (int r = 0; r <= rmax; ++r)
                for (int s = 0; s <= rmax; ++s)
                    if (i < j || r <= s)
                        inst("sl:1", 0, i, j, {r, s});
    for (int i = 1; i <= N - 1; ++i)
        for (int j = 1; j <= N - 1; ++j)
            for (int r = 0; r <= rmax; ++r)
                for (int s = 0; s <= rmax; ++s)
                    inst("sl:2", 0, i, j, {r, s});
    for (int sign : {1, -1})
        for (int i = 1; i <= N - 1; ++i)
            for (int j = 1; j <= N - 1; ++j)
                for (int s = 0; s <= rmax; ++s)
                    inst("sl:3", sign, i, j, {s});
    for (const char* id : {"sl:4", "sl:5"})
        for (int sign : {1, -1})
            for (int i = 1; i <= N - 1; ++i)
                for (int j = 1; j <= N - 1; ++j)
                    for (int r = 0; r <= rmax; ++r)
                        for (int s = 0; s <= rmax; ++s)
                            inst(id, sign, i, j, {r, s});
    for (int sign : {1, -1})
        for (int i = 1; i <= N - 1; ++i)
            for (int j = 1; j <= N - 1; ++j) {
                if (std::abs(i - j) == 1) {
                    for (int r1 = 0; r1 <= rmax; ++r1)
                        for (int r2 = r1; r2 <= rmax; ++r2)
                            for (int s = 0; s <= rmax; ++s)
                                inst("sl:6", sign, i, j, {r1, r2, s});
                } else if (j > i + 1) {
                    for (int r = 0; r <= rmax; ++r)
                        for (int s = 0; s <= rmax; ++s)
                            inst("sl:6", sign, i, j, {r, s});
                }
            }
}

void push_aff(std::vector<RelationInstance>& out, int N, int D) {
    if (N < 2)
        throw domain_error("Chevalley checks need N >= 2");
    auto inst = [&](std::string id, int sign, int i, int j) {
        out.push_back(
            RelationInstance{std::move(id), sign, i, j, {}, N, D, 0});
    };
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j)
            inst("aff:1", 0, i, j);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            inst("aff:2", 0, i, j);
            inst("aff:3", 0, i, j);
            inst("aff:4", 0, i, j);
        }
    for (int sign : {1, -1})
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (i != j && (cartan_affine(i, j, N) != 0 ? true : i < j))
                    inst("aff:serre", sign, i, j);
}

} // namespace

std::string describe(const RelationInstance& inst) {
    std::string s = inst.id;
    if (inst.sign != 0)
        s += inst.sign > 0 ? "[+]" : "[-]";
    s += " i=" + std::to_string(inst.i) + " j=" + std::to_string(inst.j);
    if (!inst.modes.empty()) {
        s += " modes=";
        for (size_t k = 0; k < inst.modes.size(); ++k)
            s += (k ? "," : "") + std::to_string(inst.modes[k]);
    }
    s += " N=" + std::to_string(inst.N) + " D=" + std::to_string(inst.D);
    if (inst.mutation != 0)
        s += " mutation=" + std::to_string(inst.mutation);
    return s;
}

CheckReport check_relation(const RelationInstance& inst) {
    if (inst.D < 0)
        throw domain_error("degree bound must be nonnegative");
    if (inst.id == "adjoint")
        return adjoint_report(inst);
    if (inst.id == "appendix-a" || inst.id == "appendix-b")
        return appendix_report(inst);
    return relation_report(inst);
}

CheckReport check_adjointness(int i, int r, int D, int N) {
    RelationInstance inst{"adjoint", 0, i, 0, {r}, N, D, 0};
    return adjoint_report(inst);
}

CheckReport check_appendix(char which, bool mutate) {
    if (which != 'a' && which != 'b')
        throw domain_error("appendix identity must be a or b");
    if (mutate && which != 'a')
        throw domain_error("no mutation points for this identity");
    RelationInstance inst{std::string("appendix-") + which, 0, 0, 0, {}, 2,
                          0, mutate ? 1 : 0};
    return appendix_report(inst);
}

std::vector<RelationInstance> enumerate_suite(const std::string& name, int N,
                                              int D, int rmax) {
    if (D < 0 || rmax < 0)
        throw domain_error("suite bounds must be nonnegative");
    std::vector<RelationInstance> out;
    if (name == "affine-yangian") {
        push_ay(out, N, D, rmax);
    } else if (name == "yangian-sl") {
        push_sl(out, N, D, rmax);
    } else if (name == "affine-lie") {
        push_aff(out, N, D);
    } else if (name == "adjoint") {
        if (N < 2)
            throw domain_error("adjoint checks need N >= 2");
        for (int i = 1; i <= N - 1; ++i)
            for (int r = 0; r <= rmax; ++r)
                out.push_back(
                    RelationInstance{"adjoint", 0, i, 0, {r}, N, D, 0});
    } else if (name == "appendix") {
        out.push_back(
            RelationInstance{"appendix-a", 0, 0, 0, {}, N, D, 0});
        out.push_back(
            RelationInstance{"appendix-b", 0, 0, 0, {}, N, D, 0});
    } else if (name == "all") {
        for (const char* part : {"affine-yangian", "yangian-sl",
                                 "affine-lie", "adjoint", "appendix"}) {
            auto sub = enumerate_suite(part, N, D, rmax);
            out.insert(out.end(), sub.begin(), sub.end());
        }
    } else {
        throw domain_error("unknown suite: " + name);
    }
    return out;
}

std::vector<CheckReport> run_suite(const std::string& name, int N, int D,
                                   int rmax, int jobs) {
    std::vector<RelationInstance> insts = enumerate_suite(name, N, D, rmax);
    std::vector<CheckReport> out(insts.size());
    long n = static_cast<long>(insts.size());
    if (jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
        for (long k = 0; k < n; ++k)
            out[k] = check_relation(insts[k]);
    } else {
        for (long k = 0; k < n; ++k)
            out[k] = check_relation(insts[k]);
    }
    return out;
}

} // namespace yfock
