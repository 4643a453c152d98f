#include "yfock/gz.hpp"

#include <algorithm>

#include "yfock/error.hpp"
#include "yfock/poly.hpp"

namespace yfock {

int MSeq::rows() const {
    int n = 0;
    for (const auto& [r, p] : blocks)
        n += p;
    return n;
}

int MSeq::prefix(int s) const {
    int n = 0;
    for (int k = 1; k <= s; ++k)
        n += blocks[k - 1].second;
    return n;
}

int MSeq::m_at(int a) const {
    int seen = 0;
    for (const auto& [r, p] : blocks) {
        seen += p;
        if (a <= seen)
            return r;
    }
    throw domain_error("row outside the window");
}

int GZScheme::l_at(int s, int i) const {
    int count = 0;
    for (int v : thresholds[s - 1])
        if (v <= i)
            ++count;
    return count;
}

namespace {

RatFun e_var(int k) { return RatFun(IntPoly::variable(k)); }

RatFun hbar() { return e_var(0) + e_var(1); }

// hbar' = -(e1 + e2)
RatFun hbar_p() { return -hbar(); }

RatFun t_param(int N) { return RatFun(IntPoly(N)) * e_var(1); }

// k/2 as an exact field element
RatFun half(int k) { return RatFun(IntPoly(k), IntPoly(2)); }

void validate_scheme(const MSeq& m, const GZScheme& sch) {
    if (static_cast<int>(sch.thresholds.size()) != m.block_count())
        throw domain_error("scheme has wrong number of factors");
    for (int s = 1; s <= m.block_count(); ++s) {
        const auto& t = sch.thresholds[s - 1];
        if (static_cast<int>(t.size()) != m.blocks[s - 1].second)
            throw domain_error("scheme factor has wrong number of columns");
        for (size_t k = 0; k < t.size(); ++k) {
            if (t[k] < 1 || t[k] > m.N)
                throw domain_error("scheme threshold out of range");
            if (k > 0 && t[k] <= t[k - 1])
                throw domain_error("scheme thresholds must increase");
        }
    }
}

} // namespace

std::pair<MSeq, GZScheme> partition_to_gz(const Partition& lam, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    int len = std::max(lam.length(), 1);
    int L = N * ((len + N - 1) / N);
    JMData jm = jm_decomposition(lam, N, L);
    MSeq m;
    m.N = N;
    m.blocks = m_blocks(jm);
    GZScheme sch;
    sch.thresholds.resize(m.block_count());
    for (int s = 1; s <= m.block_count(); ++s) {
        int ps = m.blocks[s - 1].second;
        if (ps > N)
            throw domain_error("m-block longer than N");
        sch.thresholds[s - 1].resize(ps);
        for (int p = 1; p <= ps; ++p)
            sch.thresholds[s - 1][p - 1] = jm.j[m.row_of(s, p) - 1];
    }
    return {m, sch};
}

Partition gz_to_partition(const MSeq& m, const GZScheme& sch) {
    validate_scheme(m, sch);
    int n = m.rows();
    std::vector<int> parts(n);
    for (int s = 1; s <= m.block_count(); ++s)
        for (int p = 1; p <= m.blocks[s - 1].second; ++p) {
            int a = m.row_of(s, p);
            parts[a - 1] = sch.thresholds[s - 1][p - 1] - m.N * m.m_at(a) +
                           a - 1;
        }
    for (int a = 0; a < n; ++a) {
        if (parts[a] < 0 || (a > 0 && parts[a] > parts[a - 1]))
            throw domain_error("scheme does not encode a partition");
    }
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(parts);
}

RatFun gz_a_constant(const MSeq& m, int s) {
    if (s < 1 || s > m.block_count())
        throw domain_error("factor index out of range");
    return t_param(m.N) * RatFun(m.blocks[s - 1].first) +
           hbar_p() * half(2 * m.prefix(s) - 3);
}

RatFun gz_nu(const MSeq& m, const GZScheme& sch, int s, int i, int p) {
    return hbar_p() * RatFun(p - 1 - sch.entry(s, i, p)) -
           gz_a_constant(m, s);
}

std::vector<std::pair<int, int>> scheme_removable(const GZScheme& sch, int i,
                                                  int N) {
    if (i < 1 || i > N - 1)
        throw domain_error("ladder index must be in 1..N-1");
    std::vector<std::pair<int, int>> out;
    for (int s = 1; s <= static_cast<int>(sch.thresholds.size()); ++s) {
        const auto& t = sch.thresholds[s - 1];
        for (int p = 1; p <= static_cast<int>(t.size()); ++p)
            if (t[p - 1] == i + 1 && (p == 1 || t[p - 2] <= i - 1))
                out.emplace_back(s, p);
    }
    return out;
}

std::vector<std::pair<int, int>> scheme_addable(const GZScheme& sch, int i,
                                                int N) {
    if (i < 1 || i > N - 1)
        throw domain_error("ladder index must be in 1..N-1");
    std::vector<std::pair<int, int>> out;
    for (int s = 1; s <= static_cast<int>(sch.thresholds.size()); ++s) {
        const auto& t = sch.thresholds[s - 1];
        for (int p = 1; p <= static_cast<int>(t.size()); ++p)
            if (t[p - 1] == i &&
                (p == static_cast<int>(t.size()) || t[p] >= i + 2))
                out.emplace_back(s, p);
    }
    return out;
}

GZScheme scheme_bump(const GZScheme& sch, int s, int i, int p, bool fill) {
    GZScheme out = sch;
    int& v = out.thresholds[s - 1][p - 1];
    if (fill) {
        if (v != i + 1)
            throw domain_error("entry cannot be raised");
        v = i;
    } else {
        if (v != i)
            throw domain_error("entry cannot be lowered");
        v = i + 1;
    }
    return out;
}

namespace {

// Highest-weight entry kappa^{(s)}_{i,p} = delta(p <= min(i, p_s)).
int kappa_entry(const MSeq& m, int s, int i, int p) {
    return p <= std::min(i, m.blocks[s - 1].second) ? 1 : 0;
}

struct Ladder {
    const MSeq& m;
    const GZScheme& sch;
    int i, p, s;
    RatFun a_s;

    Ladder(const MSeq& m_, const GZScheme& sch_, int i_, int p_, int s_)
        : m(m_), sch(sch_), i(i_), p(p_), s(s_), a_s(gz_a_constant(m_, s_)) {}

    RatFun shift(int s2) const { return a_s - gz_a_constant(m, s2); }

    RatFun k_plus(int s2, int p2) const {
        return hbar_p() * RatFun(p - p2 + kappa_entry(m, s2, i + 1, p2)) -
               shift(s2);
    }
    RatFun l_plus(int s2, int p2) const {
        return hbar_p() * RatFun(p - p2 + sch.entry(s2, i + 1, p2)) -
               shift(s2);
    }
    RatFun k_minus(int s2, int p2) const {
        return hbar_p() * RatFun(p - p2 - 1 + kappa_entry(m, s2, i - 1, p2)) -
               shift(s2);
    }
    RatFun l_minus(int s2, int p2) const {
        return hbar_p() * RatFun(p - p2 - 1 + sch.entry(s2, i - 1, p2)) -
               shift(s2);
    }
};

} // namespace

std::pair<RatFun, RatFun> nt_gamma_beta(const MSeq& m, const GZScheme& sch,
                                        int i, int p, int s) {
    Ladder lad(m, sch, i, p, s);
    RatFun gamma(1), beta(1);
    for (int s2 = 1; s2 <= m.block_count(); ++s2) {
        for (int p2 = 1; p2 <= p; ++p2) {
            gamma *= lad.k_plus(s2, p2);
            beta *= lad.l_plus(s2, p2) / lad.k_plus(s2, p2);
        }
        for (int p2 = p + 1; p2 <= i + 1; ++p2)
            gamma *= lad.l_plus(s2, p2);
        for (int p2 = 1; p2 <= p - 1; ++p2) {
            gamma *= lad.k_minus(s2, p2);
            beta *= lad.l_minus(s2, p2) / lad.k_minus(s2, p2);
        }
        for (int p2 = p; p2 <= i - 1; ++p2)
            gamma *= lad.l_minus(s2, p2);
    }
    return {gamma, beta};
}

std::vector<std::pair<RatFun, RatFun>>
nt_A_eigenvalue(const MSeq& m, const GZScheme& sch, int i) {
    if (i < 1 || i > m.N)
        throw domain_error("minor index must be in 1..N");
    std::vector<std::pair<RatFun, RatFun>> out;
    for (int s = 1; s <= m.block_count(); ++s) {
        RatFun a_s = gz_a_constant(m, s);
        for (int p = 1; p <= i; ++p)
            out.emplace_back(gz_nu(m, sch, s, i, p),
                             hbar_p() * RatFun(p - 1) - a_s);
    }
    return out;
}

std::vector<std::pair<RatFun, RatFun>>
uglov_A_eigenvalue_ratio(const Partition& lam, int i, int N, int L) {
    if (N < 1)
        throw domain_error("N must be positive");
    if (i < 1 || i > N)
        throw domain_error("minor index must be in 1..N");
    int len = std::max(lam.length(), 1);
    int minimal = N * ((len + N - 1) / N);
    if (L == 0)
        L = minimal;
    if (L < minimal || L % N != 0)
        throw domain_error("invalid window");
    JMData jm = jm_decomposition(lam, N, L);
    std::vector<std::pair<RatFun, RatFun>> out;
    for (int a = 1; a <= L; ++a) {
        RatFun base = t_param(N) * RatFun(jm.m[a - 1]) +
                      hbar_p() * half(2 * a - 3);
        RatFun num = base;
        if (jm.j[a - 1] <= i)
            num += hbar_p();
        out.emplace_back(-num, -base);
    }
    return out;
}

std::map<Cell, std::pair<RatFun, RatFun>>
nt_matrix_elements(const Partition& lam, int i, int N) {
    auto [m, sch] = partition_to_gz(lam, N);
    std::map<Cell, std::pair<RatFun, RatFun>> out;
    for (auto [s, p] : scheme_removable(sch, i, N)) {
        int a = m.row_of(s, p);
        Cell cell{a - 1, lam.part(a) - 1};

        auto interp = [&](const GZScheme& cur) {
            RatFun nu0 = gz_nu(m, cur, s, i, p);
            RatFun d(1);
            for (int s2 = 1; s2 <= m.block_count(); ++s2)
                for (int p2 = 1; p2 <= i; ++p2)
                    if (s2 != s || p2 != p)
                        d *= nu0 - gz_nu(m, cur, s2, i, p2);
            return d;
        };

        RatFun gamma = nt_gamma_beta(m, sch, i, p, s).first;
        RatFun up = -(RatFun(1) / hbar()) * (-gamma) / interp(sch);

        GZScheme bumped = scheme_bump(sch, s, i, p, true);
        RatFun beta = nt_gamma_beta(m, bumped, i, p, s).second;
        RatFun down = -(RatFun(1) / hbar()) * beta / interp(bumped);

        out.emplace(cell, std::make_pair(up, down));
    }
    return out;
}

RatFun lemma_factor_same(const MSeq& m, const GZScheme& sch, int i, int p,
                         int s, bool removable) {
    Ladder lad(m, sch, i, p, s);
    RatFun num(1);
    if (removable)
        for (int p2 = 1; p2 <= i + 1; ++p2)
            num *= lad.l_plus(s, p2);
    else
        for (int p2 = 1; p2 <= i - 1; ++p2)
            num *= lad.l_minus(s, p2);
    RatFun den(1);
    RatFun nu0 = gz_nu(m, sch, s, i, p);
    for (int p2 = 1; p2 <= i; ++p2)
        if (p2 != p)
            den *= nu0 - gz_nu(m, sch, s, i, p2);
    RatFun direct = num / den;
    RatFun closed = removable
                        ? hbar_p() * hbar_p() * RatFun(p - i - 1)
                        : RatFun(-1) / RatFun(p - i - 1);
    if (direct != closed)
        throw domain_error("ladder factor identity failed");
    return direct;
}

RatFun lemma_factor_other(const MSeq& m, const GZScheme& sch, int i, int p,
                          int s, int s2, bool removable) {
    if (s2 == s)
        throw domain_error("factors must differ");
    Ladder lad(m, sch, i, p, s);
    RatFun num(1);
    if (removable)
        for (int p2 = 1; p2 <= i + 1; ++p2)
            num *= lad.l_plus(s2, p2);
    else
        for (int p2 = 1; p2 <= i - 1; ++p2)
            num *= lad.l_minus(s2, p2);
    RatFun den(1);
    RatFun nu0 = gz_nu(m, sch, s, i, p);
    for (int p2 = 1; p2 <= i; ++p2)
        den *= nu0 - gz_nu(m, sch, s2, i, p2);
    RatFun direct = num / den;

    RatFun da = lad.shift(s2);
    int li = sch.l_at(s2, i);
    RatFun closed;
    auto level = [&](int k) { return hbar_p() * RatFun(k) - da; };
    if (removable) {
        int lup = sch.l_at(s2, i + 1);
        if (lup == li)
            closed = level(p - i - 1);
        else if (li == i)
            closed = level(p - i);
        else
            closed = level(p - li) * level(p - i - 1) / level(p - li - 1);
    } else {
        int ldown = sch.l_at(s2, i - 1);
        if (ldown == li)
            closed = RatFun(1) / level(p - i - 1);
        else if (li == i)
            closed = RatFun(1) / level(p - i);
        else
            closed = level(p - li - 1) / (level(p - li) * level(p - i - 1));
    }
    if (direct != closed)
        throw domain_error("ladder factor identity failed");
    return direct;
}

std::vector<std::pair<RatFun, RatFun>> twist_pole_pairs(int r, int N) {
    if (r < 0 || N < 1)
        throw domain_error("invalid twist parameters");
    RatFun step = t_param(N) + hbar_p() * RatFun(N); // -N e1
    std::vector<std::pair<RatFun, RatFun>> out;
    for (int s = 1; s <= r; ++s)
        out.emplace_back(hbar_p() - step * RatFun(s), -step * RatFun(s));
    return out;
}

USeries twist_factor(int r, int order, int N) {
    return expand_linear_quotient(twist_pole_pairs(r, N), order);
}

std::vector<std::pair<RatFun, RatFun>>
twist_g_pairs(int i, int r, int N, const RatFun& shift) {
    std::vector<std::pair<RatFun, RatFun>> out;
    for (int k = 0; k < i; ++k) {
        RatFun c = hbar_p() * RatFun(k) - shift;
        for (auto [a, b] : twist_pole_pairs(r, N))
            out.emplace_back(a + c, b + c);
    }
    return out;
}

} // namespace yfock
