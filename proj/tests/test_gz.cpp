#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "yfock/error.hpp"
#include "yfock/fock.hpp"
#include "yfock/gz.hpp"
#include "yfock/partition.hpp"

using namespace yfock;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

RatFun ev(int k) { return RatFun(IntPoly::variable(k)); }

RatFun lin(int p, int q) { return RatFun(p) * ev(0) + RatFun(q) * ev(1); }

RatFun hb() { return ev(0) + ev(1); }

RatFun hf(int k) { return RatFun(IntPoly(k), IntPoly(2)); }

RatFun uvar() { return ev(2); }

RatFun prod_pairs(const std::vector<std::pair<RatFun, RatFun>>& ps) {
    RatFun out(1);
    for (const auto& [a, b] : ps)
        out *= (uvar() - a) / (uvar() - b);
    return out;
}

std::vector<Partition> small_partitions(int max_size) {
    std::vector<Partition> out;
    for (int d = 0; d <= max_size; ++d)
        for (const auto& lam : partitions_of(d))
            out.push_back(lam);
    return out;
}

Cell removable_cell_of(const MSeq& m, const Partition& lam, int s, int p) {
    int a = m.row_of(s, p);
    return {a - 1, lam.part(a) - 1};
}

Cell addable_cell_of(const MSeq& m, const Partition& lam, int s, int p) {
    int a = m.row_of(s, p);
    return {a - 1, lam.part(a)};
}

} // namespace

TEST_CASE("scheme construction pins") {
    auto [m0, s0] = partition_to_gz(P(""), 2);
    CHECK(m0.N == 2);
    CHECK(m0.blocks == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(s0.thresholds == std::vector<std::vector<int>>{{1, 2}});
    CHECK(m0.rows() == 2);
    CHECK(m0.prefix(1) == 2);
    CHECK(m0.row_of(1, 1) == 2);
    CHECK(m0.row_of(1, 2) == 1);
    CHECK(m0.m_at(1) == 1);
    CHECK(m0.m_at(2) == 1);
    CHECK_THROWS_AS(m0.m_at(3), domain_error);

    auto [m1, s1] = partition_to_gz(P("1"), 2);
    CHECK(m1.blocks == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});
    CHECK(s1.thresholds == std::vector<std::vector<int>>{{1}, {1}});

    auto [m2, s2] = partition_to_gz(P("2,1"), 2);
    CHECK(m2.blocks == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});
    CHECK(s2.thresholds == std::vector<std::vector<int>>{{2}, {2}});

    CHECK(s0.entry(1, 0, 1) == 0);
    CHECK(s0.entry(1, 1, 1) == 1);
    CHECK(s0.entry(1, 1, 2) == 0);
    CHECK(s0.entry(1, 2, 2) == 1);
    CHECK(s0.entry(1, 2, 3) == 0);
    CHECK(s0.l_at(1, 0) == 0);
    CHECK(s0.l_at(1, 1) == 1);
    CHECK(s0.l_at(1, 2) == 2);
}

TEST_CASE("roundtrip and malformed schemes") {
    for (int N : {2, 3})
        for (const auto& lam : small_partitions(6)) {
            auto [m, sch] = partition_to_gz(lam, N);
            for (const auto& [r, p] : m.blocks)
                CHECK(p <= N);
            CHECK(gz_to_partition(m, sch) == lam);
        }

    MSeq m;
    m.N = 2;
    m.blocks = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(gz_to_partition(m, GZScheme{{{1}}}), domain_error);
    CHECK_THROWS_AS(gz_to_partition(m, GZScheme{{{1, 2}, {1}}}),
                    domain_error);
    CHECK_THROWS_AS(gz_to_partition(m, GZScheme{{{1}, {3}}}), domain_error);
    CHECK_THROWS_AS(gz_to_partition(m, GZScheme{{{0}, {1}}}), domain_error);

    MSeq m2;
    m2.N = 2;
    m2.blocks = {{0, 2}};
    CHECK_THROWS_AS(gz_to_partition(m2, GZScheme{{{2, 1}}}), domain_error);
    CHECK(gz_to_partition(m2, GZScheme{{{1, 2}}}) == P("2,2"));

    MSeq m3;
    m3.N = 2;
    m3.blocks = {{2, 2}};
    CHECK_THROWS_AS(gz_to_partition(m3, GZScheme{{{1, 2}}}), domain_error);
}

TEST_CASE("ladder moves match cell moves") {
    for (int N : {2, 3})
        for (const auto& lam : small_partitions(6)) {
            auto [m, sch] = partition_to_gz(lam, N);
            for (int i = 1; i <= N - 1; ++i) {
                std::set<Cell> rem_cells, add_cells;
                for (auto [s, p] : scheme_removable(sch, i, N)) {
                    Cell c = removable_cell_of(m, lam, s, p);
                    rem_cells.insert(c);
                    GZScheme down = scheme_bump(sch, s, i, p, true);
                    CHECK(gz_to_partition(m, down) == lam.with_cell_removed(c));
                }
                for (auto [s, p] : scheme_addable(sch, i, N)) {
                    Cell c = addable_cell_of(m, lam, s, p);
                    add_cells.insert(c);
                    GZScheme up = scheme_bump(sch, s, i, p, false);
                    CHECK(gz_to_partition(m, up) == lam.with_cell_added(c));
                }
                auto rc = removable_cells(lam, i, N);
                auto ac = addable_cells(lam, i, N);
                CHECK(rem_cells == std::set<Cell>(rc.begin(), rc.end()));
                CHECK(add_cells == std::set<Cell>(ac.begin(), ac.end()));
            }
        }

    auto [m, sch] = partition_to_gz(P("2"), 2);
    CHECK_THROWS_AS(scheme_removable(sch, 0, 2), domain_error);
    CHECK_THROWS_AS(scheme_addable(sch, 2, 2), domain_error);
    CHECK_THROWS_AS(scheme_bump(sch, 1, 1, 1, false), domain_error);
    CHECK_THROWS_AS(scheme_bump(sch, 2, 1, 1, true), domain_error);
}

TEST_CASE("row constants") {
    auto [m0, s0] = partition_to_gz(P(""), 2);
    CHECK(gz_a_constant(m0, 1) == RatFun(2) * ev(1) - hb() * hf(1));
    CHECK_THROWS_AS(gz_a_constant(m0, 2), domain_error);
    CHECK_THROWS_AS(gz_a_constant(m0, 0), domain_error);

    for (int N : {2, 3})
        for (const auto& lam : small_partitions(6)) {
            auto [m, sch] = partition_to_gz(lam, N);
            RatFun t = RatFun(N) * ev(1);
            for (int s = 1; s <= m.block_count(); ++s)
                for (int p = 1; p <= m.blocks[s - 1].second; ++p) {
                    int a = m.row_of(s, p);
                    CHECK(hb() * RatFun(p - 1) + gz_a_constant(m, s) ==
                          t * RatFun(m.m_at(a)) - hb() * hf(2 * a - 3));
                }
            for (int i = 1; i <= N - 1; ++i) {
                auto cells = removable_cells(lam, i, N);
                auto ac = addable_cells(lam, i, N);
                cells.insert(cells.end(), ac.begin(), ac.end());
                for (const auto& [x, y] : cells) {
                    REQUIRE(x + 1 <= m.rows());
                    CHECK(t * RatFun(m.m_at(x + 1)) ==
                          ev(1) * RatFun(x - y + i));
                }
            }
        }
}

TEST_CASE("diagonal eigenvalue forms agree") {
    for (int N : {2, 3})
        for (const auto& lam : small_partitions(6)) {
            auto [m, sch] = partition_to_gz(lam, N);
            JMData jm = jm_decomposition(lam, N, m.rows());
            for (int i = 1; i <= N; ++i) {
                auto nt = nt_A_eigenvalue(m, sch, i);
                auto ug = uglov_A_eigenvalue_ratio(lam, i, N);
                CHECK(prod_pairs(nt) == prod_pairs(ug));
                for (int a = 1; a <= m.rows(); ++a) {
                    const auto& [num, den] = ug[a - 1];
                    if (jm.j[a - 1] <= i)
                        CHECK(num - den == hb());
                    else
                        CHECK(num == den);
                }
            }
        }

    auto [m, sch] = partition_to_gz(P("2,1"), 2);
    CHECK_THROWS_AS(nt_A_eigenvalue(m, sch, 0), domain_error);
    CHECK_THROWS_AS(nt_A_eigenvalue(m, sch, 3), domain_error);
    CHECK_THROWS_AS(uglov_A_eigenvalue_ratio(P("2,1"), 1, 2, 3),
                    domain_error);
    CHECK_THROWS_AS(uglov_A_eigenvalue_ratio(P("2,2,1"), 1, 2, 2),
                    domain_error);
}

TEST_CASE("joint spectrum separates each degree") {
    for (int N : {2, 3})
        for (int d = 0; d <= 6; ++d) {
            int L = N * ((std::max(d, 1) + N - 1) / N);
            std::vector<std::vector<RatFun>> spectra;
            for (const auto& lam : partitions_of(d)) {
                std::vector<RatFun> tuple;
                for (int i = 1; i <= N; ++i)
                    tuple.push_back(
                        prod_pairs(uglov_A_eigenvalue_ratio(lam, i, N, L)));
                spectra.push_back(tuple);
            }
            for (size_t a = 0; a < spectra.size(); ++a)
                for (size_t b = a + 1; b < spectra.size(); ++b)
                    CHECK(spectra[a] != spectra[b]);
        }
}

TEST_CASE("ladder factor closed forms") {
    for (int N : {2, 3})
        for (const auto& lam : small_partitions(6)) {
            auto [m, sch] = partition_to_gz(lam, N);
            for (int i = 1; i <= N - 1; ++i) {
                for (auto [s, p] : scheme_removable(sch, i, N)) {
                    CHECK_NOTHROW(lemma_factor_same(m, sch, i, p, s, true));
                    for (int s2 = 1; s2 <= m.block_count(); ++s2)
                        if (s2 != s)
                            CHECK_NOTHROW(
                                lemma_factor_other(m, sch, i, p, s, s2, true));
                }
                for (auto [s, p] : scheme_addable(sch, i, N)) {
                    CHECK_NOTHROW(lemma_factor_same(m, sch, i, p, s, false));
                    for (int s2 = 1; s2 <= m.block_count(); ++s2)
                        if (s2 != s)
                            CHECK_NOTHROW(lemma_factor_other(m, sch, i, p, s,
                                                             s2, false));
                }
            }
        }

    auto [m, sch] = partition_to_gz(P("2"), 2);
    CHECK(lemma_factor_same(m, sch, 1, 1, 1, true) == -(hb() * hb()));
    CHECK_THROWS_AS(lemma_factor_other(m, sch, 1, 1, 1, 1, true),
                    domain_error);
}

TEST_CASE("ladder matrix elements pinned") {
    auto empty = nt_matrix_elements(P("1"), 1, 2);
    CHECK(empty.empty());

    auto me = nt_matrix_elements(P("2"), 1, 2);
    REQUIRE(me.size() == 1);
    const auto& [up, down] = me.at(Cell{0, 1});
    CHECK(up == -(RatFun(2) * ev(1) * hb()));
    CHECK(down == RatFun(1) / (hb() * lin(1, -1)));
    CHECK((up * down).to_string() == "-2*e2/(e1 - e2)");
}

TEST_CASE("ladder products match cell products") {
    for (int N : {2, 3})
        for (const auto& lam : small_partitions(6)) {
            auto [m, sch] = partition_to_gz(lam, N);
            for (int i = 1; i <= N - 1; ++i) {
                auto me = nt_matrix_elements(lam, i, N);
                CHECK(me.size() == removable_cells(lam, i, N).size());
                for (const auto& [cell, ud] : me) {
                    Partition mu = lam.with_cell_removed(cell);
                    auto [x, y] = cell;
                    RatFun expect(1);
                    for (const auto& [xa, ya] : addable_cells(lam, i, N))
                        expect *= lin(x - xa + 1, y - ya + 1) /
                                  lin(x - xa, y - ya);
                    for (const auto& [xr, yr] : removable_cells(mu, i, N))
                        expect *= lin(x - xr - 1, y - yr - 1) /
                                  lin(x - xr, y - yr);
                    CHECK(ud.first * ud.second == expect);

                    FockVec pl = FockVec::unit(FockBasis::JACK, lam);
                    FockVec pm = FockVec::unit(FockBasis::JACK, mu);
                    RatFun e0 =
                        act(OperatorId{OpFamily::YSL_XP, i, 0}, pl, N)
                            .coeff(mu);
                    RatFun f0 =
                        act(OperatorId{OpFamily::YSL_XM, i, 0}, pm, N)
                            .coeff(lam);
                    CHECK(ud.first * ud.second == e0 * f0);
                }
            }
        }
}

TEST_CASE("pole positions") {
    for (int N : {2, 3})
        for (const auto& lam : small_partitions(6)) {
            auto [m, sch] = partition_to_gz(lam, N);
            for (int i = 1; i <= N - 1; ++i)
                for (auto [s, p] : scheme_removable(sch, i, N)) {
                    auto [x, y] = removable_cell_of(m, lam, s, p);
                    CHECK(hb() * RatFun(p - 2) + gz_a_constant(m, s) ==
                          ev(1) * RatFun(x - y + i) - hb() * hf(2 * x + 1));
                }
        }
}

TEST_CASE("twist factor series") {
    CHECK(twist_pole_pairs(0, 2).empty());
    CHECK(twist_factor(0, 3, 2) == USeries::one(3));
    CHECK_THROWS_AS(twist_pole_pairs(-1, 2), domain_error);

    USeries f1 = twist_factor(1, 2, 2);
    CHECK(f1[0] == RatFun(1));
    CHECK(f1[1] == hb());
    CHECK(f1[2] == RatFun(2) * ev(0) * hb());

    for (int N : {2, 3}) {
        auto pairs = twist_pole_pairs(1, N);
        REQUIRE(pairs.size() == 1);
        auto [a, b] = pairs[0];
        USeries s = twist_factor(1, 4, N);
        for (int k = 0; k <= 4; ++k) {
            RatFun lhs = s[k] - (k > 0 ? b * s[k - 1] : RatFun(0));
            RatFun rhs = k == 0 ? RatFun(1) : (k == 1 ? -a : RatFun(0));
            CHECK(lhs == rhs);
        }

        auto rev = twist_pole_pairs(2, N);
        for (auto& pr : rev)
            std::swap(pr.first, pr.second);
        CHECK(twist_factor(2, 4, N) * expand_linear_quotient(rev, 4) ==
              USeries::one(4));
    }
}

TEST_CASE("twist ladder ratio cancels") {
    for (int N : {2, 3})
        for (int r : {0, 1, 2})
            for (int i = 1; i <= N - 1; ++i) {
                RatFun sm = -hb() * hf(i - 1);
                RatFun sp = -hb() * hf(i + 1);
                auto lhs = twist_g_pairs(i - 1, r, N, sm);
                auto more = twist_g_pairs(i + 1, r, N, sp);
                lhs.insert(lhs.end(), more.begin(), more.end());
                auto rhs = twist_g_pairs(i, r, N, sm);
                auto more2 = twist_g_pairs(i, r, N, sp);
                rhs.insert(rhs.end(), more2.begin(), more2.end());
                CHECK(prod_pairs(lhs) == prod_pairs(rhs));
            }
}
