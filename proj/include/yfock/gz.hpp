#pragma once

#include <map>
#include <utility>
#include <vector>

#include "yfock/partition.hpp"
#include "yfock/ratfun.hpp"
#include "yfock/useries.hpp"

namespace yfock {

// Block decomposition of the nondecreasing m-sequence attached to a
// partition: blocks[s-1] = (r_s, p_s) covers rows a with m_a = r_s; the
// values r_s are strictly increasing and each p_s is between 1 and N.
struct MSeq {
    int N = 1;
    std::vector<std::pair<int, int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int rows() const;            // n = sum of the p_s
    int prefix(int s) const;     // p_1 + ... + p_s
    int row_of(int s, int p) const { return prefix(s) - p + 1; }
    int m_at(int a) const;       // m-value of row a (1-based)
};

// Column thresholds of a 0/1 interlacing scheme: thresholds[s-1][p-1] is
// the least i with a nonzero (i,p)-entry in factor s.  Per factor the
// thresholds are strictly increasing and lie in 1..N.
struct GZScheme {
    std::vector<std::vector<int>> thresholds;

    int p_size(int s) const {
        return static_cast<int>(thresholds[s - 1].size());
    }
    // lambda^{(s)}_{i,p}: 1 iff column p of factor s is filled at row i.
    int entry(int s, int i, int p) const {
        return p <= p_size(s) && thresholds[s - 1][p - 1] <= i ? 1 : 0;
    }
    // l_i^{(s)}: number of filled columns in row i of factor s.
    int l_at(int s, int i) const;

    bool operator==(const GZScheme& o) const {
        return thresholds == o.thresholds;
    }
};

// Minimal window (rows = max(N, N ceil(len/N))) and the scheme whose
// thresholds are the j-values of lam, block by block.
std::pair<MSeq, GZScheme> partition_to_gz(const Partition& lam, int N);

// Inverse: lambda_a = j_a - N m_a + a - 1 with j read off the thresholds.
// Throws on malformed schemes (sizes, ranges, monotonicity).
Partition gz_to_partition(const MSeq& m, const GZScheme& sch);

// a_s = t r_s + hbar'(p_1 + ... + p_s - 3/2), t = N e2, hbar' = -(e1+e2).
RatFun gz_a_constant(const MSeq& m, int s);

// nu^{(s)}_{i,p} = hbar'(p - 1 - lambda^{(s)}_{i,p}) - a_s.
RatFun gz_nu(const MSeq& m, const GZScheme& sch, int s, int i, int p);

// Index pairs (s,p) whose (i,p)-entry can be raised resp. lowered while
// staying a valid scheme; these match the removable resp. addable i-cells
// of the corresponding partition for 1 <= i <= N-1.
std::vector<std::pair<int, int>> scheme_removable(const GZScheme& sch, int i,
                                                  int N);
std::vector<std::pair<int, int>> scheme_addable(const GZScheme& sch, int i,
                                                int N);

// Raise (fill = true) or lower the (i,p)-entry of factor s.
GZScheme scheme_bump(const GZScheme& sch, int s, int i, int p, bool fill);

// The ladder coefficients gamma^{(s)}_{i,p}, beta^{(s)}_{i,p}: products of
// the K/L linear forms over all factors.
std::pair<RatFun, RatFun> nt_gamma_beta(const MSeq& m, const GZScheme& sch,
                                        int i, int p, int s);

// Factor pairs (a_k, b_k) representing prod_k (u - a_k)/(u - b_k).
// nt: the diagonal eigenvalue of the i-th principal minor series, poles at
// hbar'(p-1) - a_s.  uglov: the row-indexed form with shifts
// -(t m_a + hbar'(a - 3/2 + delta(j_a <= i))) over -(t m_a + hbar'(a - 3/2)),
// window L rows (0 = minimal).  Both expand to the same rational function.
std::vector<std::pair<RatFun, RatFun>>
nt_A_eigenvalue(const MSeq& m, const GZScheme& sch, int i);
std::vector<std::pair<RatFun, RatFun>>
uglov_A_eigenvalue_ratio(const Partition& lam, int i, int N, int L = 0);

// For each removable i-cell (x,y) of lam with mu = lam minus the cell, the
// r-independent ladder matrix elements (up_{lam,mu}, down_{mu,lam}) of the
// raising and lowering series between xi_lam and xi_mu.
std::map<Cell, std::pair<RatFun, RatFun>>
nt_matrix_elements(const Partition& lam, int i, int N);

// Same-factor part of the ladder coefficient against the interpolation
// denominator; validates the closed forms hbar'^2 (p - i - 1) (removable)
// and -1/(p - i - 1) (addable) and throws on mismatch.
RatFun lemma_factor_same(const MSeq& m, const GZScheme& sch, int i, int p,
                         int s, bool removable);

// Other-factor part for s2 != s; validates the three-case closed form
// keyed on l_{i+1}^{(s2)} resp. l_{i-1}^{(s2)} versus l_i^{(s2)}.
RatFun lemma_factor_other(const MSeq& m, const GZScheme& sch, int i, int p,
                          int s, int s2, bool removable);

// Factor pairs of f(u; r) = prod_{s=1..r} (u + (t + hbar' N)s - hbar')
// / (u + (t + hbar' N)s).
std::vector<std::pair<RatFun, RatFun>> twist_pole_pairs(int r, int N);

// f(u; r) expanded to the given order in u^{-1}.
USeries twist_factor(int r, int order, int N);

// Factor pairs of g_i(u + shift) = prod_{k=0..i-1} f(u + shift - hbar' k; r).
std::vector<std::pair<RatFun, RatFun>>
twist_g_pairs(int i, int r, int N, const RatFun& shift);

} // namespace yfock
