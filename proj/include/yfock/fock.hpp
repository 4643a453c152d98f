#pragma once

#include <map>
#include <utility>
#include <vector>

#include "yfock/partition.hpp"
#include "yfock/ratfun.hpp"

namespace yfock {

// SCHUR carries the Chevalley action, JACK the Drinfeld-generator action,
// BFIX the normalized fixed-point action; JACK and BFIX coefficients are
// identified componentwise.
enum class FockBasis { SCHUR, JACK, BFIX };

// Fock-space vector: finite linear combination indexed by partitions.
// Mixed degrees are allowed (operators move degree by one).
class FockVec {
  public:
    explicit FockVec(FockBasis basis) : basis_(basis) {}
    static FockVec unit(FockBasis basis, const Partition& lam);

    FockBasis basis() const { return basis_; }
    const std::map<Partition, RatFun>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const Partition& lam, const RatFun& c);
    RatFun coeff(const Partition& lam) const;

    FockVec operator+(const FockVec& o) const;
    FockVec operator-(const FockVec& o) const;
    FockVec operator*(const RatFun& c) const;

    bool operator==(const FockVec& o) const {
        return basis_ == o.basis_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const FockVec& o) const { return !(*this == o); }

  private:
    FockBasis basis_;
    std::map<Partition, RatFun> coeffs_;
};

enum class OpFamily {
    AFFINE_E,  // removes a cell of residue i, coefficient 1
    AFFINE_F,  // adds a cell of residue i, coefficient 1
    AFFINE_H,  // diagonal: #addable - #removable
    YSL_XP,    // Drinfeld X^+_{i,r}, 1 <= i <= N-1, on the JACK basis
    YSL_XM,    // Drinfeld X^-_{i,r}
    YSL_H,     // Drinfeld H_{i,r}, diagonal
    AY_XP,     // x^+_{i,r}, i in Z/N, on the BFIX basis
    AY_XM,     // x^-_{i,r}
    AY_H,      // h_{i,r}, diagonal
};

struct OperatorId {
    OpFamily family;
    int i = 0;
    int r = 0;
};

// Applies one generator; validates the family/basis pairing and the index
// range, and enforces r = 0 for the Chevalley family.
FockVec act(const OperatorId& op, const FockVec& v, int N);

// Factor list (a_k, b_k) representing prod_k (u - a_k)/(u - b_k), the
// diagonal eigenvalue series of the h-family on the basis element lam.
std::vector<std::pair<RatFun, RatFun>>
h_eigen_factors(OpFamily family, int i, const Partition& lam, int N);

// Coefficient of u^{-r-1} in the eigenvalue series, divided by
// hbar = e1 + e2: the exact eigenvalue of h_{i,r} (resp. H_{i,r}).
RatFun h_r_eigenvalue(OpFamily family, int i, int r, const Partition& lam,
                      int N);

// Componentwise between JACK and BFIX; through the orthogonal-basis
// expansions to and from SCHUR.
FockVec change_basis(const FockVec& v, FockBasis target, int N);

} // namespace yfock
