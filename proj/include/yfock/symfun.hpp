#pragma once

#include <map>

#include "yfock/partition.hpp"
#include "yfock/ratfun.hpp"

namespace yfock {

enum class SymBasis { SCHUR, POWER };

// A graded component of the ring of symmetric functions: a finite linear
// combination of basis elements indexed by partitions of one common size.
class SymFun {
  public:
    explicit SymFun(SymBasis basis) : basis_(basis) {}
    static SymFun unit(SymBasis basis, const Partition& lam);

    SymBasis basis() const { return basis_; }
    const std::map<Partition, RatFun>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const; // -1 when zero

    void add_term(const Partition& lam, const RatFun& c);
    RatFun coeff(const Partition& lam) const;

    SymFun operator+(const SymFun& o) const;
    SymFun operator-(const SymFun& o) const;
    SymFun operator*(const RatFun& c) const;

    bool operator==(const SymFun& o) const {
        return basis_ == o.basis_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const SymFun& o) const { return !(*this == o); }

  private:
    SymBasis basis_;
    std::map<Partition, RatFun> coeffs_;
};

// z_lambda = prod_i i^{m_i} m_i! for lambda = (1^{m_1} 2^{m_2} ...).
mpz_class z_factor(const Partition& lam);

// Number of nonzero parts divisible by N.
int count_parts_divisible(const Partition& lam, int N);

// Symmetric group character chi^lambda_mu (Murnaghan-Nakayama).
mpz_class character_value(const Partition& lam, const Partition& mu);

SymFun schur_to_power(const Partition& lam);
SymFun power_to_schur(const Partition& mu);
SymFun convert(const SymFun& f, SymBasis target);

// <p_lambda, p_mu> = delta z_lambda (-e2/e1)^{#parts divisible by N}.
RatFun uglov_form(const SymFun& f, const SymFun& g, int N);

// Orthogonal basis element, unitriangular against Schur functions in
// dominance order (returned in the SCHUR basis).
SymFun jack_glN(const Partition& lam, int N);

// Closed norm product over cells with hook divisible by N:
// (e1 l - e2 (a+1)) / (e1 (l+1) - e2 a).
RatFun jack_norm_formula(const Partition& lam, int N);

// Expansion s_lambda = sum_mu c_mu P_mu.
std::map<Partition, RatFun> schur_in_jack(const Partition& lam, int N);

// The three hook-product ratio identities attached to removing the cell;
// evaluates both sides, verifies they agree, returns the common value.
enum class RatioPart { I, II, III };
RatFun lemma_ratio(const Partition& lam, int i, Cell cell, int N,
                   RatioPart which);

} // namespace yfock
