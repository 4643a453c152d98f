#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "yfock/partition.hpp"
#include "yfock/ratfun.hpp"

namespace yfock {

// Integer Laurent polynomial in t1, t2; exponent pair (a, b) stands for
// t1^a t2^b.  Zero coefficients are never stored.
class Laurent2 {
  public:
    using Exp = std::pair<int, int>;

    Laurent2() = default;
    static Laurent2 monomial(int a, int b, const mpz_class& c = 1);

    void add_term(int a, int b, const mpz_class& c);
    const std::map<Exp, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Laurent2 operator+(const Laurent2& o) const;
    Laurent2 operator-(const Laurent2& o) const;
    Laurent2 operator*(const Laurent2& o) const;

    // t1 -> t1^{-1}, t2 -> t2^{-1}.
    Laurent2 dual() const;
    // Terms with b - a = i mod N.
    Laurent2 component(int i, int N) const;

    bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent2& o) const { return terms_ != o.terms_; }

    std::string to_string() const;

  private:
    std::map<Exp, mpz_class> terms_;
};

// Sum of t1^x t2^y over the cells (x, y) of lam.
Laurent2 diagram_character(const Partition& lam);

// Torus weights of the tangent space at the fixed point lam: each cell with
// hook length divisible by N contributes the exponent pairs (l+1, -a) and
// (-l, a+1).  Sorted, with multiplicity.
std::vector<std::pair<int, int>> tangent_weights(const Partition& lam, int N);

// The same weights as a Laurent polynomial.
Laurent2 tangent_character(const Partition& lam, int N);

// Tangent character computed from the diagram character V = V_lam instead of
// hook data: ((t1 + t2 - t1 t2 - 1) V* V + t1 t2 V + V*)_0.
Laurent2 grothendieck_tangent(const Partition& lam, int N);

// Degree-zero part of the pairing character between mu and lam:
// ((t1 + t2 - t1 t2 - 1) V_mu* V_lam + t1 t2 V_lam + V_mu* - t1 t2)_0.
Laurent2 normal_fiber(const Partition& mu, const Partition& lam, int N);

// Equivariant bilinear form on fixed-point classes.  Diagonal value
// prod over hook-divisible cells of (e1(l+1) - e2 a)(e1 l - e2(a+1));
// zero off the diagonal.
RatFun h_form(const Partition& lam, const Partition& mu, int N);

// prod over hook-divisible cells of 1/(e1(l+1) - e2 a).
RatFun bprime_normalization(const Partition& lam, int N);

// bprime_normalization times the sign (-1)^epsilon_sign(lam, N).
RatFun b_normalization(const Partition& lam, int N);

// Raising/lowering modes acting on unnormalized fixed-point classes [lam]:
// full products over the addable/removable cells of residue i with an
// explicit sign; the cell being toggled supplies the weight (e1 x + e2 y)^r.
// Defined for N >= 2.
std::map<Partition, RatFun> fixed_point_action(bool raising, int i, int r,
                                               const Partition& lam, int N);

// The same modes on the classes scaled by bprime_normalization: the products
// collapse to the rows strictly left/right of the toggled cell and the sign
// reduces to dimension counts of those split sets.  Defined for N >= 2.
std::map<Partition, RatFun> bprime_action(bool raising, int i, int r,
                                          const Partition& lam, int N);

// Character identities for the addable/removable cells of residue i: with
// K = t1 + t2 - t1 t2 - 1 and V = diagram_character(lam),
//   (K V + 1)_i              = sum_A t1^x t2^y - sum_R t1^{x+1} t2^{y+1}
//   (K V* + t1 t2)_{-i}      = sum_A t1^{1-x} t2^{1-y} - sum_R t1^{-x} t2^{-y}
// Returns true when both hold.
bool vv_weight_identities(const Partition& lam, int i, int N);

} // namespace yfock
