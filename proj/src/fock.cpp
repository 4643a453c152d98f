#include "yfock/fock.hpp"

#include "yfock/symfun.hpp"
#include "yfock/useries.hpp"

namespace yfock {

namespace {

const char* basis_name(FockBasis b) {
    switch (b) {
    case FockBasis::SCHUR:
        return "schur";
    case FockBasis::JACK:
        return "jack";
    default:
        return "b";
    }
}

} // namespace

FockVec FockVec::unit(FockBasis basis, const Partition& lam) {
    FockVec v(basis);
    v.add_term(lam, RatFun(1));
    return v;
}

void FockVec::add_term(const Partition& lam, const RatFun& c) {
    if (c.is_zero())
        return;
    auto it = coeffs_.find(lam);
    if (it == coeffs_.end()) {
        coeffs_.emplace(lam, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

RatFun FockVec::coeff(const Partition& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? RatFun(0) : it->second;
}

FockVec FockVec::operator+(const FockVec& o) const {
    if (basis_ != o.basis_)
        throw domain_error(std::string("cannot add ") + basis_name(basis_) +
                           " and " + basis_name(o.basis_) + " vectors");
    FockVec r = *this;
    for (const auto& [lam, c] : o.coeffs_)
        r.add_term(lam, c);
    return r;
}

FockVec FockVec::operator-(const FockVec& o) const {
    if (basis_ != o.basis_)
        throw domain_error(std::string("cannot subtract ") +
                           basis_name(o.basis_) + " from " +
                           basis_name(basis_) + " vectors");
    FockVec r = *this;
    for (const auto& [lam, c] : o.coeffs_)
        r.add_term(lam, -c);
    return r;
}

FockVec FockVec::operator*(const RatFun& c) const {
    FockVec r(basis_);
    if (c.is_zero())
        return r;
    for (const auto& [lam, v] : coeffs_)
        r.coeffs_.emplace(lam, v * c);
    return r;
}

namespace {

RatFun lin(int p, int q) {
    return RatFun(IntPoly(p) * IntPoly::variable(0) +
                  IntPoly(q) * IntPoly::variable(1));
}

// Half-integer multiple of e1 - e2 used by the Drinfeld presentation.
RatFun drinfeld_shift(int i) {
    return RatFun(IntPoly(i) * (IntPoly::variable(0) - IntPoly::variable(1)),
                  IntPoly(2));
}

// prod over adds of (e1(x-x'+1)+e2(y-y'+1))/(e1(x-x')+e2(y-y')) times
// prod over rems of (e1(x-x'-1)+e2(y-y'-1))/(e1(x-x')+e2(y-y')).
RatFun cell_product(Cell pivot, const std::vector<Cell>& adds,
                    const std::vector<Cell>& rems) {
    int x = pivot.first, y = pivot.second;
    RatFun p(1);
    for (Cell s : adds)
        p *= lin(x - s.first + 1, y - s.second + 1) /
             lin(x - s.first, y - s.second);
    for (Cell s : rems)
        p *= lin(x - s.first - 1, y - s.second - 1) /
             lin(x - s.first, y - s.second);
    return p;
}

RatFun weight_power(const RatFun& w, int r) {
    return r == 0 ? RatFun(1) : w.pow(r); // 0^0 = 1 at r = 0
}

void require_basis(const FockVec& v, FockBasis want, const char* op) {
    if (v.basis() != want)
        throw domain_error(std::string(op) + " acts on the " +
                           basis_name(want) + " basis, got " +
                           basis_name(v.basis()));
}

// Raising pivot (x,y) in R_{lam,i}: right splits of the addable cells of
// lam and of the removable cells of lam minus the pivot.
RatFun raise_coeff(const Partition& lam, int i, Cell pivot, int N) {
    Partition mu = lam.with_cell_removed(pivot);
    auto ar = split_left_right(addable_cells(lam, i, N), pivot).second;
    auto rr = split_left_right(removable_cells(mu, i, N), pivot).second;
    return cell_product(pivot, ar, rr);
}

// Lowering pivot (x,y) in A_{mu,i}: left splits of the addable cells of
// mu plus the pivot and of the removable cells of mu.
RatFun lower_coeff(const Partition& mu, int i, Cell pivot, int N) {
    Partition lam = mu.with_cell_added(pivot);
    auto al = split_left_right(addable_cells(lam, i, N), pivot).first;
    auto rl = split_left_right(removable_cells(mu, i, N), pivot).first;
    return cell_product(pivot, al, rl);
}

} // namespace

FockVec act(const OperatorId& op, const FockVec& v, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    bool affine = op.family == OpFamily::AFFINE_E ||
                  op.family == OpFamily::AFFINE_F ||
                  op.family == OpFamily::AFFINE_H;
    bool drinfeld = op.family == OpFamily::YSL_XP ||
                    op.family == OpFamily::YSL_XM ||
                    op.family == OpFamily::YSL_H;
    if (affine) {
        require_basis(v, FockBasis::SCHUR, "the Chevalley family");
        if (op.i < 0 || op.i >= N)
            throw domain_error("index out of range");
        if (op.r != 0)
            throw domain_error("the Chevalley family has no modes");
    } else if (drinfeld) {
        require_basis(v, FockBasis::JACK, "the Drinfeld family");
        if (op.i < 1 || op.i > N - 1)
            throw domain_error("index out of range");
    } else {
        require_basis(v, FockBasis::BFIX, "the fixed-point family");
        if (op.i < 0 || op.i >= N)
            throw domain_error("index out of range");
    }
    if (op.r < 0)
        throw domain_error("mode must be nonnegative");

    FockVec out(v.basis());
    for (const auto& [lam, c] : v.coeffs()) {
        switch (op.family) {
        case OpFamily::AFFINE_E:
            for (Cell s : removable_cells(lam, op.i, N))
                out.add_term(lam.with_cell_removed(s), c);
            break;
        case OpFamily::AFFINE_F:
            for (Cell s : addable_cells(lam, op.i, N))
                out.add_term(lam.with_cell_added(s), c);
            break;
        case OpFamily::AFFINE_H: {
            long diff =
                static_cast<long>(addable_cells(lam, op.i, N).size()) -
                static_cast<long>(removable_cells(lam, op.i, N).size());
            out.add_term(lam, c * RatFun(diff));
            break;
        }
        case OpFamily::YSL_XP:
        case OpFamily::AY_XP:
            for (Cell s : removable_cells(lam, op.i, N)) {
                RatFun w = lin(s.first, s.second);
                if (op.family == OpFamily::YSL_XP)
                    w += drinfeld_shift(op.i);
                out.add_term(lam.with_cell_removed(s),
                             c * weight_power(w, op.r) *
                                 raise_coeff(lam, op.i, s, N));
            }
            break;
        case OpFamily::YSL_XM:
        case OpFamily::AY_XM:
            for (Cell s : addable_cells(lam, op.i, N)) {
                RatFun w = lin(s.first, s.second);
                if (op.family == OpFamily::YSL_XM)
                    w += drinfeld_shift(op.i);
                out.add_term(lam.with_cell_added(s),
                             c * weight_power(w, op.r) *
                                 lower_coeff(lam, op.i, s, N));
            }
            break;
        case OpFamily::YSL_H:
        case OpFamily::AY_H:
            out.add_term(lam, c * h_r_eigenvalue(op.family, op.i, op.r, lam,
                                                 N));
            break;
        }
    }
    return out;
}

std::vector<std::pair<RatFun, RatFun>>
h_eigen_factors(OpFamily family, int i, const Partition& lam, int N) {
    if (family != OpFamily::YSL_H && family != OpFamily::AY_H)
        throw domain_error("not a diagonal family");
    if (N < 1)
        throw domain_error("N must be positive");
    bool shifted = family == OpFamily::YSL_H;
    if (shifted ? (i < 1 || i > N - 1) : (i < 0 || i >= N))
        throw domain_error("index out of range");
    RatFun shift = shifted ? drinfeld_shift(i) : RatFun(0);
    std::vector<std::pair<RatFun, RatFun>> factors;
    for (Cell s : addable_cells(lam, i, N))
        factors.emplace_back(lin(s.first - 1, s.second - 1) + shift,
                             lin(s.first, s.second) + shift);
    for (Cell s : removable_cells(lam, i, N))
        factors.emplace_back(lin(s.first + 1, s.second + 1) + shift,
                             lin(s.first, s.second) + shift);
    return factors;
}

RatFun h_r_eigenvalue(OpFamily family, int i, int r, const Partition& lam,
                      int N) {
    if (r < 0)
        throw domain_error("mode must be nonnegative");
    USeries series =
        expand_linear_quotient(h_eigen_factors(family, i, lam, N), r + 1);
    RatFun hbar(IntPoly::variable(0) + IntPoly::variable(1));
    return series[r + 1] / hbar;
}

FockVec change_basis(const FockVec& v, FockBasis target, int N) {
    if (N < 1)
        throw domain_error("N must be positive");
    if (v.basis() == target)
        return v;

    auto retag = [](const FockVec& w, FockBasis tag) {
        FockVec out(tag);
        for (const auto& [lam, c] : w.coeffs())
            out.add_term(lam, c);
        return out;
    };
    bool src_orth = v.basis() != FockBasis::SCHUR;
    bool dst_orth = target != FockBasis::SCHUR;
    if (src_orth && dst_orth)
        return retag(v, target);

    FockVec out(target);
    if (src_orth) {
        // orthogonal basis element -> its Schur expansion
        for (const auto& [lam, c] : v.coeffs()) {
            SymFun p = jack_glN(lam, N);
            for (const auto& [mu, d] : p.coeffs())
                out.add_term(mu, c * d);
        }
    } else {
        // Schur element -> coefficients against the orthogonal basis
        for (const auto& [lam, c] : v.coeffs())
            for (const auto& [mu, d] : schur_in_jack(lam, N))
                out.add_term(mu, c * d);
    }
    return out;
}

} // namespace yfock
