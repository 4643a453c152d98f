#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yfock/fock.hpp"
#include "yfock/partition.hpp"
#include "yfock/ratfun.hpp"

namespace yfock {

// One concrete relation check: a relation id with all indices pinned.
// Ids: eq:1..eq:18 (affine family, b basis), sl:1..sl:6 (Drinfeld family,
// Jack basis), aff:1..aff:4 and aff:serre (Chevalley family, Schur basis),
// adjoint, appendix-a, appendix-b.
struct RelationInstance {
    std::string id;
    int sign = 0;           // +1 / -1 where the relation has a +- version
    int i = 0;
    int j = 0;
    std::vector<int> modes; // relation-specific mode list (r, s, or a tuple)
    int N = 2;
    int D = 6;
    int mutation = 0;       // 0 faithful; k > 0 flips the k-th product term
};

std::string describe(const RelationInstance& inst);

struct CheckWitness {
    Partition lam;       // basis vector on which the check failed
    RatFun coefficient;  // offending coefficient
    std::string detail;  // target basis element or grid point
};

struct CheckReport {
    RelationInstance instance;
    bool pass = false;
    std::optional<CheckWitness> witness;
};

// Applies both sides of the relation to every basis vector of degree <= D
// and compares coefficientwise.  Throws on invalid instances; a violated
// relation yields pass = false with a witness.
CheckReport check_relation(const RelationInstance& inst);

// Gram-matrix transposition identity for the Drinfeld pair (X^+_{i,r},
// X^-_{i,r}) over degree <= D, plus diagonality of H_{i,r}.
CheckReport check_adjointness(int i, int r, int D, int N);

// The two scalar identities behind the degree-two exchange relations:
// (a) symbolically in the four-variable field, (b) on a deterministic
// integer grid exceeding the per-variable degree bounds.  mutate flips one
// sign in (a) and must be caught.
CheckReport check_appendix(char which, bool mutate = false);

// Deterministic instance enumeration for a named suite:
// affine-yangian | yangian-sl | affine-lie | adjoint | appendix | all.
std::vector<RelationInstance> enumerate_suite(const std::string& name, int N,
                                              int D, int rmax);

// Runs a suite; jobs <= 1 uses the serial reference loop, jobs > 1 the
// parallel runner.  Reports come back in enumeration order either way.
std::vector<CheckReport> run_suite(const std::string& name, int N, int D,
                                   int rmax, int jobs = 1);

} // namespace yfock
