#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congmon/canonical.hpp"
#include "congmon/matrix.hpp"

namespace congmon {

// Outcome of a group-ness decision for Sol_A = {X : X^t A X = A}.
struct GroupVerdict {
    bool is_group = false;
    std::size_t kernel_intersection_dim = 0;
    std::optional<Matrix> witness; // singular member of Sol_A when not a group
    std::string method;            // complex-criterion | star-criterion | jordan-chevalley | ...
};

// Sol_A is a group iff ker(A) ∩ ker(A^t) = {0}; when it is not, a verified
// singular solution is attached. A must be square over Q(i).
GroupVerdict is_group_complex(const Matrix& a);

// Same criterion for the conjugate-transpose monoid Sol_A^*:
// group iff ker(A) ∩ ker(A^*) = {0}; witness X = (1/(v^* v)) v v^* - I.
GroupVerdict is_group_star(const Matrix& a);

// True iff some nonzero v kills both A and B (so every member of the
// pencil lambda A + mu B does too).
bool pencil_completely_singular(const Matrix& a, const Matrix& b);

// Necessary condition over any field of characteristic != 2: the bilinear
// form (v, w) -> v^t w vanishes on ker(A) ∩ ker(A^t).
bool necessary_condition_anyfield(const Matrix& a);

// Given ker(A) ∩ ker(A^t) nontrivial, produce a singular X with
// X^t A X = A, verified by exact multiply before return.
Matrix build_singular_solution(const Matrix& a);

// Additive Jordan–Chevalley style criterion: for A = A_d + A_nil with A_d
// diagonal and A_nil nilpotent upper-triangular in Jordan canonical form,
// Sol_A is a group iff ker(A_d) ∩ ker(A_nil) ∩ ker(A_nil^t) = {0}.
GroupVerdict is_group_jordan_chevalley(const Matrix& a_d, const Matrix& a_nil);

// Direct-sum criterion: Sol of a direct sum of canonical blocks is a group
// iff the 1x1 zero block (A_1) is not a summand.
bool is_group_direct_sum(const std::vector<CanonicalBlock>& blocks);

struct BruteForceReport {
    std::uint64_t solution_count = 0;
    std::uint64_t invertible_count = 0;
    bool is_group = false; // every solution invertible
};

// Exhaustive enumeration of M_n(F_p); requires p^(n^2) <= 10^7.
BruteForceReport brute_force_monoid(const Matrix& a);

} // namespace congmon
