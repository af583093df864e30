#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "congmon/matrix.hpp"

namespace congmon {

// The five explicit families of subgroups of Sol_A: the A_n family and the
// four residue classes of the A_n^2 family. Odd-size members are built in
// the padded 2x2-block space internally and exposed stripped to n x n.
enum class GroupFamily { an, an2_mod0, an2_mod1, an2_mod2, an2_mod3 };

std::string family_name(GroupFamily f);
GroupFamily family_from_name(const std::string& s);

// The congruence target the family preserves: A_n or A_n^2.
Matrix family_form(GroupFamily f, std::size_t n, const FieldTag& tag);
// Number of unipotent parameters (scalars for an, 2x2 blocks otherwise).
std::size_t nil_param_count(GroupFamily f, std::size_t n);
// Smallest n the family's template supports.
std::size_t family_min_n(GroupFamily f);

// One group element in factored form: a diagonal (block-diagonal) part and
// the unipotent parameters of the normal factor N.
struct GroupParams {
    GroupFamily family = GroupFamily::an;
    std::size_t n = 0;
    FieldTag tag{};

    // Diagonal part.
    Scalar x0;                  // an: diag(x0, x0^{-1}, x0, ...)
    Matrix g;                   // mod0/mod2: invertible 2x2, diag(g, g^{-t}, ...)
    Scalar alpha, beta, gamma;  // mod1/mod3: g1 = [[alpha, gamma], [0, beta^{-1}]]

    // Unipotent part.
    std::vector<Scalar> xs;     // an: x_1 .. x_K
    std::vector<Matrix> xb;     // an2: 2x2 blocks x_1 .. x_K
    Scalar lambda;              // mod3 only
};

// Identity element of the family.
GroupParams identity_params(GroupFamily f, std::size_t n, const FieldTag& tag);

// Deterministic small-rational sample; the diagonal data is always
// invertible. For mod3 the caller may fix lambda (defaults to seed mod 3).
GroupParams random_params(GroupFamily f, std::size_t n, std::uint64_t seed,
                          const FieldTag& tag, const Scalar* lambda = nullptr);

// Star sequences x_1^*, ..., x_K^* attached to the unipotent parameters.
// an (even n) uses the scalar recursion x_N^* = sum_{a+b=N} x_a (x_b - x_b^*).
std::vector<Scalar> star_sequence_scalar(const std::vector<Scalar>& xs, const FieldTag& tag);
// Block recursions: mod0  x_l^* = sum_{r+s=l} x_s^t (x_r^t - x_r^*);
// mod1 restricts the left factor to even indices; mod3 splits by parity and
// feeds the off-diagonal pad block b = [[0, lambda], [0, 0]] into the odd
// entries. lambda is ignored except for mod3.
std::vector<Matrix> star_sequence(GroupFamily f, const std::vector<Matrix>& xb,
                                  const Scalar& lambda, const FieldTag& tag);

// Factors and their product. Every constructor verifies membership
// (X^t A X = A exactly) and throws verification_error otherwise.
Matrix build_D(const GroupParams& p);
Matrix build_N(const GroupParams& p);
Matrix build(const GroupParams& p); // build_D * build_N

// The family's closed-form inverse of the unipotent factor (for an even /
// mod0 / mod1 via the starred parameter formula, for mod2 as base - X, for
// mod3 via the displayed template with transposed entries below the
// diagonal). Verified against build_N(p) by exact multiplication.
Matrix invert_nil(const GroupParams& p);

// Read factored parameters back off a group element: diagonal data from
// the (block) diagonal, unipotent data from the first block row (first two
// block rows for the odd families, where the mod3 even-index blocks are
// recovered from their mirrored copies). The reconstruction is rebuilt and
// compared with the input; mismatch throws verification_error.
GroupParams semidirect_factor(const Matrix& x, GroupFamily f, std::size_t n);

// Product in factored form: multiply, then refactor.
GroupParams compose(const GroupParams& a, const GroupParams& b);
// Group inverse in factored form: exact matrix inverse, then refactor.
GroupParams invert(const GroupParams& p);

// True iff conjugating the unipotent element by the diagonal one lands
// back in N with the diagonal factor trivial.
bool conjugation_check(const GroupParams& diag_part, const GroupParams& nil_part);

} // namespace congmon
