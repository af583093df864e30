#pragma once

#include <string>
#include <vector>

#include "congmon/matrix.hpp"

namespace congmon {

// Prepend (strip) one zero row and column; used to embed odd-size problems
// into the even-size 2x2-block formalism.
Matrix pad_for_blocks(const Matrix& m);
Matrix strip_padding(const Matrix& m);

// Labeled spanning set of a tangent algebra. Every matrix is n x n and is
// verified to solve X^t A + A X = 0 for the relevant A before return.
struct GeneratorSet {
    std::size_t n = 0;
    FieldTag tag{};
    std::vector<std::string> labels;
    std::vector<Matrix> mats;

    std::size_t size() const { return mats.size(); }
    // Index of a label; throws precondition_error when absent.
    std::size_t index_of(const std::string& label) const;
};

// Closed-form basis of {X : X^t A_n + A_n X = 0}: the alternating diagonal
// h plus the ladder matrices e_k. Dimension = ceil((n-2)/2) + 1.
TangentBasis basis_solAn(std::size_t n, const FieldTag& tag = FieldTag::rationals());
GeneratorSet generators_solAn(std::size_t n, const FieldTag& tag = FieldTag::rationals());

// Closed-form basis of {X : X^t A_n^2 + A_n^2 X = 0}, built from the free
// 2x2-block template of the class of n mod 4 (odd n computed internally in
// the padded (n+1)-size block space, returned stripped to n x n).
// Dimensions: n, n+2, n, n+1 for n mod 4 = 0, 2, 1, 3.
// Preconditions: n >= 4, 6, 5, 7 respectively for n mod 4 = 0, 2, 1, 3.
TangentBasis basis_solAn2(std::size_t n, const FieldTag& tag = FieldTag::rationals());

// Named generators h1, h2, e, f (and g for n = 1 mod 4) plus the graded
// families a_k, b_k, c_k, d_k. Same span as basis_solAn2.
GeneratorSet generators_solAn2(std::size_t n, const FieldTag& tag = FieldTag::rationals());

struct BracketTerm {
    Scalar coef;
    std::size_t index; // into the generator list
};

struct BracketTable {
    std::vector<std::string> labels;
    std::vector<Matrix> mats;
    // entries[i][j] = coordinates of [mats[i], mats[j]] in the generator span.
    std::vector<std::vector<std::vector<BracketTerm>>> entries;
    bool closed = false;       // every bracket lies in the span
    bool antisymmetric = false;
    bool jacobi = false;       // Jacobi identity, expanded through the table
};

// Full commutator table of a generator set whose span is a Lie algebra.
BracketTable bracket_table(const GeneratorSet& gens);

// Basis (as matrices) of span{[x, y] : x in a, y in b}.
std::vector<Matrix> bracket_span(const std::vector<Matrix>& a,
                                 const std::vector<Matrix>& b);

// Dimensions of g, [g,g], [[g,g],[g,g]], ... until stabilization.
std::vector<std::size_t> derived_series_dims(const std::vector<Matrix>& g);
// Dimensions of g, [g,g], [g,[g,g]], ... until stabilization.
std::vector<std::size_t> lower_central_series_dims(const std::vector<Matrix>& g);
bool is_solvable(const std::vector<Matrix>& g);
bool is_nilpotent(const std::vector<Matrix>& g);

// Structural decomposition of sol_{A_n^2}, checked by exact span computation.
struct RadicalReport {
    std::size_t n = 0;
    int residue = 0; // n mod 4
    std::size_t algebra_dim = 0;
    std::size_t radical_dim = 0;
    std::size_t quotient_dim = 0;
    bool radical_is_ideal = false;
    bool radical_solvable = false;
    bool nil_part_nilpotent = false; // the span of all a_k, b_k, c_k, d_k (+ e,f,g for odd n)
    bool algebra_solvable = false;
    bool quotient_is_sl2 = false;    // even n: images of h1-h2, e, f
    bool quotient_abelian = false;   // odd n: two-dimensional abelian quotient
    bool all_claims_hold = false;
};

RadicalReport radical_decomposition(std::size_t n, const FieldTag& tag = FieldTag::rationals());

// The degree-lowering morphism sol_{A^2_{5+4m}} -> sol_{A^2_{3+4m}}:
// h1 <-> h2, e -> e, g -> -f, a_k -> d_k, b_k -> c_k, c_k -> b_k,
// d_k -> a_k. The published image f -> 0 fails to intertwine [e, g]
// (because [e, f] = c_1 on the target, not 0); with repaired_f_image the
// map sends f -> -c_1 instead, which does intertwine every bracket.
// True iff the selected variant intertwines all generator brackets.
bool phi_morphism_check(std::size_t m, const FieldTag& tag = FieldTag::rationals(),
                        std::string* diagnostics = nullptr, bool repaired_f_image = true);

} // namespace congmon
