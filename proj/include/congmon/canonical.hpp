#pragma once

#include <optional>
#include <vector>

#include "congmon/matrix.hpp"

namespace congmon {

// The six Aitken–Turnbull canonical block types under congruence.
enum class BlockKind { A_odd, B_even, C_odd, D_even, E_even, F_even };

struct CanonicalBlock {
    BlockKind kind;
    std::size_t size;
    std::optional<Scalar> c; // B_even only, c != +-1
};

// A_n: ones exactly on the first superdiagonal (nilpotency index n).
Matrix make_An(std::size_t n, const FieldTag& tag = FieldTag::rationals());
// Exact k-th power of A_n (ones on the k-th superdiagonal), 1 <= k < n.
Matrix make_An_power(std::size_t n, std::size_t k, const FieldTag& tag = FieldTag::rationals());

// k x k anti-diagonal templates: J(c) has 1 on the anti-diagonal and c just
// below it; I(c) has c on the anti-diagonal and 1 just below it.
Matrix make_J(const Scalar& c, std::size_t k);
Matrix make_I(const Scalar& c, std::size_t k);

Matrix make_block(const CanonicalBlock& b, const FieldTag& tag = FieldTag::rationals());

// Path-relabeling permutation: sigma^t A_n sigma = B_n(0) (n even) or the
// calligraphic A_n (n odd).
Matrix make_sigma(std::size_t n, const FieldTag& tag = FieldTag::rationals());

// Adjacency matrix of the relabeled path from the proposition's figure —
// the unambiguous verification target for make_sigma.
Matrix relabeled_path_adjacency(std::size_t n, const FieldTag& tag = FieldTag::rationals());

struct PowerDecomposition {
    std::vector<std::size_t> component_sizes; // path components of the k-th power
    std::vector<CanonicalBlock> blocks;       // A_m (m odd) or B_m(0) (m even) per component
    Matrix permutation;                       // P with P^t A_n^k P = direct sum of blocks
    Matrix assembled;                         // the direct sum itself
    // The published component-count formulas (recorded for comparison, not asserted).
    long formula_n1 = 0;
    long formula_alpha = 0;
    long formula_beta_num = 0, formula_beta_den = 0; // beta as a fraction; may not divide
    bool formulas_match = false;
};

// Decompose A_n^k by the directed-path components (vertices r, r+k, ...);
// the permutation is certified by exact congruence before return.
PowerDecomposition decompose_An_power(std::size_t n, std::size_t k,
                                      const FieldTag& tag = FieldTag::rationals());

} // namespace congmon
