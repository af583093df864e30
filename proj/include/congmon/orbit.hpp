#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "congmon/groups.hpp"
#include "congmon/matrix.hpp"

namespace congmon {

// The displayed three-parameter element of Sol_{A_6}; x0 must be nonzero.
Matrix solA6_element(const Scalar& x0, const Scalar& x1, const Scalar& x2);

// Element of Sol_{A_8^2} built from an invertible 2x2 block s and a free
// 2x2 block x (the two-parameter diagonal-plus-corner display).
Matrix solA8sq_element(const Matrix& s, const Matrix& x);

enum class StabilizerClass { full_group, n_subgroup, x2_family, trivial };
std::string stabilizer_class_name(StabilizerClass c);

// Exact stabilizer of Y under left multiplication by the Sol_{A_6}
// family: the affine solution set of g(x0,x1,x2) Y = Y.
struct StabilizerReport {
    StabilizerClass cls = StabilizerClass::trivial;
    bool x0_forced_one = true; // false only when Y = 0
    bool x1_free = false;
    bool x2_free = false;
    std::string note;
};

StabilizerReport stabilizer_solA6(const Matrix& y);

// True iff det vanishes identically on the span of the given 2x2
// matrices, decided by polarizing the determinant form. Rejects
// characteristic two, where polarization degenerates.
bool singular_subspace_2x2(const std::vector<Matrix>& mats);

// Certificate for trivial stabilizer of an 8x8 matrix under the left
// Sol_{A_8^2} action: true when one of the two tested block rows spans a
// nonsingular 2x2 subspace.
struct TrivialStabilizerReport {
    bool certified_trivial = false;
    std::string shapes; // zero-pattern summary of the tested block rows
};

TrivialStabilizerReport stabilizer_trivial_solA8sq(const Matrix& x);

// Sampled orbit points g.Y for verified group elements g; every output W
// satisfies W^t A W = Y^t A Y exactly (A the family form).
std::vector<Matrix> orbit_sample(GroupFamily f, std::size_t n, std::uint64_t seed,
                                 const Matrix& y, std::size_t count);

} // namespace congmon
