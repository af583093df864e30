#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "congmon/scalar.hpp"

namespace congmon {

// Dense rectangular matrix over one tagged exact field. Indices are
// 0-based in code; the 1-based E_{ij} helpers adjust internally.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldTag& tag)
        : rows_(rows), cols_(cols), tag_(tag), e_(rows * cols, Scalar::zero(tag)) {}

    static Matrix identity(std::size_t n, const FieldTag& tag);
    // Unit matrix E_{ij} in conventional 1-based indexing.
    static Matrix unit(std::size_t n, std::size_t i1, std::size_t j1, const FieldTag& tag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldTag& tag() const { return tag_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix transpose() const;
    Matrix conj() const;
    Matrix conj_transpose() const { return conj().transpose(); }
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    // Submatrix copy-out / paste-in (0-based corner).
    Matrix block(std::size_t i, std::size_t j, std::size_t r, std::size_t c) const;
    void set_block(std::size_t i, std::size_t j, const Matrix& B);

    std::string str() const; // multi-line human-readable dump

private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldTag tag_{};
    std::vector<Scalar> e_;
};

struct RrefResult {
    Matrix r;                       // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per pivot row
    std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);

// Basis of {v : Mv = 0} as n x 1 column vectors; count = cols - rank.
std::vector<Matrix> kernel(const Matrix& m);
// Basis of ker A ∩ ker B via the vertically stacked matrix.
std::vector<Matrix> kernel_intersection(const Matrix& a, const Matrix& b);

Scalar determinant(const Matrix& m);
Matrix inverse(const Matrix& m); // throws precondition_error when singular
bool is_invertible(const Matrix& m);

// P^t A P — the congruence action.
Matrix congruent_transform(const Matrix& p, const Matrix& a);
Matrix direct_sum(const std::vector<Matrix>& blocks);

Matrix vstack(const Matrix& a, const Matrix& b);

// Labeled, linearly independent basis of {X : X^t A + A X = 0}.
struct TangentBasis {
    std::size_t n = 0;
    FieldTag tag{};
    std::vector<Matrix> basis;
    std::vector<std::string> labels;

    std::size_t dim() const { return basis.size(); }
};

// Generic tangent-equation solver: assembles the n² x n² system
// Σ_k (X_{k,i} A_{k,j} + A_{i,k} X_{k,j}) = 0 over all (i,j) and
// de-vectorizes its nullspace. Ground-truth oracle for every closed form.
TangentBasis solve_tangent(const Matrix& a);

// Row-vectorization of a matrix (1 x rows*cols).
Matrix vectorize(const Matrix& m);

// RREF of the span of the vectorized matrices; rows are the canonical
// spanning set. Used for span comparison and membership.
Matrix span_rref(const std::vector<Matrix>& mats);
std::size_t span_dim(const std::vector<Matrix>& mats);
bool span_equal(const std::vector<Matrix>& a, const std::vector<Matrix>& b);
bool span_equal(const TangentBasis& a, const TangentBasis& b);
// True iff m lies in the linear span of mats.
bool in_span(const Matrix& m, const std::vector<Matrix>& mats);
// True iff every element of sub lies in the span of sup.
bool span_contains(const std::vector<Matrix>& sup, const std::vector<Matrix>& sub);
// Coordinates of m in the given (independent) spanning set, if any.
bool span_coordinates(const Matrix& m, const std::vector<Matrix>& mats,
                      std::vector<Scalar>& coords);

} // namespace congmon
