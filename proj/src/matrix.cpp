#include "congmon/matrix.hpp"

#include <sstream>

namespace congmon {

Matrix Matrix::identity(std::size_t n, const FieldTag& tag) {
    Matrix m(n, n, tag);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(tag);
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i1, std::size_t j1, const FieldTag& tag) {
    require(1 <= i1 && i1 <= n && 1 <= j1 && j1 <= n, "unit matrix index out of range");
    Matrix m(n, n, tag);
    m.at(i1 - 1, j1 - 1) = Scalar::one(tag);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, tag_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::conj() const {
    Matrix c = *this;
    for (auto& s : c.e_) s = s.conj();
    return c;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in matrix sum");
    Matrix s(rows_, cols_, tag_);
    for (std::size_t k = 0; k < e_.size(); ++k) s.e_[k] = e_[k] + o.e_[k];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix s = *this;
    for (auto& x : s.e_) x = -x;
    return s;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, "shape mismatch in matrix product");
    require(tag_ == o.tag_, "field mismatch in matrix product");
    Matrix p(rows_, o.cols_, tag_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                p.at(i, j) = p.at(i, j) + a * o.at(k, j);
        }
    return p;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix s = *this;
    for (auto& x : s.e_) x = x * c;
    return s;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(tag_ == o.tag_)) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::block(std::size_t i, std::size_t j, std::size_t r, std::size_t c) const {
    require(i + r <= rows_ && j + c <= cols_, "block out of range");
    Matrix b(r, c, tag_);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t bcol = 0; bcol < c; ++bcol) b.at(a, bcol) = at(i + a, j + bcol);
    return b;
}

void Matrix::set_block(std::size_t i, std::size_t j, const Matrix& B) {
    require(i + B.rows() <= rows_ && j + B.cols() <= cols_, "block out of range");
    for (std::size_t a = 0; a < B.rows(); ++a)
        for (std::size_t b = 0; b < B.cols(); ++b) at(i + a, j + b) = B.at(a, b);
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? " " : "");
        os << " ]\n";
    }
    return os.str();
}

RrefResult rref(const Matrix& m) {
    require(m.rows() > 0 && m.cols() > 0, "rref of empty matrix");
    RrefResult out;
    out.r = m;
    Matrix& r = out.r;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t piv = row;
        while (piv < r.rows() && r.at(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(row, j));
        const Scalar inv = r.at(row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) = r.at(row, j) * inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            const Scalar f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - f * r.at(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = out.pivots.size();
    return out;
}

std::vector<Matrix> kernel(const Matrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<Matrix> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Matrix v(m.cols(), 1, m.tag());
        v.at(free_col, 0) = Scalar::one(m.tag());
        for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
            v.at(rr.pivots[pr], 0) = -rr.r.at(pr, free_col);
        basis.push_back(v);
    }
    for (const Matrix& v : basis)
        verify((m * v).is_zero(), "kernel vector fails Mv = 0");
    return basis;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols() && a.tag() == b.tag(), "vstack shape/field mismatch");
    Matrix s(a.rows() + b.rows(), a.cols(), a.tag());
    s.set_block(0, 0, a);
    s.set_block(a.rows(), 0, b);
    return s;
}

std::vector<Matrix> kernel_intersection(const Matrix& a, const Matrix& b) {
    return kernel(vstack(a, b));
}

Scalar determinant(const Matrix& m) {
    require(m.is_square(), "determinant of non-square matrix");
    Matrix r = m;
    const std::size_t n = r.rows();
    Scalar det = Scalar::one(m.tag());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && r.at(piv, col).is_zero()) ++piv;
        if (piv == n) return Scalar::zero(m.tag());
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(r.at(piv, j), r.at(col, j));
            det = -det;
        }
        det = det * r.at(col, col);
        const Scalar inv = r.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (r.at(i, col).is_zero()) continue;
            const Scalar f = r.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) r.at(i, j) = r.at(i, j) - f * r.at(col, j);
        }
    }
    return det;
}

bool is_invertible(const Matrix& m) {
    return m.is_square() && !determinant(m).is_zero();
}

Matrix inverse(const Matrix& m) {
    require(m.is_square(), "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.tag());
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(n, m.tag()));
    const RrefResult rr = rref(aug);
    require(rr.rank >= n && rr.pivots[n - 1] == n - 1, "matrix is singular");
    return rr.r.block(0, n, n, n);
}

Matrix congruent_transform(const Matrix& p, const Matrix& a) {
    return p.transpose() * a * p;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
    require(!blocks.empty(), "direct_sum of empty list");
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        require(b.tag() == blocks.front().tag(), "field mismatch in direct_sum");
        r += b.rows();
        c += b.cols();
    }
    Matrix s(r, c, blocks.front().tag());
    std::size_t i = 0, j = 0;
    for (const auto& b : blocks) {
        s.set_block(i, j, b);
        i += b.rows();
        j += b.cols();
    }
    return s;
}

Matrix vectorize(const Matrix& m) {
    Matrix v(1, m.rows() * m.cols(), m.tag());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.at(0, i * m.cols() + j) = m.at(i, j);
    return v;
}

TangentBasis solve_tangent(const Matrix& a) {
    require(a.is_square(), "solve_tangent needs a square matrix");
    const std::size_t n = a.rows();
    // Row (i,j) of the system is the (i,j) entry of X^t A + A X; the unknown
    // vector is X flattened row-major: X_{k,l} at index k*n + l.
    Matrix sys(n * n, n * n, a.tag());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                // X_{k,i} A_{k,j}
                sys.at(row, k * n + i) = sys.at(row, k * n + i) + a.at(k, j);
                // A_{i,k} X_{k,j}
                sys.at(row, k * n + j) = sys.at(row, k * n + j) + a.at(i, k);
            }
        }
    TangentBasis tb;
    tb.n = n;
    tb.tag = a.tag();
    std::size_t idx = 0;
    for (const Matrix& v : kernel(sys)) {
        Matrix x(n, n, a.tag());
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) x.at(k, l) = v.at(k * n + l, 0);
        verify((x.transpose() * a + a * x).is_zero(), "tangent basis element fails the equation");
        tb.basis.push_back(x);
        tb.labels.push_back("t" + std::to_string(idx++));
    }
    return tb;
}

Matrix span_rref(const std::vector<Matrix>& mats) {
    require(!mats.empty(), "span of empty set");
    const std::size_t len = mats.front().rows() * mats.front().cols();
    Matrix rows(mats.size(), len, mats.front().tag());
    for (std::size_t k = 0; k < mats.size(); ++k) {
        require(mats[k].rows() == mats.front().rows() && mats[k].cols() == mats.front().cols(),
                "span over mixed shapes");
        rows.set_block(k, 0, vectorize(mats[k]));
    }
    RrefResult rr = rref(rows);
    return rr.r.block(0, 0, rr.rank == 0 ? 1 : rr.rank, len); // keep one zero row for dim 0
}

std::size_t span_dim(const std::vector<Matrix>& mats) {
    if (mats.empty()) return 0;
    Matrix r = span_rref(mats);
    return r.block(0, 0, r.rows(), r.cols()).is_zero() ? 0 : r.rows();
}

bool span_equal(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    if (a.empty() || b.empty()) return span_dim(a) == span_dim(b);
    return span_rref(a) == span_rref(b);
}

bool span_equal(const TangentBasis& a, const TangentBasis& b) {
    require(a.n == b.n && a.tag == b.tag, "span_equal over mismatched ambient spaces");
    return span_equal(a.basis, b.basis);
}

bool span_coordinates(const Matrix& m, const std::vector<Matrix>& mats,
                      std::vector<Scalar>& coords) {
    coords.clear();
    if (mats.empty()) return m.is_zero();
    const std::size_t len = m.rows() * m.cols();
    // Solve c^T * [rows of vectorized mats] = vec(m): transpose to a linear system.
    Matrix sys(len, mats.size() + 1, m.tag());
    for (std::size_t k = 0; k < mats.size(); ++k) {
        Matrix v = vectorize(mats[k]);
        for (std::size_t j = 0; j < len; ++j) sys.at(j, k) = v.at(0, j);
    }
    Matrix vm = vectorize(m);
    for (std::size_t j = 0; j < len; ++j) sys.at(j, mats.size()) = vm.at(0, j);
    RrefResult rr = rref(sys);
    for (std::size_t c : rr.pivots)
        if (c == mats.size()) return false; // inconsistent
    coords.assign(mats.size(), Scalar::zero(m.tag()));
    for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
        coords[rr.pivots[pr]] = rr.r.at(pr, mats.size());
    return true;
}

bool in_span(const Matrix& m, const std::vector<Matrix>& mats) {
    std::vector<Scalar> c;
    return span_coordinates(m, mats, c);
}

bool span_contains(const std::vector<Matrix>& sup, const std::vector<Matrix>& sub) {
    for (const auto& m : sub)
        if (!in_span(m, sup)) return false;
    return true;
}

} // namespace congmon
