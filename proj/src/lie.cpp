#include "congmon/lie.hpp"

#include <algorithm>
#include <cctype>

#include "congmon/canonical.hpp"
#include "congmon/error.hpp"

namespace congmon {

namespace {

bool solves_tangent(const Matrix& x, const Matrix& a) {
    return (x.transpose() * a + a * x).is_zero();
}

// Accumulate sign * E_{i,j} (1-based), silently dropping out-of-range
// indices: the closed-form index sums overshoot near the boundary and the
// overshooting terms are absent from the matrix.
void add_unit(Matrix& m, long i, long j, int sign) {
    const long n = static_cast<long>(m.rows());
    if (i < 1 || j < 1 || i > n || j > static_cast<long>(m.cols())) return;
    Scalar s = Scalar::integer(sign, m.tag());
    m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
        m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) + s;
}

Matrix zeros(std::size_t r, std::size_t c, const FieldTag& tag) { return Matrix(r, c, tag); }

// ---- 2x2-block templates -------------------------------------------------
//
// The tangent algebra of A_n^2 is computed blockwise in M_{m}(M_2). The
// whole block matrix is determined by its first block row (even n) or its
// first two block rows (odd n, after padding) through
//   Y[r][1] = 0,  Y[r][2] = -Y[1][r-1]^t,  Y[r][3] = -Y[2][r-1]^t,
//   Y[r][c] = Y[r-2][c-2],
// which is exactly the propagation the tangent equation enforces.

Matrix assemble_even(const std::vector<Matrix>& y1, const FieldTag& tag) {
    const std::size_t m = y1.size() - 1; // y1 is 1-based
    Matrix full(2 * m, 2 * m, tag);
    std::vector<std::vector<Matrix>> y(m + 1, std::vector<Matrix>(m + 1, zeros(2, 2, tag)));
    for (std::size_t c = 1; c <= m; ++c) y[1][c] = y1[c];
    for (std::size_t r = 2; r <= m; ++r) {
        y[r][2] = -y1[r - 1].transpose();
        for (std::size_t c = 3; c <= m; ++c)
            if (r >= 3) y[r][c] = y[r - 2][c - 2];
    }
    for (std::size_t r = 1; r <= m; ++r)
        for (std::size_t c = 1; c <= m; ++c) full.set_block(2 * (r - 1), 2 * (c - 1), y[r][c]);
    return full;
}

Matrix assemble_odd(const std::vector<Matrix>& y1, const std::vector<Matrix>& y2,
                    const FieldTag& tag) {
    const std::size_t m = y1.size() - 1;
    Matrix full(2 * m, 2 * m, tag);
    std::vector<std::vector<Matrix>> y(m + 1, std::vector<Matrix>(m + 1, zeros(2, 2, tag)));
    for (std::size_t c = 1; c <= m; ++c) y[1][c] = y1[c];
    for (std::size_t c = 1; c <= m; ++c) y[2][c] = y2[c];
    for (std::size_t r = 3; r <= m; ++r) {
        y[r][2] = -y1[r - 1].transpose();
        if (m >= 3) y[r][3] = -y2[r - 1].transpose();
        for (std::size_t c = 4; c <= m; ++c) y[r][c] = y[r - 2][c - 2];
    }
    for (std::size_t r = 1; r <= m; ++r)
        for (std::size_t c = 1; c <= m; ++c) full.set_block(2 * (r - 1), 2 * (c - 1), y[r][c]);
    return full;
}

} // namespace

Matrix pad_for_blocks(const Matrix& m) {
    require(m.is_square(), "pad_for_blocks needs a square matrix");
    Matrix p(m.rows() + 1, m.cols() + 1, m.tag());
    p.set_block(1, 1, m);
    return p;
}

Matrix strip_padding(const Matrix& m) {
    require(m.is_square() && m.rows() >= 1, "strip_padding needs a nonempty square matrix");
    return m.block(1, 1, m.rows() - 1, m.cols() - 1);
}

std::size_t GeneratorSet::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw precondition_error("no generator labeled " + label);
}

// ---- sol_{A_n} -----------------------------------------------------------

GeneratorSet generators_solAn(std::size_t n, const FieldTag& tag) {
    require(n >= 2, "generators_solAn needs n >= 2");
    const long N = static_cast<long>(n);
    GeneratorSet g;
    g.n = n;
    g.tag = tag;
    Matrix a = make_An(n, tag);

    Matrix h(n, n, tag);
    for (long i = 1; i <= N; ++i) add_unit(h, i, i, (i % 2 == 1) ? 1 : -1);
    g.labels.push_back("h");
    g.mats.push_back(h);

    if (n % 2 == 1) {
        for (long k = 1; 2 * k <= N - 1; ++k) {
            Matrix e(n, n, tag);
            for (long l = 1; 2 * l <= N - 2 * k + 1; ++l) {
                add_unit(e, 2 * l - 1, 2 * k + 2 * l - 2, 1);
                add_unit(e, 2 * k + 2 * l - 1, 2 * l, -1);
            }
            g.labels.push_back("e" + std::to_string(k));
            g.mats.push_back(e);
        }
    } else {
        for (long k = 1; 2 * k <= N - 2; ++k) {
            Matrix e(n, n, tag);
            for (long l = 1; 2 * l <= N - 2 * k; ++l) {
                add_unit(e, 2 * l - 1, 2 * k + 2 * l - 1, 1);
                add_unit(e, 2 * k + 2 * l, 2 * l, -1);
            }
            g.labels.push_back("e" + std::to_string(k));
            g.mats.push_back(e);
        }
    }
    for (const Matrix& x : g.mats)
        if (!solves_tangent(x, a))
            throw verification_error("sol_{A_n} generator fails the tangent equation");
    return g;
}

TangentBasis basis_solAn(std::size_t n, const FieldTag& tag) {
    GeneratorSet g = generators_solAn(n, tag);
    TangentBasis b;
    b.n = n;
    b.tag = tag;
    b.basis = g.mats;
    for (std::size_t i = 0; i < g.labels.size(); ++i) b.labels.push_back("x" + std::to_string(i));
    return b;
}

// ---- sol_{A_n^2}: free-block basis --------------------------------------

TangentBasis basis_solAn2(std::size_t n, const FieldTag& tag) {
    const int res = static_cast<int>(n % 4);
    const std::size_t minimum = (res == 0) ? 4 : (res == 1) ? 5 : (res == 2) ? 6 : 7;
    require(n >= minimum, "basis_solAn2: n too small for the residue class of n mod 4");

    const bool odd = (n % 2 == 1);
    const std::size_t amb = odd ? n + 1 : n; // ambient (padded) size
    const std::size_t m = amb / 2;
    Matrix a2 = make_An_power(n, 2, tag);

    TangentBasis b;
    b.n = n;
    b.tag = tag;

    auto emit = [&](const std::string& label, const std::vector<Matrix>& y1,
                    const std::vector<Matrix>& y2) {
        Matrix full = odd ? assemble_odd(y1, y2, tag) : assemble_even(y1, tag);
        Matrix x = odd ? strip_padding(full) : full;
        if (!solves_tangent(x, a2))
            throw verification_error("sol_{A_n^2} template vector fails the tangent equation");
        b.basis.push_back(x);
        b.labels.push_back(label);
    };

    std::vector<Matrix> blank(m + 1, zeros(2, 2, tag));
    const Scalar one = Scalar::one(tag);

    if (res == 0 || res == 2) {
        // Free first-row blocks: odd block columns (res 0); block column 1
        // plus the even block columns (res 2). Every slot is a full 2x2.
        std::vector<std::size_t> slots;
        for (std::size_t c = 1; c <= m - 1; ++c) {
            if (res == 0 && c % 2 == 1) slots.push_back(c);
            if (res == 2 && (c == 1 || c % 2 == 0)) slots.push_back(c);
        }
        for (std::size_t c : slots)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    std::vector<Matrix> y1 = blank;
                    y1[c].at(i, j) = one;
                    const std::size_t col = 2 * c - 1 + j; // scalar column
                    emit("x" + std::to_string(i + 1) + "_" + std::to_string(col), y1, blank);
                }
    } else if (res == 1) {
        // Padded template: X11 = diag(0, t) tied to -t inside X22; free 2x2
        // top halves / bottom halves along the first two block rows.
        {
            std::vector<Matrix> y1 = blank, y2 = blank;
            y1[1].at(1, 1) = one;
            y2[2].at(1, 1) = -one;
            emit("x1_1", y1, y2);
        }
        for (std::size_t j = 0; j < 2; ++j) { // X22 free row
            std::vector<Matrix> y2 = blank;
            y2[2].at(0, j) = one;
            emit("x2_" + std::to_string(2 + j), blank, y2);
        }
        for (std::size_t c = 2; c + 1 <= m; c += 2) // Y1 blocks, bottom row free
            for (std::size_t j = 0; j < 2; ++j) {
                std::vector<Matrix> y1 = blank;
                y1[c].at(1, j) = one;
                emit("x1_" + std::to_string(2 * (c - 1) + j), y1, blank);
            }
        for (std::size_t c = 4; c + 1 <= m; c += 2) // Y2 blocks, top row free
            for (std::size_t j = 0; j < 2; ++j) {
                std::vector<Matrix> y2 = blank;
                y2[c].at(0, j) = one;
                emit("x2_" + std::to_string(2 * (c - 1) + j), blank, y2);
            }
    } else { // res == 3
        {
            std::vector<Matrix> y1 = blank, y2 = blank;
            y1[1].at(1, 1) = one;
            y2[2].at(1, 1) = -one;
            emit("x1_1", y1, y2);
        }
        { // X21 = [[0, s], [0, 0]] tied to -s inside Z24 (block column 3)
            std::vector<Matrix> y2 = blank;
            y2[1].at(0, 1) = one;
            if (m >= 3) y2[3].at(1, 0) = -one;
            emit("x2_1", blank, y2);
        }
        for (std::size_t j = 0; j < 2; ++j) { // X22 free row
            std::vector<Matrix> y2 = blank;
            y2[2].at(0, j) = one;
            emit("x2_" + std::to_string(2 + j), blank, y2);
        }
        for (std::size_t j = 0; j < 2; ++j) { // Z24 free row
            std::vector<Matrix> y2 = blank;
            y2[3].at(0, j) = one;
            emit("x2_" + std::to_string(4 + j), blank, y2);
        }
        for (std::size_t c = 3; c + 1 <= m; c += 2) // Y1 blocks, bottom row free
            for (std::size_t j = 0; j < 2; ++j) {
                std::vector<Matrix> y1 = blank;
                y1[c].at(1, j) = one;
                emit("x1_" + std::to_string(2 * c - 2 + j), y1, blank);
            }
        for (std::size_t c = 5; c + 1 <= m; c += 2) // Y2 blocks, top row free
            for (std::size_t j = 0; j < 2; ++j) {
                std::vector<Matrix> y2 = blank;
                y2[c].at(0, j) = one;
                emit("x2_" + std::to_string(2 * c - 2 + j), blank, y2);
            }
    }
    return b;
}

// ---- sol_{A_n^2}: named generators ---------------------------------------

GeneratorSet generators_solAn2(std::size_t n, const FieldTag& tag) {
    const int res = static_cast<int>(n % 4);
    const std::size_t minimum = (res == 0) ? 4 : (res == 1) ? 5 : (res == 2) ? 6 : 7;
    require(n >= minimum, "generators_solAn2: n too small for the residue class of n mod 4");

    const long N = static_cast<long>(n);
    Matrix a2 = make_An_power(n, 2, tag);
    GeneratorSet g;
    g.n = n;
    g.tag = tag;

    auto emit = [&](const std::string& label, Matrix x) {
        if (!solves_tangent(x, a2))
            throw verification_error("sol_{A_n^2} generator " + label +
                                     " fails the tangent equation");
        g.labels.push_back(label);
        g.mats.push_back(std::move(x));
    };
    auto fresh = [&] { return Matrix(n, n, tag); };

    if (res == 0 || res == 2) {
        const long L = (res == 0) ? N - 4 : N - 2;
        Matrix h1 = fresh(), h2 = fresh(), e = fresh(), f = fresh();
        for (long l = 0; 4 * l <= L; ++l) {
            add_unit(h1, 1 + 4 * l, 1 + 4 * l, 1);
            add_unit(h1, 3 + 4 * l, 3 + 4 * l, -1);
            add_unit(h2, 2 + 4 * l, 2 + 4 * l, 1);
            add_unit(h2, 4 + 4 * l, 4 + 4 * l, -1);
            add_unit(e, 1 + 4 * l, 2 + 4 * l, 1);
            add_unit(e, 4 + 4 * l, 3 + 4 * l, -1);
            add_unit(f, 2 + 4 * l, 1 + 4 * l, 1);
            add_unit(f, 3 + 4 * l, 4 + 4 * l, -1);
        }
        emit("h1", h1);
        emit("h2", h2);
        emit("e", e);
        emit("f", f);
        for (long k = 1; 4 * k <= L; ++k) {
            Matrix ak = fresh(), bk = fresh(), ck = fresh(), dk = fresh();
            for (long l = 0; 4 * l <= L - 4 * k; ++l) {
                if (res == 0) {
                    add_unit(ak, 1 + 4 * l, 1 + 4 * l + 4 * k, 1);
                    add_unit(ak, 3 + 4 * l + 4 * k, 3 + 4 * l, -1);
                    add_unit(bk, 1 + 4 * l, 2 + 4 * l + 4 * k, 1);
                    add_unit(bk, 4 + 4 * l + 4 * k, 3 + 4 * l, -1);
                    add_unit(ck, 2 + 4 * l, 1 + 4 * l + 4 * k, 1);
                    add_unit(ck, 3 + 4 * l + 4 * k, 4 + 4 * l, -1);
                    add_unit(dk, 2 + 4 * l, 2 + 4 * l + 4 * k, 1);
                    add_unit(dk, 4 + 4 * l + 4 * k, 4 + 4 * l, -1);
                } else {
                    add_unit(ak, 1 + 4 * l, -1 + 4 * l + 4 * k, 1);
                    add_unit(ak, 1 + 4 * l + 4 * k, 3 + 4 * l, -1);
                    add_unit(bk, 1 + 4 * l, 4 * l + 4 * k, 1);
                    add_unit(bk, 2 + 4 * l + 4 * k, 3 + 4 * l, -1);
                    add_unit(ck, 2 + 4 * l, -1 + 4 * l + 4 * k, 1);
                    add_unit(ck, 1 + 4 * l + 4 * k, 4 + 4 * l, -1);
                    add_unit(dk, 2 + 4 * l, 4 * l + 4 * k, 1);
                    add_unit(dk, 2 + 4 * l + 4 * k, 4 + 4 * l, -1);
                }
            }
            const std::string ks = std::to_string(k);
            emit("a" + ks, ak);
            emit("b" + ks, bk);
            emit("c" + ks, ck);
            emit("d" + ks, dk);
        }
    } else if (res == 1) {
        Matrix h1 = fresh(), h2 = fresh(), e = fresh(), f = fresh(), gg = fresh();
        for (long l = 0; 4 * l <= N - 1; ++l) {
            add_unit(h1, 1 + 4 * l, 1 + 4 * l, 1);
            add_unit(h1, 3 + 4 * l, 3 + 4 * l, -1);
            add_unit(h2, 2 + 4 * l, 2 + 4 * l, 1);
            add_unit(h2, 4 + 4 * l, 4 + 4 * l, -1);
            add_unit(e, 1 + 4 * l, 2 + 4 * l, 1);
            add_unit(e, 4 + 4 * l, 3 + 4 * l, -1);
            add_unit(f, 1 + 4 * l, 3 + 4 * l, 1);
            add_unit(f, 5 + 4 * l, 3 + 4 * l, -1);
            add_unit(gg, 2 + 4 * l, 3 + 4 * l, 1);
            add_unit(gg, 5 + 4 * l, 4 + 4 * l, -1);
        }
        emit("h1", h1);
        emit("h2", h2);
        emit("e", e);
        emit("f", f);
        emit("g", gg);
        for (long k = 1; 4 * k <= N - 5; ++k) {
            Matrix ak = fresh(), bk = fresh(), ck = fresh(), dk = fresh();
            for (long l = 0; 4 * l <= N - 1 - 4 * k; ++l) {
                add_unit(ak, 1 + 4 * l, 2 + 4 * l + 4 * k, 1);
                add_unit(ak, 4 + 4 * l + 4 * k, 3 + 4 * l, -1);
                add_unit(bk, 1 + 4 * l, 3 + 4 * l + 4 * k, 1);
                add_unit(bk, 5 + 4 * l + 4 * k, 3 + 4 * l, -1);
                add_unit(ck, 2 + 4 * l, 2 + 4 * l + 4 * k, 1);
                add_unit(ck, 4 + 4 * l + 4 * k, 4 + 4 * l, -1);
                add_unit(dk, 2 + 4 * l, 3 + 4 * l + 4 * k, 1);
                add_unit(dk, 5 + 4 * l + 4 * k, 4 + 4 * l, -1);
            }
            const std::string ks = std::to_string(k);
            emit("a" + ks, ak);
            emit("b" + ks, bk);
            emit("c" + ks, ck);
            emit("d" + ks, dk);
        }
    } else { // res == 3
        Matrix h1 = fresh(), h2 = fresh(), e = fresh(), f = fresh();
        for (long l = 0; 4 * l <= N - 3; ++l) {
            add_unit(h1, 1 + 4 * l, 1 + 4 * l, 1);
            add_unit(h1, 3 + 4 * l, 3 + 4 * l, -1);
            add_unit(h2, 2 + 4 * l, 2 + 4 * l, 1);
            add_unit(h2, 4 + 4 * l, 4 + 4 * l, -1);
            add_unit(e, 2 + 4 * l, 1 + 4 * l, 1);
            add_unit(e, 3 + 4 * l, 4 + 4 * l, -1);
            add_unit(f, 2 + 4 * l, 3 + 4 * l, 1);
            add_unit(f, 5 + 4 * l, 4 + 4 * l, -1);
        }
        emit("h1", h1);
        emit("h2", h2);
        emit("e", e);
        emit("f", f);
        for (long k = 1; 4 * k <= N - 3; ++k) {
            Matrix ak = fresh(), bk = fresh(), ck = fresh(), dk = fresh();
            for (long l = 0; 4 * l <= N - 3 - 4 * k; ++l) {
                add_unit(ak, 1 + 4 * l, 4 * l + 4 * k, 1);
                add_unit(ak, 2 + 4 * l + 4 * k, 3 + 4 * l, -1);
                add_unit(bk, 1 + 4 * l, 1 + 4 * l + 4 * k, 1);
                add_unit(bk, 3 + 4 * l + 4 * k, 3 + 4 * l, -1);
                add_unit(ck, 2 + 4 * l, 4 * l + 4 * k, 1);
                add_unit(ck, 2 + 4 * l + 4 * k, 4 + 4 * l, -1);
                add_unit(dk, 2 + 4 * l, 1 + 4 * l + 4 * k, 1);
                add_unit(dk, 3 + 4 * l + 4 * k, 4 + 4 * l, -1);
            }
            const std::string ks = std::to_string(k);
            emit("a" + ks, ak);
            emit("b" + ks, bk);
            emit("c" + ks, ck);
            emit("d" + ks, dk);
        }
    }
    return g;
}

// ---- brackets, series, radical -------------------------------------------

BracketTable bracket_table(const GeneratorSet& gens) {
    BracketTable t;
    t.labels = gens.labels;
    t.mats = gens.mats;
    const std::size_t G = gens.mats.size();
    const FieldTag tag = gens.tag;

    std::vector<std::vector<std::vector<Scalar>>> coords(
        G, std::vector<std::vector<Scalar>>(G));
    t.closed = true;
    for (std::size_t i = 0; i < G; ++i)
        for (std::size_t j = 0; j < G; ++j) {
            Matrix c = gens.mats[i] * gens.mats[j] - gens.mats[j] * gens.mats[i];
            std::vector<Scalar> v;
            if (!span_coordinates(c, gens.mats, v)) {
                t.closed = false;
                v.assign(G, Scalar::zero(tag));
            }
            coords[i][j] = v;
        }

    t.antisymmetric = true;
    for (std::size_t i = 0; i < G && t.antisymmetric; ++i)
        for (std::size_t j = 0; j < G && t.antisymmetric; ++j)
            for (std::size_t k = 0; k < G; ++k)
                if (coords[i][j][k] != -coords[j][i][k]) {
                    t.antisymmetric = false;
                    break;
                }

    t.jacobi = t.closed;
    if (t.closed) {
        auto bracket_of = [&](const std::vector<Scalar>& v, std::size_t k) {
            std::vector<Scalar> out(G, Scalar::zero(tag));
            for (std::size_t m2 = 0; m2 < G; ++m2)
                if (!v[m2].is_zero())
                    for (std::size_t q = 0; q < G; ++q)
                        out[q] = out[q] + v[m2] * coords[m2][k][q];
            return out;
        };
        for (std::size_t i = 0; i < G && t.jacobi; ++i)
            for (std::size_t j = 0; j < G && t.jacobi; ++j)
                for (std::size_t k = 0; k < G && t.jacobi; ++k) {
                    std::vector<Scalar> s1 = bracket_of(coords[i][j], k);
                    std::vector<Scalar> s2 = bracket_of(coords[j][k], i);
                    std::vector<Scalar> s3 = bracket_of(coords[k][i], j);
                    for (std::size_t q = 0; q < G; ++q)
                        if (!(s1[q] + s2[q] + s3[q]).is_zero()) {
                            t.jacobi = false;
                            break;
                        }
                }
    }

    t.entries.assign(G, std::vector<std::vector<BracketTerm>>(G));
    for (std::size_t i = 0; i < G; ++i)
        for (std::size_t j = 0; j < G; ++j)
            for (std::size_t k = 0; k < G; ++k)
                if (!coords[i][j][k].is_zero())
                    t.entries[i][j].push_back({coords[i][j][k], k});
    return t;
}

namespace {

// Reduce a spanning list to an independent basis (as matrices).
std::vector<Matrix> span_basis(const std::vector<Matrix>& mats) {
    std::vector<Matrix> out;
    for (const Matrix& m : mats) {
        if (m.is_zero()) continue;
        if (out.empty() || !in_span(m, out)) out.push_back(m);
    }
    return out;
}

} // namespace

std::vector<Matrix> bracket_span(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    std::vector<Matrix> prods;
    for (const Matrix& x : a)
        for (const Matrix& y : b) prods.push_back(x * y - y * x);
    return span_basis(prods);
}

std::vector<std::size_t> derived_series_dims(const std::vector<Matrix>& g) {
    std::vector<std::size_t> dims;
    std::vector<Matrix> cur = span_basis(g);
    dims.push_back(cur.size());
    while (!cur.empty()) {
        std::vector<Matrix> next = bracket_span(cur, cur);
        dims.push_back(next.size());
        if (next.size() == cur.size()) break;
        cur = std::move(next);
    }
    return dims;
}

std::vector<std::size_t> lower_central_series_dims(const std::vector<Matrix>& g) {
    std::vector<std::size_t> dims;
    std::vector<Matrix> base = span_basis(g);
    std::vector<Matrix> cur = base;
    dims.push_back(cur.size());
    while (!cur.empty()) {
        std::vector<Matrix> next = bracket_span(base, cur);
        dims.push_back(next.size());
        if (next.size() == cur.size()) break;
        cur = std::move(next);
    }
    return dims;
}

bool is_solvable(const std::vector<Matrix>& g) {
    return derived_series_dims(g).back() == 0;
}

bool is_nilpotent(const std::vector<Matrix>& g) {
    return lower_central_series_dims(g).back() == 0;
}

RadicalReport radical_decomposition(std::size_t n, const FieldTag& tag) {
    GeneratorSet gens = generators_solAn2(n, tag);
    RadicalReport rep;
    rep.n = n;
    rep.residue = static_cast<int>(n % 4);
    rep.algebra_dim = span_dim(gens.mats);

    auto is_graded = [](const std::string& l) {
        return l.size() >= 2 && (l[0] == 'a' || l[0] == 'b' || l[0] == 'c' || l[0] == 'd') &&
               std::isdigit(static_cast<unsigned char>(l[1]));
    };

    std::vector<Matrix> nil;
    if (rep.residue == 0 || rep.residue == 2) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (is_graded(gens.labels[i])) nil.push_back(gens.mats[i]);
        std::vector<Matrix> radical = nil;
        radical.push_back(gens.mats[gens.index_of("h1")] + gens.mats[gens.index_of("h2")]);

        rep.radical_dim = span_dim(radical);
        rep.quotient_dim = rep.algebra_dim - rep.radical_dim;
        rep.radical_is_ideal = true;
        for (const Matrix& x : gens.mats)
            for (const Matrix& r : radical)
                if (!in_span(x * r - r * x, radical)) rep.radical_is_ideal = false;
        rep.radical_solvable = is_solvable(radical);
        rep.nil_part_nilpotent = is_nilpotent(nil);
        rep.algebra_solvable = is_solvable(gens.mats);

        const Matrix hq = gens.mats[gens.index_of("h1")] - gens.mats[gens.index_of("h2")];
        const Matrix& e = gens.mats[gens.index_of("e")];
        const Matrix& f = gens.mats[gens.index_of("f")];
        auto br = [](const Matrix& x, const Matrix& y) { return x * y - y * x; };
        const Scalar two = Scalar::integer(2, tag);
        rep.quotient_is_sl2 = rep.quotient_dim == 3 &&
                              in_span(br(hq, e) - e.scaled(two), radical) &&
                              in_span(br(hq, f) + f.scaled(two), radical) &&
                              in_span(br(e, f) - hq, radical);
        rep.all_claims_hold = rep.radical_is_ideal && rep.radical_solvable &&
                              rep.nil_part_nilpotent && rep.quotient_is_sl2 &&
                              !rep.algebra_solvable;
    } else {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (is_graded(gens.labels[i]) || gens.labels[i] == "e" || gens.labels[i] == "f" ||
                gens.labels[i] == "g")
                nil.push_back(gens.mats[i]);
        rep.radical_dim = rep.algebra_dim; // the whole algebra is solvable
        rep.quotient_dim = rep.algebra_dim - span_dim(nil);
        rep.radical_is_ideal = true;
        bool nil_ideal = true;
        for (const Matrix& x : gens.mats)
            for (const Matrix& r : nil)
                if (!in_span(x * r - r * x, nil)) nil_ideal = false;
        rep.radical_solvable = rep.algebra_solvable = is_solvable(gens.mats);
        rep.nil_part_nilpotent = is_nilpotent(nil);
        const Matrix& h1 = gens.mats[gens.index_of("h1")];
        const Matrix& h2 = gens.mats[gens.index_of("h2")];
        rep.quotient_abelian = in_span(h1 * h2 - h2 * h1, nil);
        rep.all_claims_hold = nil_ideal && rep.algebra_solvable && rep.nil_part_nilpotent &&
                              rep.quotient_dim == 2 && rep.quotient_abelian;
    }
    return rep;
}

bool phi_morphism_check(std::size_t m, const FieldTag& tag, std::string* diagnostics,
                        bool repaired_f_image) {
    require(m >= 1, "phi_morphism_check needs m >= 1");
    const std::size_t n_src = 5 + 4 * m, n_dst = 3 + 4 * m;
    GeneratorSet src = generators_solAn2(n_src, tag);
    GeneratorSet dst = generators_solAn2(n_dst, tag);

    const Matrix zero_dst(n_dst, n_dst, tag);
    auto image = [&](const std::string& label) -> Matrix {
        if (label == "h1") return dst.mats[dst.index_of("h2")];
        if (label == "h2") return dst.mats[dst.index_of("h1")];
        if (label == "e") return dst.mats[dst.index_of("e")];
        if (label == "g") return -dst.mats[dst.index_of("f")];
        if (label == "f")
            return repaired_f_image ? -dst.mats[dst.index_of("c1")] : zero_dst;
        // graded generators: a<->d, b<->c with the same index
        char c = label[0];
        std::string idx = label.substr(1);
        char mapped = (c == 'a') ? 'd' : (c == 'b') ? 'c' : (c == 'c') ? 'b' : 'a';
        return dst.mats[dst.index_of(std::string(1, mapped) + idx)];
    };

    std::vector<Matrix> phi;
    for (const std::string& l : src.labels) phi.push_back(image(l));

    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
            Matrix lhs = phi[i] * phi[j] - phi[j] * phi[i];
            Matrix br = src.mats[i] * src.mats[j] - src.mats[j] * src.mats[i];
            std::vector<Scalar> v;
            if (!span_coordinates(br, src.mats, v)) {
                if (diagnostics)
                    *diagnostics = "source bracket [" + src.labels[i] + "," + src.labels[j] +
                                   "] not in the generator span";
                return false;
            }
            Matrix rhs(n_dst, n_dst, tag);
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero()) rhs = rhs + phi[k].scaled(v[k]);
            if (lhs != rhs) {
                if (diagnostics)
                    *diagnostics = "phi fails on [" + src.labels[i] + "," + src.labels[j] + "]";
                return false;
            }
        }
    return true;
}

} // namespace congmon
