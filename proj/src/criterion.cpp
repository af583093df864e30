#include "congmon/criterion.hpp"

namespace congmon {

namespace {

// N = [[1, i],[i, -1]] — the rank-one nilpotent congruence normal form of
// v v^t when v^t v = 0.
Matrix matrix_N(const FieldTag& tag) {
    Matrix n(2, 2, tag);
    const Scalar one = Scalar::one(tag), i = Scalar::i(tag);
    n.at(0, 0) = one;
    n.at(0, 1) = i;
    n.at(1, 0) = i;
    n.at(1, 1) = -one;
    return n;
}

// X = [[0, 0],[-i, 1]]: AN = 0 implies AX = A and NB = 0 implies X^t B = B.
Matrix matrix_X_lemma(const FieldTag& tag) {
    Matrix x(2, 2, tag);
    x.at(1, 0) = -Scalar::i(tag);
    x.at(1, 1) = Scalar::one(tag);
    return x;
}

} // namespace

Matrix build_singular_solution(const Matrix& a) {
    require(a.is_square(), "build_singular_solution needs a square matrix");
    const FieldTag tag = a.tag();
    const std::size_t n = a.rows();
    const auto inter = kernel_intersection(a, a.transpose());
    require(!inter.empty(), "ker(A) ∩ ker(A^t) is trivial; no singular solution exists");
    const Matrix v = inter.front();

    // v^t v is the only eigenvalue of v v^t that matters: (vv^t)^2 = (v^t v) vv^t.
    const Scalar s = (v.transpose() * v).at(0, 0);
    Matrix x(0, 0, tag);
    if (!s.is_zero()) {
        x = Matrix::identity(n, tag) - (v * v.transpose()).scaled(s.inverse());
    } else {
        // v^t v = 0 with v != 0 forces at least two nonzero coordinates, and
        // v v^t is congruent to diag(N, 0). Build P with P(e_1 + i e_2) = v:
        // columns (v - i e_k0, e_k0, standard vectors except k0 and j0).
        require(tag.kind == FieldKind::QI || (tag.kind == FieldKind::FP && tag.p % 4 == 1),
                "nilpotent-vv^t witness needs a field containing i");
        std::size_t k0 = n, j0 = n;
        for (std::size_t r = 0; r < n; ++r) {
            if (!v.at(r, 0).is_zero()) {
                if (k0 == n)
                    k0 = r;
                else if (j0 == n)
                    j0 = r;
            }
        }
        verify(j0 < n, "isotropic kernel vector with fewer than two nonzero coordinates");
        const Scalar i = Scalar::i(tag);
        Matrix p(n, n, tag);
        for (std::size_t r = 0; r < n; ++r) p.at(r, 0) = v.at(r, 0);
        p.at(k0, 0) = p.at(k0, 0) - i;
        p.at(k0, 1) = Scalar::one(tag);
        std::size_t col = 2;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k0 || j == j0) continue;
            p.at(j, col++) = Scalar::one(tag);
        }
        verify(is_invertible(p), "basis rotation matrix is singular");
        const Matrix ap = congruent_transform(p, a);
        // Sanity: leading 2x2 block is a scalar multiple of N, and the
        // off-blocks are killed by N on the appropriate side.
        const Matrix nmat = matrix_N(tag);
        const Matrix a1 = ap.block(0, 0, 2, 2);
        verify(a1 == nmat.scaled(a1.at(0, 0)), "leading block is not a multiple of N");
        if (n > 2) {
            verify((nmat * ap.block(0, 2, 2, n - 2)).is_zero(), "N A_2 != 0");
            verify((ap.block(2, 0, n - 2, 2) * nmat).is_zero(), "A_3 N != 0");
        }
        // Y = diag(X, I) solves the transported equation (the lemma's row
        // and column identities only need N A_2 = 0 and A_3 N = 0, so this
        // covers the zero leading block as well).
        Matrix y = Matrix::identity(n, tag);
        y.set_block(0, 0, matrix_X_lemma(tag));
        verify(congruent_transform(y, ap) == ap, "transported witness fails X^t A X = A");
        x = p * y * inverse(p);
    }
    verify(congruent_transform(x, a) == a, "witness fails X^t A X = A");
    verify(determinant(x).is_zero(), "witness is unexpectedly invertible");
    return x;
}

GroupVerdict is_group_complex(const Matrix& a) {
    require(a.is_square(), "is_group_complex needs a square matrix");
    require(a.tag().kind == FieldKind::QI, "is_group_complex works over Q(i)");
    GroupVerdict v;
    v.method = "complex-criterion";
    v.kernel_intersection_dim = kernel_intersection(a, a.transpose()).size();
    v.is_group = v.kernel_intersection_dim == 0;
    if (!v.is_group) v.witness = build_singular_solution(a);
    return v;
}

GroupVerdict is_group_star(const Matrix& a) {
    require(a.is_square(), "is_group_star needs a square matrix");
    require(a.tag().kind == FieldKind::QI, "is_group_star works over Q(i)");
    GroupVerdict out;
    out.method = "star-criterion";
    const auto inter = kernel_intersection(a, a.conj_transpose());
    out.kernel_intersection_dim = inter.size();
    out.is_group = inter.empty();
    if (!out.is_group) {
        // v^* v is a positive rational, so X = (1/(v^* v)) v v^* - I is exact;
        // X^* A X = A and X is singular (X v = 0 ... in fact X fixes v-line).
        const Matrix v = inter.front();
        const Scalar t = (v.conj_transpose() * v).at(0, 0).inverse();
        const Matrix x = (v * v.conj_transpose()).scaled(t) - Matrix::identity(a.rows(), a.tag());
        verify(x.conj_transpose() * a * x == a, "star witness fails X^* A X = A");
        verify(determinant(x).is_zero(), "star witness is unexpectedly invertible");
        out.witness = x;
    }
    return out;
}

bool pencil_completely_singular(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "pencil shape mismatch");
    return !kernel_intersection(a, b).empty();
}

bool necessary_condition_anyfield(const Matrix& a) {
    require(a.is_square(), "necessary_condition_anyfield needs a square matrix");
    require(!a.tag().is_char_two(), "criterion undefined in characteristic 2");
    const auto basis = kernel_intersection(a, a.transpose());
    // v v^t nilpotent for rank one means v^t v = 0; on a subspace the
    // quadratic form vanishes iff its polarization does, i.e. the whole
    // Gram matrix v_i^t v_j is zero.
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!(basis[i].transpose() * basis[j]).at(0, 0).is_zero()) return false;
    return true;
}

namespace {

// A_nil must be a permuted nilpotent Jordan form with the transpose taken in
// the same basis: a strictly triangular 0/1 partial shift (at most one 1 per
// row and per column). This covers E_13 and every A_n^k.
bool is_jordan_nilpotent_pattern(const Matrix& m) {
    if (!m.is_square()) return false;
    const std::size_t n = m.rows();
    bool upper_ok = true, lower_ok = true;
    std::vector<int> row_ones(n, 0), col_ones(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& e = m.at(i, j);
            if (e.is_zero()) continue;
            if (!e.is_one()) return false;
            if (j <= i) upper_ok = false;
            if (j >= i) lower_ok = false;
            if (++row_ones[i] > 1 || ++col_ones[j] > 1) return false;
        }
    return upper_ok || lower_ok;
}

} // namespace

GroupVerdict is_group_jordan_chevalley(const Matrix& a_d, const Matrix& a_nil) {
    require(a_d.is_square() && a_d.rows() == a_nil.rows() && a_d.cols() == a_nil.cols(),
            "shape mismatch");
    for (std::size_t i = 0; i < a_d.rows(); ++i)
        for (std::size_t j = 0; j < a_d.cols(); ++j)
            require(i == j || a_d.at(i, j).is_zero(), "A_d must be diagonal");
    require(is_jordan_nilpotent_pattern(a_nil),
            "A_nil must be a (permuted) nilpotent Jordan canonical form");
    GroupVerdict v;
    v.method = "jordan-chevalley";
    // Triple intersection: stack all three matrices.
    const auto triple = kernel(vstack(vstack(a_d, a_nil), a_nil.transpose()));
    v.kernel_intersection_dim = triple.size();
    v.is_group = triple.empty();
    if (!v.is_group && a_d.tag().kind == FieldKind::QI) {
        const Matrix a = a_d + a_nil;
        if (!kernel_intersection(a, a.transpose()).empty()) v.witness = build_singular_solution(a);
    }
    return v;
}

bool is_group_direct_sum(const std::vector<CanonicalBlock>& blocks) {
    require(!blocks.empty(), "empty block list");
    bool group = true;
    for (const auto& b : blocks) {
        make_block(b); // validates the block parameters
        if (b.kind == BlockKind::A_odd && b.size == 1) group = false;
    }
    return group;
}

BruteForceReport brute_force_monoid(const Matrix& a) {
    require(a.is_square(), "brute_force_monoid needs a square matrix");
    require(a.tag().kind == FieldKind::FP, "brute_force_monoid enumerates over F_p");
    const std::size_t n = a.rows();
    const std::uint64_t p = a.tag().p;
    double total = 1;
    for (std::size_t k = 0; k < n * n; ++k) total *= static_cast<double>(p);
    require(total <= 1e7, "enumeration bound p^(n^2) <= 10^7 exceeded");

    BruteForceReport rep;
    const std::uint64_t count = static_cast<std::uint64_t>(total);
    Matrix x(n, n, a.tag());
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                x.at(i, j) = Scalar::residue(c % p, static_cast<std::uint32_t>(p));
                c /= p;
            }
        if (congruent_transform(x, a) == a) {
            ++rep.solution_count;
            if (!determinant(x).is_zero()) ++rep.invertible_count;
        }
    }
    rep.is_group = rep.solution_count == rep.invertible_count;
    return rep;
}

} // namespace congmon
