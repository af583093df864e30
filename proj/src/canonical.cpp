#include "congmon/canonical.hpp"

#include <algorithm>

namespace congmon {

Matrix make_An(std::size_t n, const FieldTag& tag) {
    require(n >= 1, "A_n needs n >= 1");
    Matrix m(n, n, tag);
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = Scalar::one(tag);
    return m;
}

Matrix make_An_power(std::size_t n, std::size_t k, const FieldTag& tag) {
    require(k >= 1 && k < n, "A_n^k needs 1 <= k < n");
    Matrix m(n, n, tag);
    for (std::size_t i = 0; i + k < n; ++i) m.at(i, i + k) = Scalar::one(tag);
    return m;
}

Matrix make_J(const Scalar& c, std::size_t k) {
    // 1 on the anti-diagonal (i+j = k+1, 1-based), c on the sub-anti-diagonal.
    Matrix m(k, k, c.tag());
    for (std::size_t i = 1; i <= k; ++i) {
        m.at(i - 1, k - i) = Scalar::one(c.tag());
        if (k + 2 - i >= 1 && k + 2 - i <= k) m.at(i - 1, k + 1 - i) = c;
    }
    return m;
}

Matrix make_I(const Scalar& c, std::size_t k) {
    Matrix m(k, k, c.tag());
    for (std::size_t i = 1; i <= k; ++i) {
        m.at(i - 1, k - i) = c;
        if (k + 2 - i >= 1 && k + 2 - i <= k) m.at(i - 1, k + 1 - i) = Scalar::one(c.tag());
    }
    return m;
}

namespace {

Matrix make_A_calligraphic(std::size_t n, const FieldTag& tag) {
    // A_{2k+1} = [[0, U],[L, 0]] with U = I_k stacked on a zero row and
    // L = [0 | I_k] (superdiagonal shift).
    require(n % 2 == 1, "calligraphic A block needs odd size");
    const std::size_t k = (n - 1) / 2;
    Matrix m(n, n, tag);
    for (std::size_t i = 1; i <= k; ++i) {
        m.at(i - 1, k + i) = Scalar::one(tag);     // U block, rows 1..k+1, cols k+2..n
        m.at(k + i, i) = Scalar::one(tag);         // L block: (k+1+i, i+1) 1-based
    }
    return m;
}

Matrix make_C(std::size_t n, const FieldTag& tag) {
    // Anti-diagonal all 1; super-anti-diagonal (i+j = n+2): +1 in rows
    // 2..k+1, -1 in rows k+2..n.
    require(n % 2 == 1, "calligraphic C block needs odd size");
    const std::size_t k = (n - 1) / 2;
    Matrix m(n, n, tag);
    for (std::size_t i = 1; i <= n; ++i) {
        m.at(i - 1, n - i) = Scalar::one(tag);
        if (i >= 2) {
            Scalar v = (i <= k + 1) ? Scalar::one(tag) : -Scalar::one(tag);
            m.at(i - 1, n + 1 - i) = v;
        }
    }
    return m;
}

Matrix make_E(std::size_t n, const FieldTag& tag) {
    // Anti-diagonal: +1 in rows 1..k, -1 in rows k+1..n; super-anti-diagonal
    // all 1 (rows 2..n).
    require(n % 2 == 0, "calligraphic E block needs even size");
    const std::size_t k = n / 2;
    Matrix m(n, n, tag);
    for (std::size_t i = 1; i <= n; ++i) {
        m.at(i - 1, n - i) = (i <= k) ? Scalar::one(tag) : -Scalar::one(tag);
        if (i >= 2) m.at(i - 1, n + 1 - i) = Scalar::one(tag);
    }
    return m;
}

} // namespace

Matrix make_block(const CanonicalBlock& b, const FieldTag& tag) {
    const Scalar one = Scalar::one(tag);
    switch (b.kind) {
        case BlockKind::A_odd:
            require(b.size % 2 == 1, "A block size must be odd");
            if (b.size == 1) return Matrix(1, 1, tag);
            return make_A_calligraphic(b.size, tag);
        case BlockKind::B_even: {
            require(b.size % 2 == 0 && b.size >= 2, "B block size must be even");
            require(b.c.has_value(), "B block needs the parameter c");
            const Scalar& c = *b.c;
            require(c != one && c != -one, "B block requires c != +-1");
            const std::size_t k = b.size / 2;
            Matrix m(b.size, b.size, tag);
            m.set_block(0, k, make_J(c, k));
            m.set_block(k, 0, make_I(c, k));
            return m;
        }
        case BlockKind::C_odd:
            require(b.size % 2 == 1 && b.size >= 3, "C block size must be odd >= 3");
            return make_C(b.size, tag);
        case BlockKind::D_even: {
            require(b.size % 2 == 0 && (b.size / 2) % 2 == 0, "D block needs size 2k, k even");
            const std::size_t k = b.size / 2;
            Matrix m(b.size, b.size, tag);
            m.set_block(0, k, make_J(one, k));
            m.set_block(k, 0, make_J(-one, k));
            return m;
        }
        case BlockKind::E_even:
            require(b.size % 2 == 0 && b.size >= 2, "E block size must be even");
            return make_E(b.size, tag);
        case BlockKind::F_even: {
            require(b.size % 2 == 0 && (b.size / 2) % 2 == 1, "F block needs size 2k, k odd");
            const std::size_t k = b.size / 2;
            Matrix m(b.size, b.size, tag);
            m.set_block(0, k, make_I(one, k));
            m.set_block(k, 0, make_I(-one, k));
            return m;
        }
    }
    throw precondition_error("unknown block kind");
}

Matrix make_sigma(std::size_t n, const FieldTag& tag) {
    require(n >= 2, "sigma_n needs n >= 2");
    Matrix s(n, n, tag);
    if (n % 2 == 0) {
        // i = 2a+1 -> j = a+1;  i = 2a -> j = n-a+1 (1-based).
        for (std::size_t a = 0; 2 * a + 1 <= n; ++a) s.at(2 * a, a) = Scalar::one(tag);
        for (std::size_t a = 1; 2 * a <= n; ++a) s.at(2 * a - 1, n - a) = Scalar::one(tag);
    } else {
        // i = 2a -> j = a + floor(n/2) + 1;  i = 2a+1 -> j = a+1.
        for (std::size_t a = 1; 2 * a <= n; ++a) s.at(2 * a - 1, a + n / 2) = Scalar::one(tag);
        for (std::size_t a = 0; 2 * a + 1 <= n; ++a) s.at(2 * a, a) = Scalar::one(tag);
    }
    return s;
}

Matrix relabeled_path_adjacency(std::size_t n, const FieldTag& tag) {
    require(n >= 2, "relabeled path needs n >= 2");
    // Label sequence along the path, from the proposition's figures:
    // even n = 2k: 1, 2k, 2, 2k-1, ..., k, k+1
    // odd  n = 2k+1: 1, k+2, 2, k+3, ..., k, 2k+1, k+1
    std::vector<std::size_t> seq(n);
    const std::size_t k = n / 2;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        if (pos % 2 == 1)
            seq[pos - 1] = (pos + 1) / 2; // t+1 at position 2t+1
        else
            seq[pos - 1] = (n % 2 == 0) ? (n + 1 - pos / 2) : (k + 1 + pos / 2);
    }
    Matrix m(n, n, tag);
    for (std::size_t pos = 0; pos + 1 < n; ++pos)
        m.at(seq[pos] - 1, seq[pos + 1] - 1) = Scalar::one(tag);
    return m;
}

PowerDecomposition decompose_An_power(std::size_t n, std::size_t k, const FieldTag& tag) {
    require(k >= 1 && k < n, "decompose needs 1 <= k < n");
    PowerDecomposition out;
    // Vertices of the k-th power path split into residue classes mod k;
    // class r (1-based) is the directed path r -> r+k -> r+2k -> ...
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t r = 1; r <= k; ++r) {
        std::vector<std::size_t> comp;
        for (std::size_t v = r; v <= n; v += k) comp.push_back(v);
        comps.push_back(comp);
        out.component_sizes.push_back(comp.size());
    }
    // Q relabels each component to a consecutive index range, turning
    // A_n^k into A_{m_1} (+) A_{m_2} (+) ...; then sigma_m per block maps
    // A_m to its calligraphic form. P = Q * diag(sigma_m).
    Matrix q(n, n, tag);
    std::vector<Matrix> sigmas, targets;
    std::size_t offset = 0;
    for (const auto& comp : comps) {
        const std::size_t m = comp.size();
        for (std::size_t t = 0; t < m; ++t) q.at(comp[t] - 1, offset + t) = Scalar::one(tag);
        offset += m;
        if (m == 1) {
            sigmas.push_back(Matrix::identity(1, tag));
            targets.push_back(Matrix(1, 1, tag));
            out.blocks.push_back({BlockKind::A_odd, 1, std::nullopt});
        } else {
            sigmas.push_back(make_sigma(m, tag));
            if (m % 2 == 1) {
                targets.push_back(make_block({BlockKind::A_odd, m, std::nullopt}, tag));
                out.blocks.push_back({BlockKind::A_odd, m, std::nullopt});
            } else {
                targets.push_back(make_block({BlockKind::B_even, m, Scalar::zero(tag)}, tag));
                out.blocks.push_back({BlockKind::B_even, m, Scalar::zero(tag)});
            }
        }
    }
    out.permutation = q * direct_sum(sigmas);
    out.assembled = direct_sum(targets);
    verify(congruent_transform(out.permutation, make_An_power(n, k, tag)) == out.assembled,
           "power decomposition permutation fails the congruence");

    // The published component-count formulas; recorded
    // for comparison only — see the size mismatch at (n,k) = (8,2).
    const long n1 = static_cast<long>((n - 1) / k);
    const long alpha = static_cast<long>(n) - static_cast<long>(k) * n1;
    out.formula_n1 = n1;
    out.formula_alpha = alpha;
    out.formula_beta_num = static_cast<long>(n) - alpha * (n1 + 1);
    out.formula_beta_den = n1;
    // Match iff the claimed multiset {n1 with multiplicity alpha, n1-1 with
    // multiplicity beta} equals the oracle component sizes.
    const bool beta_integral = n1 != 0 && out.formula_beta_num % n1 == 0;
    const long beta = beta_integral ? out.formula_beta_num / n1 : -1;
    if (beta_integral && alpha >= 0 && beta >= 0) {
        std::vector<std::size_t> claimed, actual = out.component_sizes;
        for (long t = 0; t < alpha; ++t) claimed.push_back(static_cast<std::size_t>(n1));
        for (long t = 0; t < beta; ++t) claimed.push_back(static_cast<std::size_t>(n1 - 1));
        std::sort(claimed.begin(), claimed.end());
        std::sort(actual.begin(), actual.end());
        out.formulas_match = claimed == actual;
    }
    return out;
}

} // namespace congmon
