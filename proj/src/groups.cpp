#include "congmon/groups.hpp"

#include <random>

#include "congmon/canonical.hpp"
#include "congmon/error.hpp"
#include "congmon/lie.hpp"

namespace congmon {

namespace {

// Block index arithmetic: block (r, c) (1-based) occupies the 2x2 scalar
// square with 0-based corner (2r-2, 2c-2).
void put_block(Matrix& m, std::size_t r, std::size_t c, const Matrix& b) {
    m.set_block(2 * r - 2, 2 * c - 2, b);
}

Matrix get_block(const Matrix& m, std::size_t r, std::size_t c) {
    return m.block(2 * r - 2, 2 * c - 2, 2, 2);
}

Matrix zero2(const FieldTag& tag) { return Matrix(2, 2, tag); }

Matrix pad_block_a(const FieldTag& tag) {
    Matrix a = zero2(tag);
    a.at(1, 1) = Scalar::one(tag);
    return a;
}

Matrix pad_block_b(const Scalar& lambda) {
    Matrix b = zero2(lambda.tag());
    b.at(0, 1) = lambda;
    return b;
}

// Number of 2x2 blocks per side, counting the pad block for odd n.
std::size_t block_count(GroupFamily f, std::size_t n) {
    switch (f) {
        case GroupFamily::an: return 0;
        case GroupFamily::an2_mod0:
        case GroupFamily::an2_mod2: return n / 2;
        case GroupFamily::an2_mod1:
        case GroupFamily::an2_mod3: return (n + 1) / 2;
    }
    throw precondition_error("unknown family");
}

void check_family_n(GroupFamily f, std::size_t n) {
    require(n >= family_min_n(f), "size too small for this family");
    switch (f) {
        case GroupFamily::an: break;
        case GroupFamily::an2_mod0: require(n % 4 == 0, "family needs n = 0 mod 4"); break;
        case GroupFamily::an2_mod1: require(n % 4 == 1, "family needs n = 1 mod 4"); break;
        case GroupFamily::an2_mod2: require(n % 4 == 2, "family needs n = 2 mod 4"); break;
        case GroupFamily::an2_mod3: require(n % 4 == 3, "family needs n = 3 mod 4"); break;
    }
}

void verify_member(const Matrix& x, const GroupParams& p, const char* what) {
    Matrix form = family_form(p.family, p.n, p.tag);
    verify(congruent_transform(x, form) == form,
           std::string(what) + " does not preserve the target form");
}

// Look up x_l with out-of-range indices treated as zero.
Matrix xb_at(const std::vector<Matrix>& xb, std::size_t l, const FieldTag& tag) {
    if (l == 0 || l > xb.size()) return zero2(tag);
    return xb[l - 1];
}

} // namespace

std::string family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::an: return "an";
        case GroupFamily::an2_mod0: return "an2-mod0";
        case GroupFamily::an2_mod1: return "an2-mod1";
        case GroupFamily::an2_mod2: return "an2-mod2";
        case GroupFamily::an2_mod3: return "an2-mod3";
    }
    throw precondition_error("unknown family");
}

GroupFamily family_from_name(const std::string& s) {
    if (s == "an") return GroupFamily::an;
    if (s == "an2-mod0") return GroupFamily::an2_mod0;
    if (s == "an2-mod1") return GroupFamily::an2_mod1;
    if (s == "an2-mod2") return GroupFamily::an2_mod2;
    if (s == "an2-mod3") return GroupFamily::an2_mod3;
    throw parse_error("unknown group family: " + s);
}

Matrix family_form(GroupFamily f, std::size_t n, const FieldTag& tag) {
    return f == GroupFamily::an ? make_An(n, tag) : make_An_power(n, 2, tag);
}

std::size_t family_min_n(GroupFamily f) {
    switch (f) {
        case GroupFamily::an: return 2;
        case GroupFamily::an2_mod0: return 4;
        case GroupFamily::an2_mod1: return 5;
        case GroupFamily::an2_mod2: return 6;
        case GroupFamily::an2_mod3: return 7;
    }
    throw precondition_error("unknown family");
}

std::size_t nil_param_count(GroupFamily f, std::size_t n) {
    check_family_n(f, n);
    std::size_t m = block_count(f, n);
    switch (f) {
        case GroupFamily::an: return (n - 1) / 2; // == (n-2)/2 for even n
        case GroupFamily::an2_mod0: return (m - 2) / 2;
        case GroupFamily::an2_mod2: return (m - 1) / 2;
        case GroupFamily::an2_mod1:
        case GroupFamily::an2_mod3: return m - 2;
    }
    throw precondition_error("unknown family");
}

GroupParams identity_params(GroupFamily f, std::size_t n, const FieldTag& tag) {
    check_family_n(f, n);
    GroupParams p;
    p.family = f;
    p.n = n;
    p.tag = tag;
    p.x0 = Scalar::one(tag);
    p.g = Matrix::identity(2, tag);
    p.alpha = Scalar::one(tag);
    p.beta = Scalar::one(tag);
    p.gamma = Scalar::zero(tag);
    p.lambda = Scalar::zero(tag);
    std::size_t k = nil_param_count(f, n);
    if (f == GroupFamily::an) {
        p.xs.assign(k, Scalar::zero(tag));
    } else {
        p.xb.assign(k, zero2(tag));
    }
    return p;
}

GroupParams random_params(GroupFamily f, std::size_t n, std::uint64_t seed,
                          const FieldTag& tag, const Scalar* lambda) {
    GroupParams p = identity_params(f, n, tag);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    auto draw = [&]() {
        long num = static_cast<long>(rng() % 5) - 2;
        long den = (tag.kind == FieldKind::FP) ? 1 : 1 + static_cast<long>(rng() % 2);
        return Scalar::integer(num, tag) / Scalar::integer(den, tag);
    };
    auto draw_nonzero = [&]() {
        Scalar s = draw();
        while (s.is_zero()) s = draw();
        return s;
    };
    switch (f) {
        case GroupFamily::an:
            p.x0 = draw_nonzero();
            for (auto& x : p.xs) x = draw();
            break;
        case GroupFamily::an2_mod0:
        case GroupFamily::an2_mod2:
            do {
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) p.g.at(i, j) = draw();
            } while (!is_invertible(p.g));
            for (auto& x : p.xb)
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j) x.at(i, j) = draw();
            break;
        case GroupFamily::an2_mod1:
        case GroupFamily::an2_mod3: {
            p.alpha = draw_nonzero();
            p.beta = draw_nonzero();
            p.gamma = draw();
            if (f == GroupFamily::an2_mod3)
                p.lambda = lambda ? *lambda : Scalar::integer(static_cast<long>(seed % 3), tag);
            for (std::size_t l = 1; l <= p.xb.size(); ++l) {
                Matrix& x = p.xb[l - 1];
                // mod1: odd-index blocks are free in the bottom row and
                // even-index ones in the top row; mod3 swaps the parities
                // and ties the first block's bottom row to lambda.
                bool bottom = (l % 2 == 1) == (f == GroupFamily::an2_mod1);
                std::size_t row = bottom ? 1 : 0;
                x.at(row, 0) = draw();
                x.at(row, 1) = draw();
                if (f == GroupFamily::an2_mod3 && l == 1) x.at(1, 0) = -p.lambda;
            }
            break;
        }
    }
    return p;
}

std::vector<Scalar> star_sequence_scalar(const std::vector<Scalar>& xs, const FieldTag& tag) {
    std::size_t k = xs.size();
    std::vector<Scalar> star(k, Scalar::zero(tag));
    for (std::size_t m = 2; m <= k; ++m) {
        Scalar s = Scalar::zero(tag);
        for (std::size_t a = 1; a < m; ++a) s = s + xs[a - 1] * (xs[m - a - 1] - star[m - a - 1]);
        star[m - 1] = s;
    }
    return star;
}

std::vector<Matrix> star_sequence(GroupFamily f, const std::vector<Matrix>& xb,
                                  const Scalar& lambda, const FieldTag& tag) {
    std::size_t k = xb.size();
    std::vector<Matrix> star(k, zero2(tag));
    auto x = [&](std::size_t l) { return xb_at(xb, l, tag); };
    for (std::size_t m = 1; m <= k; ++m) {
        Matrix s = zero2(tag);
        switch (f) {
            case GroupFamily::an:
                throw precondition_error("scalar family has no block star sequence");
            case GroupFamily::an2_mod2:
                break; // N = I + X there; no star correction appears.
            case GroupFamily::an2_mod0:
                for (std::size_t r = 1; r < m; ++r)
                    s = s + x(m - r).transpose() * (x(r).transpose() - star[r - 1]);
                break;
            case GroupFamily::an2_mod1:
                for (std::size_t l = 2; l < m; l += 2)
                    s = s + x(l).transpose() * (x(m - l).transpose() - star[m - l - 1]);
                break;
            case GroupFamily::an2_mod3:
                if (m % 2 == 0) {
                    for (std::size_t r = 2; r + 2 <= m; r += 2)
                        s = s + x(r).transpose() * (x(m - r).transpose() - star[m - r - 1]);
                } else {
                    s = x(m + 1).transpose() * pad_block_b(lambda).transpose();
                    for (std::size_t kk = 1; kk < m; kk += 2)
                        s = s + x(m - kk).transpose() * (x(kk).transpose() - star[kk - 1]);
                }
                break;
        }
        star[m - 1] = s;
    }
    return star;
}

Matrix build_D(const GroupParams& p) {
    check_family_n(p.family, p.n);
    Matrix d;
    switch (p.family) {
        case GroupFamily::an: {
            d = Matrix(p.n, p.n, p.tag);
            require(!p.x0.is_zero(), "diagonal parameter must be invertible");
            Scalar inv = p.x0.inverse();
            for (std::size_t i = 0; i < p.n; ++i) d.at(i, i) = (i % 2 == 0) ? p.x0 : inv;
            break;
        }
        case GroupFamily::an2_mod0:
        case GroupFamily::an2_mod2: {
            std::size_t m = block_count(p.family, p.n);
            Matrix git = inverse(p.g).transpose();
            d = Matrix(p.n, p.n, p.tag);
            for (std::size_t r = 1; r <= m; ++r) put_block(d, r, r, (r % 2 == 1) ? p.g : git);
            break;
        }
        case GroupFamily::an2_mod1:
        case GroupFamily::an2_mod3: {
            std::size_t m = block_count(p.family, p.n);
            require(!p.alpha.is_zero() && !p.beta.is_zero(),
                    "diagonal parameters must be invertible");
            Matrix g0 = zero2(p.tag);
            g0.at(1, 1) = p.beta;
            Matrix g1 = zero2(p.tag);
            g1.at(0, 0) = p.alpha;
            g1.at(0, 1) = p.gamma;
            g1.at(1, 1) = p.beta.inverse();
            Matrix g1it = inverse(g1).transpose();
            Matrix padded(p.n + 1, p.n + 1, p.tag);
            put_block(padded, 1, 1, g0);
            for (std::size_t r = 2; r <= m; ++r) put_block(padded, r, r, (r % 2 == 0) ? g1 : g1it);
            d = strip_padding(padded);
            break;
        }
    }
    verify_member(d, p, "diagonal factor");
    return d;
}

Matrix build_N(const GroupParams& p) {
    check_family_n(p.family, p.n);
    Matrix nmat;
    switch (p.family) {
        case GroupFamily::an: {
            require(p.xs.size() == nil_param_count(p.family, p.n),
                    "wrong unipotent parameter count");
            nmat = Matrix::identity(p.n, p.tag);
            if (p.n % 2 == 1) {
                // Entries live at (odd row, even column) in 1-based terms.
                for (std::size_t i = 1; i <= p.n; i += 2)
                    for (std::size_t j = 2; j <= p.n; j += 2) {
                        if (i < j) nmat.at(i - 1, j - 1) = p.xs[(j - i + 1) / 2 - 1];
                        else nmat.at(i - 1, j - 1) = -p.xs[(i - j + 1) / 2 - 1];
                    }
            } else {
                std::vector<Scalar> star = star_sequence_scalar(p.xs, p.tag);
                for (std::size_t i = 1; i <= p.n; i += 2)
                    for (std::size_t j = i + 2; j <= p.n; j += 2)
                        nmat.at(i - 1, j - 1) = p.xs[(j - i) / 2 - 1];
                for (std::size_t i = 2; i <= p.n; i += 2)
                    for (std::size_t j = 2; j < i; j += 2) {
                        std::size_t l = (i - j) / 2;
                        nmat.at(i - 1, j - 1) = -p.xs[l - 1] + star[l - 1];
                    }
            }
            break;
        }
        case GroupFamily::an2_mod0: {
            require(p.xb.size() == nil_param_count(p.family, p.n),
                    "wrong unipotent parameter count");
            std::size_t m = block_count(p.family, p.n);
            std::vector<Matrix> star = star_sequence(p.family, p.xb, p.lambda, p.tag);
            nmat = Matrix::identity(p.n, p.tag);
            for (std::size_t c = 1; c <= m; c += 2)
                for (std::size_t l = 1; 2 * l < c; ++l)
                    put_block(nmat, c - 2 * l, c, p.xb[l - 1]);
            for (std::size_t c = 2; c <= m; c += 2)
                for (std::size_t l = 1; c + 2 * l <= m; ++l)
                    put_block(nmat, c + 2 * l, c, -p.xb[l - 1].transpose() + star[l - 1]);
            break;
        }
        case GroupFamily::an2_mod2: {
            require(p.xb.size() == nil_param_count(p.family, p.n),
                    "wrong unipotent parameter count");
            std::size_t m = block_count(p.family, p.n);
            nmat = Matrix::identity(p.n, p.tag);
            for (std::size_t r = 1; r <= m; r += 2)
                for (std::size_t c = 2; c <= m; c += 2) {
                    if (c > r) put_block(nmat, r, c, p.xb[(c - r + 1) / 2 - 1]);
                    else put_block(nmat, r, c, -p.xb[(r - c + 1) / 2 - 1].transpose());
                }
            break;
        }
        case GroupFamily::an2_mod1:
        case GroupFamily::an2_mod3: {
            require(p.xb.size() == nil_param_count(p.family, p.n),
                    "wrong unipotent parameter count");
            bool mod3 = p.family == GroupFamily::an2_mod3;
            if (mod3 && !p.xb.empty())
                require(p.xb[0].at(1, 0) == -p.lambda && p.xb[0].at(1, 1).is_zero(),
                        "first block's bottom row must be (-lambda, 0)");
            std::size_t m = block_count(p.family, p.n);
            std::vector<Matrix> star = star_sequence(p.family, p.xb, p.lambda, p.tag);
            Matrix padded(p.n + 1, p.n + 1, p.tag);
            put_block(padded, 1, 1, pad_block_a(p.tag));
            if (mod3) put_block(padded, 2, 1, pad_block_b(p.lambda));
            for (std::size_t r = 2; r <= m; ++r) put_block(padded, r, r, Matrix::identity(2, p.tag));
            for (std::size_t c = 2; c <= m; ++c) {
                if ((c % 2 == 0) == mod3) continue; // mod1 fills even columns, mod3 odd ones
                for (std::size_t r = 1; r < c; ++r) put_block(padded, r, c, p.xb[c - r - 1]);
            }
            for (std::size_t r = 3; r <= m; ++r) {
                if ((r % 2 == 1) == mod3) continue; // mod1 mirrors into odd rows, mod3 even ones
                for (std::size_t c = 2; c < r; ++c)
                    put_block(padded, r, c, -p.xb[r - c - 1].transpose() + star[r - c - 1]);
            }
            nmat = strip_padding(padded);
            break;
        }
    }
    verify_member(nmat, p, "unipotent factor");
    return nmat;
}

Matrix build(const GroupParams& p) {
    Matrix x = build_D(p) * build_N(p);
    verify_member(x, p, "group element");
    return x;
}

Matrix invert_nil(const GroupParams& p) {
    Matrix nmat = build_N(p);
    Matrix inv;
    switch (p.family) {
        case GroupFamily::an: {
            GroupParams q = p;
            if (p.n % 2 == 1) {
                for (auto& x : q.xs) x = -x;
            } else {
                std::vector<Scalar> star = star_sequence_scalar(p.xs, p.tag);
                for (std::size_t l = 0; l < q.xs.size(); ++l) q.xs[l] = -p.xs[l] + star[l];
            }
            q.x0 = Scalar::one(p.tag);
            inv = build_N(q);
            break;
        }
        case GroupFamily::an2_mod0:
        case GroupFamily::an2_mod1: {
            GroupParams q = p;
            std::vector<Matrix> star = star_sequence(p.family, p.xb, p.lambda, p.tag);
            for (std::size_t l = 0; l < q.xb.size(); ++l)
                q.xb[l] = -p.xb[l] + star[l].transpose();
            inv = build_N(q);
            break;
        }
        case GroupFamily::an2_mod2:
            // The off-diagonal part X satisfies X*X = 0 exactly, so the
            // inverse of I + X is I - X.
            inv = Matrix::identity(p.n, p.tag).scaled(Scalar::integer(2, p.tag)) - nmat;
            break;
        case GroupFamily::an2_mod3: {
            // Displayed closed form: negate the lambda block, replace each
            // upper entry x_l by -x_l + x_l^{*t} and each mirrored lower
            // entry by the plain transpose x_l^t.
            std::size_t m = block_count(p.family, p.n);
            std::vector<Matrix> star = star_sequence(p.family, p.xb, p.lambda, p.tag);
            Matrix padded(p.n + 1, p.n + 1, p.tag);
            put_block(padded, 1, 1, pad_block_a(p.tag));
            put_block(padded, 2, 1, pad_block_b(-p.lambda));
            for (std::size_t r = 2; r <= m; ++r) put_block(padded, r, r, Matrix::identity(2, p.tag));
            for (std::size_t c = 3; c <= m; c += 2)
                for (std::size_t r = 1; r < c; ++r)
                    put_block(padded, r, c,
                              -p.xb[c - r - 1] + star[c - r - 1].transpose());
            for (std::size_t r = 4; r <= m; r += 2)
                for (std::size_t c = 2; c < r; ++c)
                    put_block(padded, r, c, p.xb[r - c - 1].transpose());
            inv = strip_padding(padded);
            break;
        }
    }
    Matrix id = Matrix::identity(p.n, p.tag);
    verify(inv * nmat == id && nmat * inv == id,
           "closed-form unipotent inverse failed to invert");
    return inv;
}

GroupParams semidirect_factor(const Matrix& x, GroupFamily f, std::size_t n) {
    check_family_n(f, n);
    require(x.rows() == n && x.cols() == n, "element has the wrong size");
    const FieldTag tag = x.tag();
    GroupParams p = identity_params(f, n, tag);
    std::size_t m = block_count(f, n);
    switch (f) {
        case GroupFamily::an: {
            p.x0 = x.at(0, 0);
            require(!p.x0.is_zero(), "leading diagonal entry must be invertible");
            break;
        }
        case GroupFamily::an2_mod0:
        case GroupFamily::an2_mod2: {
            p.g = x.block(0, 0, 2, 2);
            require(is_invertible(p.g), "leading diagonal block must be invertible");
            break;
        }
        case GroupFamily::an2_mod1:
        case GroupFamily::an2_mod3: {
            p.beta = x.at(0, 0);
            Matrix g1 = x.block(1, 1, 2, 2);
            p.alpha = g1.at(0, 0);
            p.gamma = g1.at(0, 1);
            require(!p.beta.is_zero() && !p.alpha.is_zero(),
                    "leading diagonal entries must be invertible");
            break;
        }
    }
    Matrix nmat = inverse(build_D(p)) * x;
    switch (f) {
        case GroupFamily::an:
            for (std::size_t l = 1; l <= p.xs.size(); ++l)
                p.xs[l - 1] = (n % 2 == 1) ? nmat.at(0, 2 * l - 1) : nmat.at(0, 2 * l);
            break;
        case GroupFamily::an2_mod0:
            for (std::size_t l = 1; l <= p.xb.size(); ++l)
                p.xb[l - 1] = get_block(nmat, 1, 1 + 2 * l);
            break;
        case GroupFamily::an2_mod2:
            for (std::size_t l = 1; l <= p.xb.size(); ++l)
                p.xb[l - 1] = get_block(nmat, 1, 2 * l);
            break;
        case GroupFamily::an2_mod1:
            for (std::size_t l = 1; l <= p.xb.size(); ++l) {
                Matrix b = zero2(tag);
                if (l % 2 == 1) {
                    b.at(1, 0) = nmat.at(0, 2 * l - 1);
                    b.at(1, 1) = nmat.at(0, 2 * l);
                } else {
                    b.at(0, 0) = nmat.at(1, 2 * l + 1);
                    b.at(0, 1) = nmat.at(1, 2 * l + 2);
                }
                p.xb[l - 1] = b;
            }
            break;
        case GroupFamily::an2_mod3: {
            p.lambda = nmat.at(1, 0);
            for (std::size_t l = 1; l <= p.xb.size(); ++l) {
                Matrix b = zero2(tag);
                if (l % 2 == 1) {
                    // Odd-index blocks are free in the top row; the first
                    // one additionally carries (-lambda, 0) below.
                    b.at(0, 0) = nmat.at(1, 2 * l + 1);
                    b.at(0, 1) = nmat.at(1, 2 * l + 2);
                    if (l == 1) b.at(1, 0) = -p.lambda;
                } else {
                    b.at(1, 0) = nmat.at(0, 2 * l - 1);
                    b.at(1, 1) = nmat.at(0, 2 * l);
                }
                p.xb[l - 1] = b;
            }
            break;
        }
    }
    (void)m;
    Matrix rebuilt = build(p);
    verify(rebuilt == x, "factored parameters do not reproduce the element");
    return p;
}

GroupParams compose(const GroupParams& a, const GroupParams& b) {
    require(a.family == b.family && a.n == b.n && a.tag == b.tag,
            "can only compose elements of the same family");
    return semidirect_factor(build(a) * build(b), a.family, a.n);
}

GroupParams invert(const GroupParams& p) {
    return semidirect_factor(inverse(build(p)), p.family, p.n);
}

bool conjugation_check(const GroupParams& diag_part, const GroupParams& nil_part) {
    require(diag_part.family == nil_part.family && diag_part.n == nil_part.n &&
                diag_part.tag == nil_part.tag,
            "mismatched family");
    Matrix d = build_D(diag_part);
    Matrix c = d * build_N(nil_part) * inverse(d);
    GroupParams q;
    try {
        q = semidirect_factor(c, diag_part.family, diag_part.n);
    } catch (const verification_error&) {
        return false;
    }
    switch (diag_part.family) {
        case GroupFamily::an: return q.x0.is_one();
        case GroupFamily::an2_mod0:
        case GroupFamily::an2_mod2: return q.g == Matrix::identity(2, q.tag);
        case GroupFamily::an2_mod1:
        case GroupFamily::an2_mod3:
            return q.alpha.is_one() && q.beta.is_one() && q.gamma.is_zero();
    }
    return false;
}

} // namespace congmon
