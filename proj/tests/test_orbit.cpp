#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "congmon/canonical.hpp"
#include "congmon/error.hpp"
#include "congmon/orbit.hpp"
#include "doctest.h"

using namespace congmon;

namespace {

const FieldTag Q = FieldTag::rationals();

Scalar rat(long num, long den = 1) { return Scalar::rational(mpq_class(num, den), Q); }

// Random 6x6 matrix supported exactly on the given rows, with at least one
// nonzero entry in each listed row.
Matrix supported_on_rows(const std::vector<std::size_t>& rows, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-4, 4);
    Matrix y(6, 6, Q);
    for (std::size_t r : rows) {
        bool nonzero = false;
        while (!nonzero)
            for (std::size_t c = 0; c < 6; ++c) {
                long v = dist(rng);
                y.at(r, c) = Scalar::integer(v, Q);
                nonzero = nonzero || v != 0;
            }
    }
    return y;
}

Matrix rand2(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-4, 4);
    Matrix m(2, 2, Q);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = Scalar::integer(dist(rng), Q);
    return m;
}

Matrix rand2_invertible(std::mt19937_64& rng) {
    Matrix m = rand2(rng);
    while (!is_invertible(m)) m = rand2(rng);
    return m;
}

} // namespace

TEST_CASE("three-parameter elements of the 6x6 group preserve the form") {
    Matrix a = make_An(6, Q);
    Matrix g = solA6_element(rat(3), rat(-2), rat(5, 2));
    CHECK(congruent_transform(g, a) == a);
    CHECK(solA6_element(rat(1), rat(0), rat(0)) == Matrix::identity(6, Q));
    CHECK_THROWS_AS(solA6_element(rat(0), rat(1), rat(1)), precondition_error);

    // group law in the parameters:
    // g(x0,x1,x2) g(y0,y1,y2) = g(x0 y0, x1 + y1, x2 + y2 + 2 x1 y1 ... ) --
    // just check closure by refactoring entries instead of guessing the law.
    Matrix h = solA6_element(rat(2), rat(1), rat(-1));
    Matrix prod = g * h;
    CHECK(congruent_transform(prod, a) == a);
    CHECK(prod.at(0, 0) == rat(6)); // first parameters multiply
}

TEST_CASE("x1- and x2-directions of the unipotent part") {
    // g(1, x1, x2) = I + x1 K + x2 M + x1^2 P with K, M, P fixed unit
    // combinations; checked against the constructor.
    Matrix k = Matrix::unit(6, 1, 3, Q) + Matrix::unit(6, 3, 5, Q)
             - Matrix::unit(6, 4, 2, Q) - Matrix::unit(6, 6, 4, Q);
    Matrix m = Matrix::unit(6, 1, 5, Q) - Matrix::unit(6, 6, 2, Q);
    Matrix p = Matrix::unit(6, 6, 2, Q);
    for (long x1 = -2; x1 <= 2; ++x1)
        for (long x2 = -2; x2 <= 2; ++x2) {
            Matrix want = Matrix::identity(6, Q) + k.scaled(rat(x1)) + m.scaled(rat(x2))
                        + p.scaled(rat(x1 * x1));
            CHECK(solA6_element(rat(1), rat(x1), rat(x2)) == want);
        }
}

TEST_CASE("zero target is stabilized by the whole group") {
    StabilizerReport rep = stabilizer_solA6(Matrix(6, 6, Q));
    CHECK(rep.cls == StabilizerClass::full_group);
    CHECK_FALSE(rep.x0_forced_one);
    CHECK(rep.x1_free);
    CHECK(rep.x2_free);
}

TEST_CASE("targets supported on rows 1 and 6 keep the unipotent subgroup") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Matrix y = supported_on_rows({0, 5}, 100 + seed);
        StabilizerReport rep = stabilizer_solA6(y);
        CHECK(rep.cls == StabilizerClass::n_subgroup);
        CHECK(rep.x0_forced_one);
        CHECK(rep.x1_free);
        CHECK(rep.x2_free);
        // any unipotent element fixes such a target
        CHECK(solA6_element(rat(1), rat(seed + 1), rat(-2)) * y == y);
        CHECK(solA6_element(rat(2), rat(0), rat(0)) * y != y);
    }
}

TEST_CASE("targets hitting rows 3 or 4 keep only the x2 one-parameter family") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Matrix y = supported_on_rows({seed % 2 == 0 ? 2u : 3u, 0}, 200 + seed);
        StabilizerReport rep = stabilizer_solA6(y);
        CHECK(rep.cls == StabilizerClass::x2_family);
        CHECK(rep.x0_forced_one);
        CHECK_FALSE(rep.x1_free);
        CHECK(rep.x2_free);
        CHECK(solA6_element(rat(1), rat(0), rat(seed + 1)) * y == y);
        CHECK(solA6_element(rat(1), rat(1), rat(0)) * y != y);
    }
}

TEST_CASE("targets hitting rows 2 or 5 have trivial stabilizer") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Matrix y = supported_on_rows({seed % 2 == 0 ? 1u : 4u}, 300 + seed);
        StabilizerReport rep = stabilizer_solA6(y);
        CHECK(rep.cls == StabilizerClass::trivial);
        CHECK(rep.x0_forced_one);
        CHECK_FALSE(rep.x1_free);
        CHECK_FALSE(rep.x2_free);
        CHECK(solA6_element(rat(1), rat(0), rat(1)) * y != y);
    }
}

TEST_CASE("singular subspace detection by determinant polarization") {
    Matrix e11 = Matrix::unit(2, 1, 1, Q);
    Matrix e21 = Matrix::unit(2, 2, 1, Q);
    Matrix e22 = Matrix::unit(2, 2, 2, Q);
    CHECK(singular_subspace_2x2({e11, e21}));      // common zero column
    CHECK(singular_subspace_2x2({e11, e11 + e21}));
    CHECK(singular_subspace_2x2({}));
    CHECK_FALSE(singular_subspace_2x2({Matrix::identity(2, Q)}));
    CHECK_FALSE(singular_subspace_2x2({e11, e22})); // sum is invertible
    CHECK_THROWS_AS(singular_subspace_2x2({Matrix(2, 2, FieldTag::prime_field(2))}),
                    precondition_error);

    // random sanity: a span drawn inside the zero-bottom-row shape stays
    // singular, and adjoining an invertible matrix breaks it.
    std::mt19937_64 rng(42);
    for (int t = 0; t < 20; ++t) {
        Matrix m1 = rand2(rng), m2 = rand2(rng);
        m1.at(1, 0) = m1.at(1, 1) = rat(0);
        m2.at(1, 0) = m2.at(1, 1) = rat(0);
        CHECK(singular_subspace_2x2({m1, m2}));
        CHECK_FALSE(singular_subspace_2x2({m1, m2, rand2_invertible(rng)}));
    }
}

TEST_CASE("two-block elements of the 8x8 squared-form group") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        Matrix s = rand2_invertible(rng);
        Matrix x = rand2(rng);
        Matrix g = solA8sq_element(s, x);
        Matrix a = make_An_power(8, 2, Q);
        CHECK(congruent_transform(g, a) == a);
        Matrix sinv_t = inverse(s).transpose();
        CHECK(g.block(0, 0, 2, 2) == s);
        CHECK(g.block(0, 4, 2, 2) == x);
        CHECK(g.block(2, 2, 2, 2) == sinv_t);
        CHECK(g.block(4, 4, 2, 2) == s);
        CHECK(g.block(6, 6, 2, 2) == sinv_t);
        // corner block below the diagonal: -s^{-t} x^t s^{-t}
        CHECK(g.block(6, 2, 2, 2) == (sinv_t * x.transpose() * sinv_t).scaled(rat(-1)));
    }
}

TEST_CASE("invertible block in a tested block row certifies trivial stabilizer") {
    std::mt19937_64 rng(11);
    // second block row (I2, f, g, h), third (i, j, k, l), first and last zero
    Matrix y(8, 8, Q);
    y.set_block(2, 0, Matrix::identity(2, Q));
    for (std::size_t c = 1; c < 4; ++c) y.set_block(2, 2 * c, rand2(rng));
    for (std::size_t c = 0; c < 4; ++c) y.set_block(4, 2 * c, rand2(rng));
    TrivialStabilizerReport rep = stabilizer_trivial_solA8sq(y);
    CHECK(rep.certified_trivial);

    TrivialStabilizerReport zero = stabilizer_trivial_solA8sq(Matrix(8, 8, Q));
    CHECK_FALSE(zero.certified_trivial);
    CHECK(zero.shapes.find("zero-top-row") != std::string::npos);

    // singular-but-nonzero rows stay inconclusive with their shapes listed
    Matrix ybad(8, 8, Q);
    Matrix top = rand2(rng);
    top.at(1, 0) = top.at(1, 1) = rat(0);
    ybad.set_block(2, 0, top);
    TrivialStabilizerReport inc = stabilizer_trivial_solA8sq(ybad);
    CHECK_FALSE(inc.certified_trivial);
    CHECK(inc.shapes.find("zero-bottom-row") != std::string::npos);
}

TEST_CASE("acting on the identity-block example reproduces the displayed orbit") {
    std::mt19937_64 rng(13);
    Matrix f = rand2(rng), g2 = rand2(rng), h = rand2(rng);
    Matrix i = rand2(rng), j = rand2(rng), k = rand2(rng), l = rand2(rng);
    Matrix y(8, 8, Q);
    y.set_block(2, 0, Matrix::identity(2, Q));
    y.set_block(2, 2, f);
    y.set_block(2, 4, g2);
    y.set_block(2, 6, h);
    y.set_block(4, 0, i);
    y.set_block(4, 2, j);
    y.set_block(4, 4, k);
    y.set_block(4, 6, l);
    CHECK(stabilizer_trivial_solA8sq(y).certified_trivial);

    Matrix s = rand2_invertible(rng);
    Matrix x = rand2(rng);
    Matrix alpha = solA8sq_element(s, x);
    Matrix w = alpha * y;
    Matrix sinv_t = inverse(s).transpose();
    Matrix ycorner = alpha.block(6, 2, 2, 2); // = -s^{-t} x^t s^{-t}
    // row 1: x times the third block row of the target
    CHECK(w.block(0, 0, 2, 2) == x * i);
    CHECK(w.block(0, 2, 2, 2) == x * j);
    CHECK(w.block(0, 4, 2, 2) == x * k);
    CHECK(w.block(0, 6, 2, 2) == x * l);
    // row 2: s^{-t} times the second block row
    CHECK(w.block(2, 0, 2, 2) == sinv_t);
    CHECK(w.block(2, 2, 2, 2) == sinv_t * f);
    CHECK(w.block(2, 4, 2, 2) == sinv_t * g2);
    CHECK(w.block(2, 6, 2, 2) == sinv_t * h);
    // row 3: s times the third block row
    CHECK(w.block(4, 0, 2, 2) == s * i);
    CHECK(w.block(4, 2, 2, 2) == s * j);
    CHECK(w.block(4, 4, 2, 2) == s * k);
    CHECK(w.block(4, 6, 2, 2) == s * l);
    // row 4: corner block times the second block row
    CHECK(w.block(6, 0, 2, 2) == ycorner);
    CHECK(w.block(6, 2, 2, 2) == ycorner * f);
    CHECK(w.block(6, 4, 2, 2) == ycorner * g2);
    CHECK(w.block(6, 6, 2, 2) == ycorner * h);
}

TEST_CASE("sampled orbit points keep the congruence invariant") {
    std::mt19937_64 rng(21);
    struct { GroupFamily f; std::size_t n; } cases[] = {
        {GroupFamily::an, 6}, {GroupFamily::an, 7},
        {GroupFamily::an2_mod0, 8}, {GroupFamily::an2_mod1, 9},
        {GroupFamily::an2_mod2, 6}, {GroupFamily::an2_mod3, 7},
    };
    std::uniform_int_distribution<long> dist(-3, 3);
    for (auto [f, n] : cases) {
        Matrix y(n, n, Q);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) y.at(r, c) = Scalar::integer(dist(rng), Q);
        Matrix a = family_form(f, n, Q);
        Matrix invariant = congruent_transform(y, a);
        auto pts = orbit_sample(f, n, 555, y, 6);
        CHECK(pts.size() == 6);
        for (const auto& w : pts) CHECK(congruent_transform(w, a) == invariant);
        // distinct seeds produce at least two distinct points
        bool moved = false;
        for (const auto& w : pts) moved = moved || w != y;
        CHECK(moved);
    }
}
