#include <doctest.h>

#include <random>

#include "lieforms/arith.hpp"
#include "oracles.hpp"

using namespace lieforms;

namespace {

SymMatrix sym2(int a, int b, int c) {
    RationalMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = b;
    m(1, 1) = c;
    return SymMatrix(std::move(m));
}

SymMatrix random_symmetric(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return SymMatrix::from_lower(dim, [&](Eigen::Index, Eigen::Index) {
        return Rational(num(rng), den(rng));
    });
}

// -(L^T L) - I is always negative definite.
SymMatrix random_negative_definite(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> entry(-3, 3);
    Eigen::MatrixXi l(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) l(i, j) = entry(rng);
    const Eigen::MatrixXi g = l.transpose() * l + Eigen::MatrixXi::Identity(dim, dim);
    return SymMatrix::from_lower(dim, [&](Eigen::Index i, Eigen::Index j) {
        return Rational(-g(static_cast<int>(i), static_cast<int>(j)));
    });
}

} // namespace

TEST_CASE("rational arithmetic is exact") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    for (int t = 0; t < 500; ++t) {
        const int a = num(rng), c = num(rng);
        const int b = den(rng), d = den(rng);
        const Rational lhs = (Rational(a, b) + Rational(c, d)) * Rational(b) * Rational(d);
        CHECK(lhs == Rational(a) * d + Rational(c) * b);
    }
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(14, 7)) == "2");
    CHECK(denominator(Rational(2, 4)) == 2); // canonical form is maintained
}

TEST_CASE("gaussian rational conjugation") {
    CHECK(conj(GaussianRational(0)) == GaussianRational(0));
    CHECK(conj(GaussianRational(3, 2)) == GaussianRational(Rational(3), Rational(-2)));
    const GaussianRational z(Rational(1, 2), Rational(-5));
    CHECK(conj(conj(z)) == z);
}

TEST_CASE("gaussian rational field operations") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 5);
    auto rand_q = [&] { return Rational(num(rng), den(rng)); };
    auto rand_z = [&] { return GaussianRational(rand_q(), rand_q()); };

    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));

    for (int t = 0; t < 200; ++t) {
        const GaussianRational a = rand_z(), b = rand_z(), c = rand_z();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(conj(a * b) == conj(a) * conj(b));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST_CASE("negative definiteness: pinned examples") {
    RationalMatrix one(1, 1);
    one(0, 0) = -8;
    CHECK(is_negative_definite(SymMatrix(one)));

    CHECK(is_negative_definite(sym2(-2, 1, -2)));

    const SymMatrix bad = sym2(-1, 2, -1);
    CHECK_FALSE(is_negative_definite(bad));
    // second leading minor is 1 - 4 = -3 < 0; both oracles agree
    CHECK_FALSE(oracles::sylvester_negative_definite(bad));
    CHECK(oracles::grid_finds_nonnegative(bad));
}

TEST_CASE("negative definiteness: zero pivot means not definite") {
    CHECK_FALSE(is_negative_definite(sym2(0, 0, -1)));
    CHECK_FALSE(is_negative_definite(sym2(-1, 1, 1))); // singular after one step
    RationalMatrix z(2, 2);
    z.setConstant(Rational(0));
    CHECK_FALSE(is_negative_definite(SymMatrix(z)));
}

TEST_CASE("negative definiteness agrees with Sylvester minors") {
    std::mt19937 rng(2024);
    for (int dim = 1; dim <= 5; ++dim) {
        for (int t = 0; t < 60; ++t) {
            const SymMatrix m = random_symmetric(rng, dim);
            CHECK(is_negative_definite(m) == oracles::sylvester_negative_definite(m));
        }
        for (int t = 0; t < 20; ++t) {
            const SymMatrix m = random_negative_definite(rng, dim);
            CHECK(is_negative_definite(m));
            CHECK(oracles::sylvester_negative_definite(m));
        }
    }
}

TEST_CASE("negative definiteness vs brute-force grid (dim <= 4)") {
    std::mt19937 rng(99);
    for (int dim = 1; dim <= 4; ++dim)
        for (int t = 0; t < 25; ++t) {
            const SymMatrix m = random_symmetric(rng, dim);
            if (is_negative_definite(m)) {
                CHECK_FALSE(oracles::grid_finds_nonnegative(m));
            } else {
                // the grid witness, when it exists, must agree with the verdict
                if (oracles::grid_finds_nonnegative(m)) CHECK_FALSE(is_negative_definite(m));
            }
        }
}

TEST_CASE("SymMatrix rejects non-symmetric input") {
    RationalMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    CHECK_THROWS_AS(SymMatrix(std::move(m)), std::invalid_argument);
    RationalMatrix rect(2, 3);
    rect.setConstant(Rational(0));
    CHECK_THROWS_AS(SymMatrix(std::move(rect)), std::invalid_argument);
}
