#include <gtest/gtest.h>

#include "qdet/det.hpp"
#include "qdet/oracle.hpp"
#include "qdet/random.hpp"
#include "support.hpp"

using namespace qdet;
using qdet::test::M;
using qdet::test::V;

TEST(ComplexEmbed, UnitBlocks) {
    const auto ei = complex_embed(M({{"i"}}));
    EXPECT_EQ(ei(1, 1), GaussianRational(0, 1));
    EXPECT_EQ(ei(2, 2), GaussianRational(0, -1));
    EXPECT_TRUE(ei(1, 2).is_zero());
    EXPECT_EQ(complex_det(ei), GaussianRational(1));

    const auto ej = complex_embed(M({{"j"}}));
    EXPECT_EQ(ej(1, 2), GaussianRational(1));
    EXPECT_EQ(ej(2, 1), GaussianRational(-1));
    EXPECT_EQ(complex_det(ej), GaussianRational(1));

    const auto id = complex_embed(ExactMatrix::identity(2));
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) EXPECT_EQ(id(r, c), GaussianRational(r == c ? 1 : 0));
}

TEST(ComplexDet, Examples) {
    CMatrix i4(4, 4);
    for (int k = 1; k <= 4; ++k) i4(k, k) = GaussianRational(1);
    EXPECT_EQ(complex_det(i4), GaussianRational(1));
    EXPECT_TRUE(complex_det(complex_embed(M({{"1", "i"}, {"j", "-k"}}))).is_zero());
    // Needs a row swap: [[0, 1], [1, 0]] has det -1.
    CMatrix swap(2, 2);
    swap(1, 2) = GaussianRational(1);
    swap(2, 1) = GaussianRational(1);
    EXPECT_EQ(complex_det(swap), GaussianRational(-1));
    EXPECT_EQ(to_string(GaussianRational(Rational(1, 2), -1)), "1/2-i");
}

TEST(ComplexEmbed, Homomorphism) {
    RandomSource rnd(17);
    for (int t = 0; t < 20; ++t) {
        const int n = rnd.integer(1, 3);
        const auto a = rnd.matrix(n, n), b = rnd.matrix(n, n);
        EXPECT_EQ(complex_embed(a * b), complex_embed(a) * complex_embed(b));
        EXPECT_EQ(complex_embed(conj_transpose(a)), conj_transpose(complex_embed(a)));
    }
}

TEST(ComplexDet, EqualsDdet) {
    RandomSource rnd(19);
    for (int t = 0; t < 50; ++t) {
        const int n = rnd.integer(1, 4);
        const auto a = rnd.matrix(n, n);
        const auto z = complex_det(complex_embed(a));
        EXPECT_EQ(z.im, 0);
        EXPECT_GE(z.re, 0);
        EXPECT_EQ(z.re, ddet(a));
    }
}

TEST(Gauss, Examples) {
    const auto y = V({"1", "j"});
    EXPECT_EQ(gauss_solve_right(ExactMatrix::identity(2), y), y);
    EXPECT_EQ(gauss_solve_right(M({{"i", "0"}, {"0", "j"}}), V({"k", "1"})), V({"j", "-j"}));
    EXPECT_EQ(gauss_solve_left(M({{"i", "0"}, {"0", "j"}}), V({"k", "1"})), V({"-j", "-j"}));
    EXPECT_EQ(gauss_solve_right(M({{"2", "i"}, {"-i", "3"}}), V({"1", "0"})), V({"3/5", "1/5i"}));
    // Zero leading entry forces a row exchange.
    EXPECT_EQ(gauss_inverse(M({{"0", "i"}, {"j", "0"}})), M({{"0", "-j"}, {"-i", "0"}}));
    EXPECT_THROW(gauss_inverse(M({{"1", "i"}, {"j", "-k"}})), SingularError);
    EXPECT_THROW(gauss_solve_right(M({{"0", "0"}, {"0", "1"}}), y), SingularError);
}
