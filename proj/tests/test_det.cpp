#include <gtest/gtest.h>

#include "qdet/det.hpp"
#include "qdet/random.hpp"
#include "support.hpp"

using namespace qdet;
using qdet::test::M;
using qdet::test::Q;

namespace {

const DetOptions kParanoid{kDefaultMaxEnum, true};

}  // namespace

TEST(Rdet, TwoByTwo) {
    const auto a = M({{"i", "j"}, {"k", "1"}});
    EXPECT_EQ(rdet(a, 1), Q("0"));
    EXPECT_EQ(rdet(a, 2), Q("2i"));
    const auto g = M({{"1+i", "2j"}, {"k-3", "1/2+i"}});
    EXPECT_EQ(rdet(g, 1), g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1));
    EXPECT_EQ(rdet(g, 2), g(2, 2) * g(1, 1) - g(2, 1) * g(1, 2));
}

TEST(Rdet, IdentityAndBaseCase) {
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i <= n; ++i) {
            EXPECT_EQ(rdet(ExactMatrix::identity(n), i), ExactQuaternion(1));
            EXPECT_EQ(cdet(ExactMatrix::identity(n), i), ExactQuaternion(1));
        }
    EXPECT_EQ(rdet(M({{"1+2j"}}), 1), Q("1+2j"));
    EXPECT_EQ(cdet(M({{"1+2j"}}), 1), Q("1+2j"));
}

TEST(Rdet, Errors) {
    EXPECT_THROW(rdet(M({{"1", "2"}}), 1), DimensionError);
    EXPECT_THROW(rdet(ExactMatrix::identity(2), 3), IndexError);
    EXPECT_THROW(cdet(ExactMatrix::identity(2), 0), IndexError);
    EXPECT_THROW(rdet(ExactMatrix::identity(9), 1), EnumerationLimitError);
    EXPECT_THROW(rdet(ExactMatrix::identity(4), 1, DetOptions{3, false}), EnumerationLimitError);
}

TEST(Cdet, TwoByTwo) {
    const auto g = M({{"1+i", "2j"}, {"k-3", "1/2+i"}});
    EXPECT_EQ(cdet(g, 1), g(2, 2) * g(1, 1) - g(1, 2) * g(2, 1));
    EXPECT_EQ(cdet(M({{"2", "1"}, {"-i", "0"}}), 2), Q("i"));
}

TEST(Cofactor, TwoByTwo) {
    const auto g = M({{"1+i", "2j"}, {"k-3", "1/2+i"}});
    EXPECT_EQ(right_cofactor(g, 1, 1), g(2, 2));
    EXPECT_EQ(right_cofactor(g, 1, 2), -g(2, 1));
    EXPECT_EQ(right_cofactor(M({{"7"}}), 1, 1), ExactQuaternion(1));
    EXPECT_EQ(left_cofactor(M({{"7"}}), 1, 1), ExactQuaternion(1));
}

TEST(Cofactor, MatchesDirect) {
    const auto a = M({{"i", "j"}, {"k", "1"}});
    for (int i = 1; i <= 2; ++i) {
        EXPECT_EQ(rdet_cofactor(a, i), rdet(a, i));
        EXPECT_EQ(cdet_cofactor(a, i), cdet(a, i));
    }
    EXPECT_EQ(rdet_cofactor(M({{"2-k"}}), 1), Q("2-k"));
}

TEST(Moore, Examples) {
    EXPECT_EQ(moore_det(M({{"2", "i"}, {"-i", "3"}})), Q("5"));
    EXPECT_EQ(moore_det(M({{"-7/3"}})), Q("-7/3"));
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(moore_det(ExactMatrix::identity(n)), ExactQuaternion(1));
    EXPECT_THROW(moore_det(M({{"0", "i"}, {"i", "0"}})), NotHermitianError);
    EXPECT_EQ(row_determinant(M({{"2", "i"}, {"-i", "3"}}), 1, DetMethod::moore).value, Q("5"));
    EXPECT_THROW(row_determinant(ExactMatrix::identity(2), 2, DetMethod::moore), IndexError);
}

TEST(HermitianDet, Examples) {
    EXPECT_EQ(hermitian_det(M({{"2", "i"}, {"-i", "3"}}), kParanoid), Rational(5));
    EXPECT_EQ(hermitian_det(M({{"2", "0", "0"}, {"0", "-1/2", "0"}, {"0", "0", "3"}}), kParanoid), Rational(-3));
    EXPECT_THROW(hermitian_det(M({{"i", "j"}, {"k", "1"}})), NotHermitianError);
}

TEST(HermitianDet, RepeatedRowsGiveZero) {
    // Hermitian with rows 1 and 2 equal: [[a, a, c], [a, a, c], [c*, c*, d]].
    const auto h = M({{"2", "2", "1+i-j"}, {"2", "2", "1+i-j"}, {"1-i+j", "1-i+j", "5"}});
    ASSERT_TRUE(is_hermitian(h));
    EXPECT_EQ(hermitian_det(h, kParanoid), Rational(0));
}

TEST(Ddet, Examples) {
    EXPECT_EQ(ddet(M({{"i"}})), Rational(1));
    EXPECT_EQ(ddet(M({{"1+i+j+k"}})), Rational(4));
    EXPECT_EQ(ddet(M({{"i", "0"}, {"0", "j"}})), Rational(1));
    EXPECT_EQ(ddet(M({{"1", "i"}, {"j", "-k"}})), Rational(0));
    EXPECT_EQ(ddet(M({{"2", "i"}, {"-i", "3"}})), Rational(25));
    EXPECT_THROW(ddet(M({{"1", "2"}})), DimensionError);
}

TEST(DoubleCofactors, Examples) {
    const auto id = double_cofactors(ExactMatrix::identity(2));
    EXPECT_EQ(id.left, ExactMatrix::identity(2));
    EXPECT_EQ(id.right, ExactMatrix::identity(2));

    const auto d = double_cofactors(M({{"i", "0"}, {"0", "j"}}));
    EXPECT_EQ(d.left(1, 1), Q("-i"));
    EXPECT_EQ(d.left, M({{"-i", "0"}, {"0", "-j"}}));
    EXPECT_EQ(d.right, M({{"-i", "0"}, {"0", "-j"}}));
}

TEST(DoubleCofactors, ExpansionReproducesDdet) {
    RandomSource rnd(3);
    const auto a = rnd.matrix(3, 3);
    const auto t = double_cofactors(a);
    const ExactQuaternion dd(ddet(a));
    for (int k = 1; k <= 3; ++k) {
        ExactQuaternion col, row;
        for (int m = 1; m <= 3; ++m) {
            col += t.left(m, k) * a(m, k);
            row += a(k, m) * t.right(k, m);
        }
        EXPECT_EQ(col, dd);
        EXPECT_EQ(row, dd);
    }
}

TEST(FloatBackend, AgreesWithExact) {
    RandomSource rnd(5);
    const auto a = rnd.matrix(4, 4);
    const auto f = convert<double>(a);
    for (int i = 1; i <= 4; ++i) {
        const auto e = convert<double>(rdet(a, i));
        const auto x = rdet(f, i);
        EXPECT_NEAR(x.w(), e.w(), 1e-9 * std::max(1.0, std::fabs(e.w())));
        EXPECT_NEAR(x.z(), e.z(), 1e-9 * std::max(1.0, std::fabs(e.z())));
    }
    const auto h = rnd.hermitian(4);
    EXPECT_NEAR(hermitian_det(convert<double>(h), kParanoid), hermitian_det(h).get_d(), 1e-9);
}

TEST(FloatBackend, SevenBySevenMatchesExact) {
    RandomSource rnd(6);
    const auto a = rnd.matrix(7, 7);
    const auto e = convert<double>(rdet(a, 3));
    const auto x = rdet(convert<double>(a), 3);
    const double scale = std::max({1.0, std::fabs(e.w()), std::fabs(e.x()), std::fabs(e.y()), std::fabs(e.z())});
    EXPECT_NEAR(x.w(), e.w(), 1e-9 * scale);
    EXPECT_NEAR(x.x(), e.x(), 1e-9 * scale);
    EXPECT_NEAR(x.y(), e.y(), 1e-9 * scale);
    EXPECT_NEAR(x.z(), e.z(), 1e-9 * scale);
}
