#include <gtest/gtest.h>

#include "qdet/inverse.hpp"
#include "qdet/oracle.hpp"
#include "qdet/random.hpp"
#include "qdet/solve.hpp"
#include "support.hpp"

using namespace qdet;
using qdet::test::M;
using qdet::test::V;

namespace {

std::vector<ExactQuaternion> apply_right(const ExactMatrix& a, const std::vector<ExactQuaternion>& x) {
    return (a * ExactMatrix::column_vector(x)).col(1);
}

std::vector<ExactQuaternion> apply_left(const std::vector<ExactQuaternion>& x, const ExactMatrix& a) {
    return (ExactMatrix::row_vector(x) * a).row(1);
}

}  // namespace

TEST(SolveRight, Examples) {
    const auto y = V({"1+i", "j", "-3k"});
    EXPECT_EQ(solve_right(ExactMatrix::identity(3), y).solution, y);
    EXPECT_EQ(solve_right(M({{"i", "0"}, {"0", "j"}}), V({"k", "1"})).solution, V({"j", "-j"}));

    const auto h = M({{"2", "i"}, {"-i", "3"}});
    const auto r = solve_right(h, V({"1", "0"}));
    EXPECT_EQ(r.solution, V({"3/5", "1/5i"}));
    EXPECT_EQ(r.ddet, Rational(25));
    EXPECT_EQ(r.side, Side::right);
    EXPECT_FALSE(r.hermitian_fast_path);
    EXPECT_EQ(r.solution, gauss_solve_right(h, V({"1", "0"})));
}

TEST(SolveLeft, Examples) {
    const auto y = V({"1+i", "j"});
    EXPECT_EQ(solve_left(ExactMatrix::identity(2), y).solution, y);
    EXPECT_EQ(solve_left(M({{"i", "0"}, {"0", "j"}}), V({"k", "1"})).solution, V({"-j", "-j"}));
}

TEST(SolveHermitian, FastPath) {
    const auto h = M({{"2", "i"}, {"-i", "3"}});
    const auto r = solve_right_hermitian(h, V({"1", "0"}));
    EXPECT_EQ(r.numerators, V({"3", "i"}));
    EXPECT_EQ(r.denominator, Rational(5));
    EXPECT_EQ(r.ddet, Rational(25));
    EXPECT_TRUE(r.hermitian_fast_path);
    EXPECT_EQ(r.solution, solve_right(h, V({"1", "0"})).solution);
    EXPECT_EQ(solve_left_hermitian(h, V({"1", "0"})).solution, solve_left(h, V({"1", "0"})).solution);
    EXPECT_EQ(solve_right_hermitian(ExactMatrix::identity(2), V({"i", "k"})).solution, V({"i", "k"}));
    EXPECT_THROW(solve_right_hermitian(M({{"i", "j"}, {"k", "1"}}), V({"1", "0"})), NotHermitianError);
}

TEST(SolveHermitian, RealSymmetricMatchesClassicalCramer) {
    // [[4, 1], [1, 3]] x = (1, 2): det 11, x = (1/11, 7/11).
    const auto r = solve_right_hermitian(M({{"4", "1"}, {"1", "3"}}), V({"1", "2"}));
    EXPECT_EQ(r.solution, V({"1/11", "7/11"}));
    EXPECT_EQ(r.denominator, Rational(11));
}

TEST(Solve, Rejections) {
    EXPECT_THROW(solve_right(M({{"1", "i"}, {"j", "-k"}}), V({"1", "0"})), SingularError);
    EXPECT_THROW(solve_left(M({{"1", "i"}, {"j", "-k"}}), V({"1", "0"})), SingularError);
    EXPECT_THROW(solve_right(M({{"1", "2"}}), V({"1"})), DimensionError);
    EXPECT_THROW(solve_right(ExactMatrix::identity(2), V({"1"})), DimensionError);
    EXPECT_THROW(solve_right_hermitian(M({{"1", "1"}, {"1", "1"}}), V({"1", "0"})), SingularError);
}

TEST(SolveProperty, ResidualOracleAndInverse) {
    RandomSource rnd(13);
    for (int t = 0; t < 15; ++t) {
        const int n = rnd.integer(1, 3);
        const auto a = rnd.matrix(n, n);
        const auto y = rnd.vector(n);
        if (ddet(a) == 0) continue;
        const auto inv = general_inverse(a);

        const auto xr = solve_right(a, y).solution;
        EXPECT_EQ(apply_right(a, xr), y);
        EXPECT_EQ(xr, gauss_solve_right(a, y));
        EXPECT_EQ(xr, apply_right(inv, y));

        const auto xl = solve_left(a, y).solution;
        EXPECT_EQ(apply_left(xl, a), y);
        EXPECT_EQ(xl, gauss_solve_left(a, y));
        EXPECT_EQ(xl, apply_left(y, inv));
    }
}
