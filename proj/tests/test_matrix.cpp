#include <gtest/gtest.h>

#include "qdet/matrix.hpp"
#include "qdet/random.hpp"
#include "support.hpp"

using namespace qdet;
using qdet::test::M;
using qdet::test::Q;
using qdet::test::V;

TEST(Matrix, Products) {
    const auto a = M({{"i", "j"}, {"k", "1"}});
    EXPECT_EQ(ExactMatrix::identity(2) * a, a);
    EXPECT_EQ(M({{"i"}}) * M({{"j"}}), M({{"k"}}));
    EXPECT_EQ(M({{"i", "0"}, {"0", "j"}}) * M({{"-i", "0"}, {"0", "-j"}}), ExactMatrix::identity(2));
    EXPECT_THROW(M({{"1", "2"}}) * M({{"1", "2"}}), DimensionError);
}

TEST(Matrix, ConjTranspose) {
    EXPECT_EQ(conj_transpose(M({{"i", "j"}, {"k", "1"}})), M({{"-i", "-k"}, {"-j", "1"}}));
    const auto s = M({{"1", "2"}, {"2", "5"}});
    EXPECT_EQ(conj_transpose(s), s);
}

TEST(Matrix, IsHermitian) {
    EXPECT_TRUE(is_hermitian(M({{"2", "i"}, {"-i", "3"}})));
    EXPECT_FALSE(is_hermitian(M({{"0", "i"}, {"i", "0"}})));
    EXPECT_FALSE(is_hermitian(M({{"i"}})));
    const auto a = M({{"i", "j"}, {"k", "1"}});
    EXPECT_TRUE(is_hermitian(conj_transpose(a) * a));
    EXPECT_THROW(is_hermitian(M({{"1", "2"}})), DimensionError);
}

TEST(Matrix, Replacement) {
    EXPECT_EQ(replace_column(ExactMatrix::identity(2), 1, V({"i", "j"})), M({{"i", "0"}, {"j", "1"}}));
    const auto a = M({{"i", "j"}, {"k", "1"}});
    EXPECT_EQ(replace_row(a, 1, a.row(1)), a);
    const auto id = ExactMatrix::identity(2);
    EXPECT_EQ(replace_column(id, 2, id.col(1)), M({{"1", "1"}, {"0", "0"}}));
    EXPECT_THROW(replace_column(id, 3, id.col(1)), IndexError);
    EXPECT_THROW(replace_row(id, 1, V({"1"})), DimensionError);
}

TEST(Matrix, DeleteRowCol) {
    const auto a = M({{"1", "2"}, {"3", "4"}});
    EXPECT_EQ(delete_row_col(a, 1, 1), M({{"4"}}));
    EXPECT_EQ(delete_row_col(a, 1, 2), M({{"3"}}));
    EXPECT_EQ(delete_row_col(ExactMatrix::identity(3), 2, 2), ExactMatrix::identity(2));
    EXPECT_THROW(delete_row_col(M({{"1"}}), 1, 1), DimensionError);
}

TEST(Matrix, CorrespondingHermitian) {
    const auto col = M({{"i"}, {"j"}});
    EXPECT_EQ(corresponding_hermitian(col, Side::left), M({{"2"}}));
    EXPECT_EQ(corresponding_hermitian(col, Side::right).rows(), 2);
    EXPECT_EQ(corresponding_hermitian(ExactMatrix::identity(2), Side::left), ExactMatrix::identity(2));
    EXPECT_EQ(corresponding_hermitian(ExactMatrix::identity(2), Side::right), ExactMatrix::identity(2));
}

TEST(Matrix, Construction) {
    EXPECT_THROW(ExactMatrix(0, 2), DimensionError);
    EXPECT_THROW(ExactMatrix::from_rows({{Q("1")}, {Q("1"), Q("2")}}), DimensionError);
    EXPECT_THROW(M({{"1"}})(2, 1), IndexError);
}

TEST(MatrixProperty, StructuralIdentities) {
    RandomSource rnd(21);
    for (int t = 0; t < 60; ++t) {
        const int m = rnd.integer(1, 4), n = rnd.integer(1, 4), p = rnd.integer(1, 4);
        const auto a = rnd.matrix(m, n), b = rnd.matrix(n, p);
        EXPECT_EQ(conj_transpose(conj_transpose(a)), a);
        EXPECT_EQ(conj_transpose(a * b), conj_transpose(b) * conj_transpose(a));
        EXPECT_TRUE(is_hermitian(corresponding_hermitian(a, Side::left)));
        EXPECT_TRUE(is_hermitian(corresponding_hermitian(a, Side::right)));
        const auto before = a;
        (void)replace_row(a, 1, rnd.vector(n));
        (void)replace_column(a, 1, rnd.vector(m));
        if (m > 1 && n > 1) (void)delete_row_col(a, 1, 1);
        EXPECT_EQ(a, before);
    }
}
