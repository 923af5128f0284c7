#include <gtest/gtest.h>

#include "qdet/quaternion.hpp"
#include "qdet/random.hpp"
#include "support.hpp"

using namespace qdet;
using qdet::test::Q;

TEST(Quaternion, HamiltonRelations) {
    const auto i = ExactQuaternion::unit_i(), j = ExactQuaternion::unit_j(), k = ExactQuaternion::unit_k();
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * i, -k);
    EXPECT_EQ(i * i, ExactQuaternion(-1));
    EXPECT_EQ(j * j, ExactQuaternion(-1));
    EXPECT_EQ(k * k, ExactQuaternion(-1));
    EXPECT_EQ(i * j * k, ExactQuaternion(-1));
}

TEST(Quaternion, Products) {
    EXPECT_EQ(Q("1+i") * Q("1+j"), Q("1+i+j+k"));
    const auto q = Q("1+2i+3j+4k");
    EXPECT_EQ(q * conj(q), ExactQuaternion(30));
}

TEST(Quaternion, ConjugationReversesOrder) {
    EXPECT_EQ(conj(Q("1+2i+3j+4k")), Q("1-2i-3j-4k"));
    EXPECT_EQ(conj(conj(Q("i+j"))), Q("i+j"));
    const auto i = Q("i"), j = Q("j");
    EXPECT_EQ(conj(i * j), Q("-k"));
    EXPECT_EQ(conj(j) * conj(i), Q("-k"));
    EXPECT_NE(conj(i) * conj(j), conj(i * j));
}

TEST(Quaternion, NormAndTrace) {
    EXPECT_EQ(norm(Q("i")), 0 + Rational(1));
    EXPECT_EQ(trace(Q("i")), Rational(0));
    EXPECT_EQ(norm(Q("1+i") * Q("j")), Rational(2));
    EXPECT_EQ(norm(Q("1+i")) * norm(Q("j")), Rational(2));
}

TEST(Quaternion, Inverse) {
    EXPECT_EQ(inverse(Q("i")), Q("-i"));
    EXPECT_EQ(inverse(Q("2")), Q("1/2"));
    EXPECT_EQ(inverse(Q("1+i")), Q("1/2-1/2i"));
    EXPECT_EQ(Q("1+i") * inverse(Q("1+i")), ExactQuaternion(1));
    EXPECT_THROW(inverse(ExactQuaternion()), ZeroDivisionError);
    EXPECT_THROW(Q("i").divided_by(Rational(0)), ZeroDivisionError);
}

TEST(QuaternionLiteral, Parses) {
    EXPECT_EQ(Q("i"), ExactQuaternion(0, 1, 0, 0));
    EXPECT_EQ(Q("1/2-3i+j-7/4k"), ExactQuaternion(Rational(1, 2), -3, 1, Rational(-7, 4)));
    EXPECT_EQ(Q("-k"), ExactQuaternion(0, 0, 0, -1));
    EXPECT_EQ(Q(" 0.25 + 2j "), ExactQuaternion(Rational(1, 4), 0, 2, 0));
    EXPECT_EQ(Q("k+i"), ExactQuaternion(0, 1, 0, 1));
    EXPECT_EQ(Q("0"), ExactQuaternion());
    EXPECT_EQ(Q("010/012"), ExactQuaternion(Rational(5, 6)));
}

TEST(QuaternionLiteral, Rejects) {
    EXPECT_THROW(Q("2+2"), ParseError);
    EXPECT_THROW(Q("i+2i"), ParseError);
    EXPECT_THROW(Q(""), ParseError);
    EXPECT_THROW(Q("1/0"), ParseError);
    EXPECT_THROW(Q("2i3"), ParseError);
    EXPECT_THROW(Q("x"), ParseError);
    EXPECT_THROW(Q("1 2"), ParseError);
    try {
        Q("1+2iq");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 5);
    }
}

TEST(QuaternionLiteral, Formats) {
    EXPECT_EQ(to_literal(Q("1/2-3i+j-7/4k")), "1/2-3i+j-7/4k");
    EXPECT_EQ(to_literal(Q("0")), "0");
    EXPECT_EQ(to_literal(Q("1/5i")), "1/5i");
    EXPECT_EQ(to_literal(Q("-i")), "-i");
    EXPECT_EQ(to_literal(Q("3/5")), "3/5");
    EXPECT_EQ(to_literal(FloatQuaternion(0.5, 0, -1, 0)), "0.5-j");
}

TEST(QuaternionProperty, AlgebraicIdentities) {
    RandomSource rnd(11);
    for (int t = 0; t < 300; ++t) {
        const auto p = rnd.quaternion(), q = rnd.quaternion(), r = rnd.quaternion();
        EXPECT_EQ(conj(p * q), conj(q) * conj(p));
        EXPECT_EQ(norm(p * q), norm(p) * norm(q));
        EXPECT_EQ(trace(p * q), trace(q * p));
        EXPECT_EQ(conj(p + q), conj(p) + conj(q));
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(parse_quaternion(to_literal(p)), p);
        if (!p.is_zero()) EXPECT_EQ(p * inverse(p), ExactQuaternion(1));
    }
}
