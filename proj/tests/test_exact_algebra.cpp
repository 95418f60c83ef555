#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "vbslab/exact.hpp"
#include "vbslab/wigner.hpp"

using namespace vbslab;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
HalfInt w(int n) { return HalfInt::whole(n); }
}  // namespace

TEST_CASE("factorial matches iterated multiplication") {
    BigInt expect = 1;
    for (unsigned long i = 0; i <= 25; ++i) {
        if (i > 0) expect *= i;
        CHECK(factorial(i) == expect);
    }
    CHECK(factorial(0ul) == 1);
    CHECK(factorial(5ul) == 120);
    CHECK(factorial(20ul) == BigInt("2432902008176640000"));
}

TEST_CASE("factorial of half-integers") {
    CHECK(factorial(w(4)) == 24);
    CHECK(factorial(w(0)) == 1);
    CHECK_THROWS_AS(factorial(h(3)), std::domain_error);
    CHECK_THROWS_AS(factorial(w(-1)), std::domain_error);
}

TEST_CASE("perfect squares and exact square roots") {
    CHECK(is_perfect_square(BigInt(144)));
    CHECK(!is_perfect_square(BigInt(145)));
    CHECK(!is_perfect_square(BigInt(-4)));
    CHECK(exact_sqrt(BigInt(144)) == 12);
    CHECK(is_perfect_square(ExactRational(4, 9)));
    CHECK(!is_perfect_square(ExactRational(2, 9)));
    CHECK(exact_sqrt(ExactRational(4, 9)) == ExactRational(2, 3));
    CHECK_THROWS_AS(exact_sqrt(BigInt(2)), std::domain_error);
}

TEST_CASE("signed sqrt rational arithmetic") {
    auto two = SignedSqrtRational::sqrt_of(2);
    auto eight = SignedSqrtRational::sqrt_of(8);
    CHECK(add_closed(two, eight) == SignedSqrtRational(1, 18));
    CHECK(add_closed(two, -two).is_zero());
    CHECK_THROWS_AS(add_closed(two, SignedSqrtRational::sqrt_of(3)), std::domain_error);

    auto q = SignedSqrtRational::from_rational(ExactRational(-3, 4));
    CHECK(q.sign == -1);
    CHECK(q.square == ExactRational(9, 16));
    CHECK(q.to_rational() == ExactRational(-3, 4));
    CHECK_THROWS_AS(two.to_rational(), std::domain_error);

    CHECK(two * eight == SignedSqrtRational(1, 16));
    CHECK((two * eight).to_rational() == 4);
    CHECK((two / eight) == SignedSqrtRational(1, ExactRational(1, 4)));
    CHECK((-two).sign == -1);
    CHECK(SignedSqrtRational::zero().is_zero());
}

TEST_CASE("squarefree decomposition") {
    BigInt c, k;
    squarefree_decompose(BigInt(720), c, k);
    CHECK(c == 12);
    CHECK(k == 5);
    squarefree_decompose(BigInt(1), c, k);
    CHECK(c == 1);
    CHECK(k == 1);
    squarefree_decompose(factorial(20ul), c, k);
    CHECK(c * c * k == factorial(20ul));
}

TEST_CASE("quadratic sums combine kernels exactly") {
    QuadraticSum s;
    s.add(SignedSqrtRational::sqrt_of(2));
    s.add(SignedSqrtRational::sqrt_of(8));
    CHECK(!s.equals_rational(0));
    s.add(-SignedSqrtRational::sqrt_of(18));
    CHECK(s.is_zero());

    QuadraticSum r;
    r.add(SignedSqrtRational::from_rational(ExactRational(5, 7)));
    r.add(SignedSqrtRational::sqrt_of(ExactRational(4, 9)));
    CHECK(r.equals_rational(ExactRational(29, 21)));
}

TEST_CASE("clebsch-gordan reference values") {
    auto c = clebsch_gordan(h(1), h(1), h(1), h(-1), w(1), w(0));
    CHECK(c.sign == 1);
    CHECK(c.square == ExactRational(1, 2));

    // projections must add up
    CHECK(clebsch_gordan(w(1), w(1), w(1), w(1), w(1), w(0)).is_zero());
    // triangle violations vanish
    CHECK(clebsch_gordan(w(1), w(0), w(1), w(0), w(3), w(0)).is_zero());

    // stretched states carry coefficient +1
    for (int t1 = 0; t1 <= 4; ++t1)
        for (int t2 = 0; t2 <= 4; ++t2) {
            auto cg = clebsch_gordan(h(t1), h(t1), h(t2), h(t2), h(t1 + t2), h(t1 + t2));
            CHECK(cg == SignedSqrtRational::from_rational(1));
        }

    // <1 0; 1 0 | 2 0> = sqrt(2/3)
    auto c20 = clebsch_gordan(w(1), w(0), w(1), w(0), w(2), w(0));
    CHECK(c20.sign == 1);
    CHECK(c20.square == ExactRational(2, 3));
    // <1 0; 1 0 | 1 0> = 0
    CHECK(clebsch_gordan(w(1), w(0), w(1), w(0), w(1), w(0)).is_zero());
}

TEST_CASE("clebsch-gordan rows are orthonormal") {
    // fixed (j1, j2, M): sum over m1 of <j1 m1; j2 M-m1 | J M><...| J' M>
    // equals delta_{JJ'}
    HalfInt j1 = h(3), j2 = w(1);
    for (int Mt = -5; Mt <= 5; Mt += 2) {
        for (int Jt = 1; Jt <= 5; Jt += 2) {
            for (int Jpt = 1; Jpt <= 5; Jpt += 2) {
                if (abs(h(Mt)) > h(Jt) || abs(h(Mt)) > h(Jpt)) continue;
                QuadraticSum sum;
                for (int m1t = -3; m1t <= 3; m1t += 2) {
                    auto a = clebsch_gordan(j1, h(m1t), j2, h(Mt - m1t), h(Jt), h(Mt));
                    auto b = clebsch_gordan(j1, h(m1t), j2, h(Mt - m1t), h(Jpt), h(Mt));
                    sum.add(a * b);
                }
                CHECK(sum.equals_rational(Jt == Jpt ? 1 : 0));
            }
        }
    }
}

TEST_CASE("threej_000 reference values") {
    CHECK(threej_000(0, 0, 0) == SignedSqrtRational::from_rational(1));
    CHECK(threej_000(1, 1, 1).is_zero());
    auto t = threej_000(1, 1, 0);
    CHECK(t.sign == -1);
    CHECK(t.square == ExactRational(1, 3));
    CHECK(threej_000(1, 2, 4).is_zero());
}

TEST_CASE("threej_000 is permutation invariant") {
    for (int l1 = 0; l1 <= 6; ++l1)
        for (int l2 = 0; l2 <= 6; ++l2)
            for (int l3 = 0; l3 <= 6; ++l3) {
                auto v = threej_000(l1, l2, l3);
                CHECK(v == threej_000(l2, l1, l3));
                CHECK(v == threej_000(l3, l2, l1));
                CHECK(v == threej_000(l1, l3, l2));
                CHECK(v == threej_000(l2, l3, l1));
                CHECK(v == threej_000(l3, l1, l2));
            }
}

TEST_CASE("threej_000 agrees with the ladder route") {
    for (int l1 = 0; l1 <= 6; ++l1)
        for (int l2 = 0; l2 <= 6; ++l2)
            for (int l3 = 0; l3 <= 6; ++l3) {
                auto direct = threej_000(l1, l2, l3);
                auto ladder = threej(w(l1), w(l2), w(l3), w(0), w(0), w(0));
                CHECK(direct == ladder);
            }
}

TEST_CASE("threej orthogonality") {
    CHECK(threej_orthogonality_check(1, 1, 2));
    CHECK(threej_orthogonality_check(0, 0, 0));
    CHECK(threej_orthogonality_check(2, 2, 4));
    CHECK(threej_orthogonality_check(3, 2, 5));
    CHECK_THROWS_AS(threej_orthogonality_check(1, 1, 9), std::domain_error);
}

TEST_CASE("lambda coefficients") {
    for (int M = 0; M <= 6; ++M) CHECK(lambda_coeff(0, M) == 1);
    CHECK(lambda_coeff(1, 1) == ExactRational(-1, 3));
    CHECK(lambda_coeff(2, 3) == ExactRational(1, 5));
    CHECK_THROWS_AS(lambda_coeff(3, 2), std::domain_error);
    CHECK_THROWS_AS(lambda_coeff(-1, 2), std::domain_error);

    for (int M = 1; M <= 8; ++M)
        for (int l = 1; l <= M; ++l) {
            auto v = lambda_coeff(l, M);
            CHECK((l % 2 == 0 ? v > 0 : v < 0));
            CHECK(abs(v) < 1);
        }
}
