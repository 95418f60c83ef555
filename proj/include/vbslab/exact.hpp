#pragma once

#include <gmpxx.h>

#include <string>

#include "vbslab/halfint.hpp"

namespace vbslab {

using BigInt = mpz_class;
using ExactRational = mpq_class;

// n! as a big integer
BigInt factorial(unsigned long n);

// factorial of a half-integer argument that must be a nonnegative integer,
// e.g. (S+m)! for a valid projection m of S
BigInt factorial(HalfInt n);

bool is_perfect_square(const BigInt& n);
// integer square root; preconditions: n >= 0 and n a perfect square
BigInt exact_sqrt(const BigInt& n);

// true when q >= 0 and both numerator and denominator are perfect squares
bool is_perfect_square(const ExactRational& q);
ExactRational exact_sqrt(const ExactRational& q);

// Exact value of the form sign * sqrt(square) with square >= 0 and
// sign in {-1,0,+1}; sign == 0 iff square == 0.  Closed under
// multiplication and division; addition only when the result stays in
// the form, i.e. when the two radicands have a rational square root
// ratio (add_closed asserts this).
struct SignedSqrtRational {
    int sign = 0;
    ExactRational square = 0;

    SignedSqrtRational() = default;
    SignedSqrtRational(int s, ExactRational sq);

    static SignedSqrtRational zero() { return {}; }
    static SignedSqrtRational from_rational(const ExactRational& q);
    // sqrt(q) for q >= 0
    static SignedSqrtRational sqrt_of(const ExactRational& q);

    bool is_zero() const { return sign == 0; }

    SignedSqrtRational operator-() const;
    friend SignedSqrtRational operator*(const SignedSqrtRational& a, const SignedSqrtRational& b);
    friend SignedSqrtRational operator/(const SignedSqrtRational& a, const SignedSqrtRational& b);
    friend bool operator==(const SignedSqrtRational& a, const SignedSqrtRational& b) = default;

    // a + b, valid only when the sum is again sign*sqrt(rational); throws
    // std::domain_error otherwise
    friend SignedSqrtRational add_closed(const SignedSqrtRational& a, const SignedSqrtRational& b);

    // signed square: sign * square, always rational
    ExactRational signed_square() const;
    // the value itself, which must be rational (square a perfect square)
    ExactRational to_rational() const;
    bool is_rational() const;

    double to_double() const;
    std::string to_string() const;
};

}  // namespace vbslab
