#include "vbslab/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace vbslab {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt factorial(HalfInt n) {
    if (!n.is_integer() || n.twice < 0)
        throw std::domain_error("factorial: argument must be a nonnegative integer, got " +
                                to_string(n));
    return factorial(static_cast<unsigned long>(n.as_int()));
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt exact_sqrt(const BigInt& n) {
    if (!is_perfect_square(n)) throw std::domain_error("exact_sqrt: not a perfect square");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const ExactRational& q) {
    if (q < 0) return false;
    return is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

ExactRational exact_sqrt(const ExactRational& q) {
    if (q < 0) throw std::domain_error("exact_sqrt: negative radicand");
    ExactRational r(exact_sqrt(q.get_num()), exact_sqrt(q.get_den()));
    r.canonicalize();
    return r;
}

SignedSqrtRational::SignedSqrtRational(int s, ExactRational sq) : sign(s), square(std::move(sq)) {
    if (square < 0) throw std::domain_error("SignedSqrtRational: negative radicand");
    if (square == 0) sign = 0;
    if (sign == 0) square = 0;
    if (sign < -1 || sign > 1) throw std::domain_error("SignedSqrtRational: sign out of range");
    square.canonicalize();
}

SignedSqrtRational SignedSqrtRational::from_rational(const ExactRational& q) {
    if (q == 0) return zero();
    return {q > 0 ? 1 : -1, q * q};
}

SignedSqrtRational SignedSqrtRational::sqrt_of(const ExactRational& q) {
    if (q < 0) throw std::domain_error("sqrt_of: negative radicand");
    if (q == 0) return zero();
    return {1, q};
}

SignedSqrtRational SignedSqrtRational::operator-() const { return {-sign, square}; }

SignedSqrtRational operator*(const SignedSqrtRational& a, const SignedSqrtRational& b) {
    if (a.sign == 0 || b.sign == 0) return SignedSqrtRational::zero();
    return {a.sign * b.sign, a.square * b.square};
}

SignedSqrtRational operator/(const SignedSqrtRational& a, const SignedSqrtRational& b) {
    if (b.sign == 0) throw std::domain_error("SignedSqrtRational: division by zero");
    if (a.sign == 0) return SignedSqrtRational::zero();
    return {a.sign * b.sign, a.square / b.square};
}

SignedSqrtRational add_closed(const SignedSqrtRational& a, const SignedSqrtRational& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    // a = sa*sqrt(A), b = sb*sqrt(B); closed iff B/A is a perfect square,
    // then a+b = sa*sqrt(A)*(1 + sa*sb*sqrt(B/A))
    ExactRational ratio = b.square / a.square;
    if (!is_perfect_square(ratio))
        throw std::domain_error("add_closed: sum leaves the sign*sqrt(rational) form");
    ExactRational t = 1 + a.sign * b.sign * exact_sqrt(ratio);
    if (t == 0) return SignedSqrtRational::zero();
    int s = (t > 0 ? 1 : -1) * a.sign;
    return {s, a.square * t * t};
}

ExactRational SignedSqrtRational::signed_square() const { return sign * square; }

bool SignedSqrtRational::is_rational() const { return sign == 0 || is_perfect_square(square); }

ExactRational SignedSqrtRational::to_rational() const {
    if (sign == 0) return 0;
    if (!is_perfect_square(square))
        throw std::domain_error("to_rational: value is irrational, square = " +
                                square.get_str());
    return sign * exact_sqrt(square);
}

double SignedSqrtRational::to_double() const {
    return sign * std::sqrt(square.get_d());
}

std::string SignedSqrtRational::to_string() const {
    if (sign == 0) return "0";
    return std::string(sign < 0 ? "-" : "") + "sqrt(" + square.get_str() + ")";
}

}  // namespace vbslab
