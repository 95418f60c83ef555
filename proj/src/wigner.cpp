#include "vbslab/wigner.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace vbslab {

namespace {

// j(j+1) as an exact rational
ExactRational casimir(HalfInt j) { return ExactRational(j.twice * (j.twice + 2), 4); }

// squared ladder coefficient for raising m -> m+1 (equally, lowering m+1 -> m)
ExactRational raise_sq(HalfInt j, HalfInt m) {
    return casimir(j) - ExactRational(m.twice * (m.twice + 2), 4);
}

bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt J) {
    if ((j1.twice + j2.twice + J.twice) % 2 != 0) return false;
    return abs(j1 - j2) <= J && J <= j1 + j2;
}

constexpr HalfInt one = HalfInt::whole(1);

}  // namespace

void squarefree_decompose(const BigInt& n, BigInt& c, BigInt& k) {
    if (n <= 0) throw std::domain_error("squarefree_decompose: argument must be positive");
    c = 1;
    k = 1;
    BigInt rest = n;
    for (unsigned long p = 2; p <= 100000; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) c *= p;
        if (e % 2 != 0) k *= p;
    }
    if (rest == 1) return;
    if (is_perfect_square(rest)) {
        c *= exact_sqrt(rest);
        return;
    }
    if (mpz_probab_prime_p(rest.get_mpz_t(), 40) != 0) {
        k *= rest;
        return;
    }
    throw std::domain_error("squarefree_decompose: cannot certify squarefree part of " +
                            n.get_str());
}

void QuadraticSum::add(const SignedSqrtRational& t) {
    if (t.sign == 0) return;
    // t = sign*sqrt(num/den) = sign*(cn/(cd*kd))*sqrt(kn*kd) with coprime
    // num, den
    BigInt cn, kn, cd, kd;
    squarefree_decompose(t.square.get_num(), cn, kn);
    squarefree_decompose(t.square.get_den(), cd, kd);
    ExactRational coef(t.sign * cn, cd * kd);
    coef.canonicalize();
    BigInt kernel = kn * kd;
    auto [it, inserted] = by_kernel_.try_emplace(kernel, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) by_kernel_.erase(it);
    }
}

bool QuadraticSum::equals_rational(const ExactRational& target) const {
    ExactRational rational_part = 0;
    for (const auto& [kernel, coef] : by_kernel_) {
        if (kernel == 1)
            rational_part = coef;
        else if (coef != 0)
            return false;
    }
    return rational_part == target;
}

SignedSqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                                  HalfInt M) {
    if (j1.twice < 0 || j2.twice < 0 || J.twice < 0)
        throw std::domain_error("clebsch_gordan: negative angular momentum");
    if (M != m1 + m2) return SignedSqrtRational::zero();
    if (!triangle_ok(j1, j2, J)) return SignedSqrtRational::zero();
    if (!valid_projection(j1, m1) || !valid_projection(j2, m2) || !valid_projection(J, M))
        return SignedSqrtRational::zero();

    // stretched row (M = J), built downward from m1 = j1 so the
    // Condon-Shortley sign c_{m1 = j1} > 0 holds before normalization
    std::map<int, SignedSqrtRational> row;
    HalfInt lo = max(-j1, J - j2);
    row[j1.twice] = SignedSqrtRational::from_rational(1);
    for (HalfInt x = j1; x > lo; x = x - one)
        row[(x - one).twice] =
            -(row[x.twice] * SignedSqrtRational::sqrt_of(raise_sq(j2, J - x) / raise_sq(j1, x - one)));

    ExactRational norm_sq = 0;
    for (const auto& [xt, c] : row) norm_sq += c.square;
    auto inv_norm = SignedSqrtRational::sqrt_of(1 / norm_sq);
    for (auto& [xt, c] : row) c = c * inv_norm;

    // lower both sides until the target projection is reached
    for (HalfInt Mc = J; Mc > M; Mc = Mc - one) {
        HalfInt Mn = Mc - one;
        std::map<int, SignedSqrtRational> next;
        HalfInt nlo = max(-j1, Mn - j2);
        HalfInt nhi = min(j1, Mn + j2);
        auto denom = SignedSqrtRational::sqrt_of(raise_sq(J, Mn));
        for (HalfInt x = nlo; x <= nhi; x = x + one) {
            SignedSqrtRational acc;
            if (auto it = row.find((x + one).twice); it != row.end())
                acc = it->second * SignedSqrtRational::sqrt_of(raise_sq(j1, x));
            if (auto it = row.find(x.twice); it != row.end())
                acc = add_closed(acc, it->second * SignedSqrtRational::sqrt_of(raise_sq(j2, Mn - x)));
            next[x.twice] = acc / denom;
        }
        row = std::move(next);
    }

    auto it = row.find(m1.twice);
    return it == row.end() ? SignedSqrtRational::zero() : it->second;
}

SignedSqrtRational threej(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    auto cg = clebsch_gordan(j1, m1, j2, m2, j3, -m3);
    if (cg.is_zero()) return cg;
    HalfInt e = j1 - j2 - m3;
    // e is integral whenever the coefficient above is nonzero
    int phase = ((e.as_int() % 2) + 2) % 2 == 0 ? 1 : -1;
    auto scale = SignedSqrtRational::sqrt_of(ExactRational(1, j3.twice + 1));
    if (phase < 0) scale = -scale;
    return scale * cg;
}

SignedSqrtRational threej_000(int l1, int l2, int l3) {
    if (l1 < 0 || l2 < 0 || l3 < 0) throw std::domain_error("threej_000: negative argument");
    if (!triangle_ok(HalfInt::whole(l1), HalfInt::whole(l2), HalfInt::whole(l3)))
        return SignedSqrtRational::zero();
    int sum = l1 + l2 + l3;
    if (sum % 2 != 0) return SignedSqrtRational::zero();
    int g = sum / 2;
    auto f = [](int n) { return factorial(static_cast<unsigned long>(n)); };
    ExactRational square(f(2 * (g - l1)) * f(2 * (g - l2)) * f(2 * (g - l3)), f(2 * g + 1));
    square.canonicalize();
    ExactRational ratio(f(g), f(g - l1) * f(g - l2) * f(g - l3));
    ratio.canonicalize();
    square *= ratio * ratio;
    return {g % 2 == 0 ? 1 : -1, square};
}

bool threej_orthogonality_check(int l1, int l2, int lmax) {
    if (l1 < 0 || l2 < 0 || lmax < 0)
        throw std::domain_error("threej_orthogonality_check: negative argument");
    if (lmax > 8)
        throw std::domain_error("threej_orthogonality_check: lmax must be <= 8");
    int llo = std::abs(l1 - l2);
    int lhi = std::min(l1 + l2, lmax);
    auto L1 = HalfInt::whole(l1);
    auto L2 = HalfInt::whole(l2);
    for (int l = llo; l <= lhi; ++l) {
        for (int lp = llo; lp <= lhi; ++lp) {
            // terms need m = m' = -(m1+m2); unequal projections give an
            // empty sum, matching delta_{mm'} = 0
            int mrange = std::min(l, lp);
            for (int m = -mrange; m <= mrange; ++m) {
                QuadraticSum sum;
                for (int m1 = -l1; m1 <= l1; ++m1) {
                    int m2 = -m - m1;
                    if (std::abs(m2) > l2) continue;
                    auto a = threej(L1, L2, HalfInt::whole(l), HalfInt::whole(m1),
                                    HalfInt::whole(m2), HalfInt::whole(m));
                    auto b = threej(L1, L2, HalfInt::whole(lp), HalfInt::whole(m1),
                                    HalfInt::whole(m2), HalfInt::whole(m));
                    sum.add(a * b * SignedSqrtRational::from_rational(2 * l + 1));
                }
                if (!sum.equals_rational(l == lp ? 1 : 0)) return false;
            }
        }
    }
    return true;
}

ExactRational lambda_coeff(int l, int M) {
    if (l < 0) throw std::domain_error("lambda_coeff: l must be nonnegative");
    if (l > M) throw std::domain_error("lambda_coeff: l must not exceed M");
    auto f = [](int n) { return factorial(static_cast<unsigned long>(n)); };
    ExactRational r(f(M) * f(M + 1), f(M - l) * f(M + l + 1));
    r.canonicalize();
    return l % 2 == 0 ? r : -r;
}

}  // namespace vbslab
