#pragma once

#include <map>

#include "vbslab/exact.hpp"
#include "vbslab/halfint.hpp"

namespace vbslab {

// Exact sum of terms sign*sqrt(q).  Each term is decomposed as
// coefficient * sqrt(squarefree kernel); terms with equal kernels combine
// rationally, so equality against a rational target is decidable.
class QuadraticSum {
  public:
    void add(const SignedSqrtRational& t);
    bool equals_rational(const ExactRational& target) const;
    bool is_zero() const { return equals_rational(0); }

  private:
    std::map<BigInt, ExactRational> by_kernel_;
};

// n = c^2 * k with k squarefree; requires n > 0 and that the squarefree
// part can be certified (trial division plus a primality check on the
// remainder)
void squarefree_decompose(const BigInt& n, BigInt& c, BigInt& k);

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
// convention, computed by exact ladder recursion from the stretched row.
// Zero when M != m1+m2, the triangle fails, or a projection is out of
// range.
SignedSqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                                  HalfInt M);

// Wigner 3j symbol (j1 j2 j3; m1 m2 m3)
SignedSqrtRational threej(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

// (l1 l2 l3; 0 0 0) in closed form: zero when l1+l2+l3 is odd or the
// triangle fails, otherwise sign (-1)^g with g = (l1+l2+l3)/2 and square
//   (2g-2l1)! (2g-2l2)! (2g-2l3)! / (2g+1)! * [g! / ((g-l1)!(g-l2)!(g-l3)!)]^2
SignedSqrtRational threej_000(int l1, int l2, int l3);

// Verifies sum_{m1,m2} (2l+1) (l1 l2 l; m1 m2 m)(l1 l2 l'; m1 m2 m')
// = delta_{ll'} delta_{mm'} exactly for all l, l' <= lmax in the triangle
// range of (l1, l2).  Requires lmax <= 8.
bool threej_orthogonality_check(int l1, int l2, int lmax);

// lambda(l, M) = (-1)^l M! (M+1)! / ((M-l)! (M+l+1)!); requires 0 <= l <= M
ExactRational lambda_coeff(int l, int M);

}  // namespace vbslab
