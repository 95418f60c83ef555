#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <vector>

#include "vbslab/exact.hpp"
#include "vbslab/halfint.hpp"
#include "vbslab/spin_ops.hpp"

namespace vbslab {

// valence bond between sites k < l carrying `mult` singlet factors
struct ValenceEdge {
    int k = 0;
    int l = 0;
    int mult = 1;
};

// monomial in the site boson operators: key holds the a-boson count p_l
// per site, the b-boson count is q_l = 2 S_l - p_l
using MonomialKey = std::vector<int>;

struct BosonMonomialMap {
    std::vector<HalfInt> spins;
    std::map<MonomialKey, ExactRational> terms;
};

// expands prod_edges (a_k^+ b_l^+ - a_l^+ b_k^+)^mult applied to the
// vacuum; every site must receive exactly 2 S_l bosons from its incident
// edges (model_error otherwise)
BosonMonomialMap expand_valence_bonds(const std::vector<HalfInt>& spins,
                                      const std::vector<ValenceEdge>& edges,
                                      std::size_t term_cap = std::size_t{1} << 22);

// Exact amplitude data: the amplitude at basis index i is
//   sign(rel_i) * sqrt(global_square * rel_i^2 * B_i)
// with B_i = prod_l p_l! q_l! read off the index digits.  Absent indices
// are zero.
struct ExactAmplitudes {
    ExactRational global_square = 1;
    std::map<std::size_t, ExactRational> rel;
};

struct StateVector {
    std::vector<HalfInt> spins;
    std::vector<std::size_t> dims;
    Eigen::VectorXcd amplitudes;
    std::optional<ExactAmplitudes> exact;
};

// basis convention: per-site digit q = S - m (m descending), site 0 slowest
StateVector monomials_to_state(const BosonMonomialMap& map);
StateVector monomials_to_state(const BosonMonomialMap& map, std::size_t dim_cap);

ExactRational exact_norm_square(const StateVector& st);
// inner product of two exact states over the same site list (amplitudes
// are real in this representation)
SignedSqrtRational exact_inner(const StateVector& a, const StateVector& b);
// scales the state to unit norm, exactly when exact amplitudes are present
void normalize(StateVector& st);

// full chain state: boundary spins M_{0,1}/2 and M_{L,L+1}/2 plus bulk
StateVector build_vbs_chain(const ChainSpec& chain);
StateVector build_vbs_chain(const ChainSpec& chain, std::size_t dim_cap);

// spin-1 chain of n_sites bulk spins between two boundary spin-1/2's,
// built from the maximally-entangled-pair representation; normalized
StateVector build_vbs_spin1_mes(int n_sites);

// Block of a chain with open valence legs: interior bonds carry
// interior_mult, and left_mult (right_mult) bosons enter site 1 (site L)
// from the cut bonds.
struct BlockChainSpec {
    std::vector<HalfInt> spins;
    std::vector<int> interior_mult;
    int left_mult = 0;
    int right_mult = 0;
};

BlockChainSpec homogeneous_block(HalfInt S, int length);

// state with the cut-bond legs recoupled to total spin (J, M); valid J
// range is |J-| .. J+ with 2 J+- = left_mult +- right_mult
StateVector build_degenerate_vbs(const BlockChainSpec& block, HalfInt J, HalfInt M);
StateVector build_degenerate_vbs(const BlockChainSpec& block, HalfInt J, HalfInt M,
                                 std::size_t dim_cap);

// bond multiplicities of an open chain (boundary spins included in
// `spins`) so every site is saturated; model_error when no solution
// exists or a multiplicity would drop below 1
std::vector<int> solve_multiplicities(const std::vector<HalfInt>& spins);

}  // namespace vbslab
