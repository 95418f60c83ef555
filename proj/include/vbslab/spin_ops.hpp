#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "vbslab/halfint.hpp"

namespace vbslab {

// spin component matrices in the m-descending basis: row/column q holds
// projection m = S - q
struct SpinMatrixSet {
    HalfInt S;
    Eigen::MatrixXcd sx, sy, sz;
};

SpinMatrixSet spin_matrices(HalfInt S);

// projector onto total bond spin J inside the pair space S_k x S_l,
// built from the product formula over the excluded total-spin values
struct BondProjector {
    HalfInt Sk, Sl, J;
    Eigen::MatrixXcd matrix;
};

BondProjector bond_projector(HalfInt Sk, HalfInt Sl, HalfInt J);

// One bond of the model: the projectors onto the top `multiplicity` total
// spins J in {Sk+Sl-multiplicity+1, ..., Sk+Sl} enter the Hamiltonian,
// weighted by coeffs (ascending J; empty means all 1).
struct BondTerm {
    int u = 0;
    int v = 0;
    int multiplicity = 1;
    std::vector<double> coeffs;
};

struct HamiltonianSpec {
    std::vector<HalfInt> sites;
    std::vector<BondTerm> bonds;
};

// open chain of bulk spins S_1..S_L with bond multiplicities
// M_{0,1}..M_{L,L+1}; boundary sites carry spins M_{0,1}/2 and M_{L,L+1}/2
struct ChainSpec {
    std::vector<HalfInt> bulk_spins;
    std::vector<int> multiplicities;
};

ChainSpec homogeneous_chain(HalfInt S, int length);
std::vector<HalfInt> chain_sites(const ChainSpec& chain);
HamiltonianSpec chain_hamiltonian(const ChainSpec& chain);

// row-major basis bookkeeping: site 0 varies slowest
struct BasisLayout {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> strides;
    std::size_t total = 1;
};

// throws resource_error when the total dimension exceeds the cap
BasisLayout basis_layout(const std::vector<HalfInt>& sites, std::size_t dim_cap);

// product of local dimensions; throws resource_error above the cap
std::size_t hilbert_dim(const std::vector<HalfInt>& sites, std::size_t dim_cap);

// VBSLAB_DIM_CAP when set, 65536 otherwise
std::size_t default_dim_cap();

Eigen::MatrixXcd assemble_hamiltonian(const HamiltonianSpec& spec);
Eigen::MatrixXcd assemble_hamiltonian(const HamiltonianSpec& spec, std::size_t dim_cap);

// H|psi> without materializing H
Eigen::VectorXcd apply_hamiltonian(const HamiltonianSpec& spec, const Eigen::VectorXcd& psi);

// Hamiltonian of the contiguous block [first, last]: bonds with both ends
// inside, sites re-indexed.  A single-site block has no bonds and yields
// the zero matrix.
Eigen::MatrixXcd block_hamiltonian(const HamiltonianSpec& spec, int first, int last);
Eigen::MatrixXcd block_hamiltonian(const HamiltonianSpec& spec, int first, int last,
                                   std::size_t dim_cap);

// dimension of the numerical null space of a Hermitian matrix; eigenvalues
// below rel_tol times the largest magnitude count as zero
int kernel_dimension(const Eigen::MatrixXcd& H, double rel_tol = 1e-8);

}  // namespace vbslab
