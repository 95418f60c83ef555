#include "vbslab/spin_ops.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "vbslab/errors.hpp"

namespace vbslab {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using namespace std::complex_literals;

double casimir(HalfInt s) { return 0.25 * s.twice * (s.twice + 2); }

// canonical form of a bond: endpoints ordered, multiplicity validated
struct CheckedBond {
    int u, v;  // u < v
    int mult;
    std::vector<double> coeffs;
};

CheckedBond check_bond(const HamiltonianSpec& spec, const BondTerm& b) {
    int n = static_cast<int>(spec.sites.size());
    if (b.u < 0 || b.u >= n || b.v < 0 || b.v >= n)
        throw std::invalid_argument("bond endpoint out of range");
    if (b.u == b.v) throw model_error("self-loop bond is not allowed");
    CheckedBond cb;
    cb.u = std::min(b.u, b.v);
    cb.v = std::max(b.u, b.v);
    cb.mult = b.multiplicity;
    cb.coeffs = b.coeffs;
    HalfInt su = spec.sites[cb.u], sv = spec.sites[cb.v];
    int max_mult = min(su, sv).twice;
    if (cb.mult < 1) throw std::invalid_argument("bond multiplicity must be >= 1");
    if (cb.mult > max_mult)
        throw model_error("bond multiplicity " + std::to_string(cb.mult) +
                          " exceeds 2*min(S_u, S_v) = " + std::to_string(max_mult));
    if (cb.coeffs.empty()) cb.coeffs.assign(static_cast<std::size_t>(cb.mult), 1.0);
    if (cb.coeffs.size() != static_cast<std::size_t>(cb.mult))
        throw std::invalid_argument("bond coefficient count must match multiplicity");
    return cb;
}

// sum of the penalized projectors on the pair space of a bond
MatrixXcd bond_operator(const HamiltonianSpec& spec, const CheckedBond& cb) {
    HalfInt su = spec.sites[cb.u], sv = spec.sites[cb.v];
    HalfInt jtop = su + sv;
    MatrixXcd W;
    for (int i = 0; i < cb.mult; ++i) {
        HalfInt J = jtop - HalfInt::from_twice(2 * (cb.mult - 1 - i));
        auto proj = bond_projector(su, sv, J);
        if (W.size() == 0) W = MatrixXcd::Zero(proj.matrix.rows(), proj.matrix.cols());
        W += cb.coeffs[static_cast<std::size_t>(i)] * proj.matrix;
    }
    return W;
}

}  // namespace

SpinMatrixSet spin_matrices(HalfInt S) {
    if (S.twice < 0) throw std::invalid_argument("spin_matrices: negative spin");
    int d = dimension(S);
    MatrixXcd sp = MatrixXcd::Zero(d, d);
    for (int q = 1; q < d; ++q) {
        // raise m = S-q to m+1 = S-q+1
        double m = 0.5 * S.twice - q;
        sp(q - 1, q) = std::sqrt(casimir(S) - m * (m + 1));
    }
    MatrixXcd sm = sp.adjoint();
    SpinMatrixSet set;
    set.S = S;
    set.sx = 0.5 * (sp + sm);
    set.sy = -0.5i * (sp - sm);
    set.sz = MatrixXcd::Zero(d, d);
    for (int q = 0; q < d; ++q) set.sz(q, q) = 0.5 * S.twice - q;
    return set;
}

BondProjector bond_projector(HalfInt Sk, HalfInt Sl, HalfInt J) {
    if (Sk.twice < 0 || Sl.twice < 0) throw std::invalid_argument("bond_projector: negative spin");
    HalfInt jlo = abs(Sk - Sl), jhi = Sk + Sl;
    if (J < jlo || J > jhi || (J.twice - jlo.twice) % 2 != 0)
        throw std::invalid_argument("bond_projector: J outside the pair decomposition");
    auto a = spin_matrices(Sk);
    auto b = spin_matrices(Sl);
    int da = dimension(Sk), db = dimension(Sl);
    MatrixXcd ia = MatrixXcd::Identity(da, da), ib = MatrixXcd::Identity(db, db);
    MatrixXcd tx = Eigen::kroneckerProduct(a.sx, ib) + Eigen::kroneckerProduct(ia, b.sx);
    MatrixXcd ty = Eigen::kroneckerProduct(a.sy, ib) + Eigen::kroneckerProduct(ia, b.sy);
    MatrixXcd tz = Eigen::kroneckerProduct(a.sz, ib) + Eigen::kroneckerProduct(ia, b.sz);
    MatrixXcd t2 = tx * tx + ty * ty + tz * tz;
    MatrixXcd p = MatrixXcd::Identity(da * db, da * db);
    for (HalfInt j = jlo; j <= jhi; j = j + HalfInt::whole(1)) {
        if (j == J) continue;
        p = p * (t2 - casimir(j) * MatrixXcd::Identity(da * db, da * db)) /
            (casimir(J) - casimir(j));
    }
    return {Sk, Sl, J, std::move(p)};
}

ChainSpec homogeneous_chain(HalfInt S, int length) {
    if (!S.is_integer() || S.twice <= 0)
        throw std::invalid_argument("homogeneous_chain: spin must be a positive integer");
    if (length < 1) throw std::invalid_argument("homogeneous_chain: length must be >= 1");
    ChainSpec chain;
    chain.bulk_spins.assign(static_cast<std::size_t>(length), S);
    chain.multiplicities.assign(static_cast<std::size_t>(length) + 1, S.as_int());
    return chain;
}

std::vector<HalfInt> chain_sites(const ChainSpec& chain) {
    std::size_t L = chain.bulk_spins.size();
    if (L == 0) throw std::invalid_argument("chain_sites: empty chain");
    if (chain.multiplicities.size() != L + 1)
        throw std::invalid_argument("chain_sites: need one multiplicity per bond");
    std::vector<HalfInt> sites;
    sites.reserve(L + 2);
    sites.push_back(HalfInt::from_twice(chain.multiplicities.front()));
    sites.insert(sites.end(), chain.bulk_spins.begin(), chain.bulk_spins.end());
    sites.push_back(HalfInt::from_twice(chain.multiplicities.back()));
    return sites;
}

HamiltonianSpec chain_hamiltonian(const ChainSpec& chain) {
    HamiltonianSpec spec;
    spec.sites = chain_sites(chain);
    for (std::size_t j = 0; j < chain.multiplicities.size(); ++j) {
        int m = chain.multiplicities[j];
        if (m < 1) throw std::invalid_argument("chain_hamiltonian: multiplicities must be >= 1");
        spec.bonds.push_back({static_cast<int>(j), static_cast<int>(j) + 1, m, {}});
    }
    return spec;
}

BasisLayout basis_layout(const std::vector<HalfInt>& sites, std::size_t dim_cap) {
    BasisLayout lay;
    lay.dims.reserve(sites.size());
    for (HalfInt s : sites) {
        if (s.twice < 0) throw std::invalid_argument("basis_layout: negative site spin");
        lay.dims.push_back(static_cast<std::size_t>(dimension(s)));
    }
    lay.strides.assign(sites.size(), 1);
    for (std::size_t l = sites.size(); l-- > 0;) {
        if (l + 1 < sites.size()) lay.strides[l] = lay.strides[l + 1] * lay.dims[l + 1];
    }
    for (std::size_t d : lay.dims) {
        if (d != 0 && lay.total > dim_cap / d)
            throw resource_error("hilbert space dimension exceeds cap " +
                                 std::to_string(dim_cap));
        lay.total *= d;
    }
    return lay;
}

std::size_t hilbert_dim(const std::vector<HalfInt>& sites, std::size_t dim_cap) {
    return basis_layout(sites, dim_cap).total;
}

std::size_t default_dim_cap() {
    if (const char* env = std::getenv("VBSLAB_DIM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw std::invalid_argument("VBSLAB_DIM_CAP must be a positive integer");
    }
    return 65536;
}

Eigen::MatrixXcd assemble_hamiltonian(const HamiltonianSpec& spec) {
    return assemble_hamiltonian(spec, default_dim_cap());
}

Eigen::MatrixXcd assemble_hamiltonian(const HamiltonianSpec& spec, std::size_t dim_cap) {
    auto lay = basis_layout(spec.sites, dim_cap);
    std::size_t dim = lay.total;
    MatrixXcd H = MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& bond : spec.bonds) {
        auto cb = check_bond(spec, bond);
        MatrixXcd W = bond_operator(spec, cb);
        std::size_t du = lay.dims[static_cast<std::size_t>(cb.u)];
        std::size_t dv = lay.dims[static_cast<std::size_t>(cb.v)];
        std::size_t su = lay.strides[static_cast<std::size_t>(cb.u)];
        std::size_t sv = lay.strides[static_cast<std::size_t>(cb.v)];
        for (std::size_t base = 0; base < dim; ++base) {
            if ((base / su) % du != 0 || (base / sv) % dv != 0) continue;
            for (std::size_t qu = 0; qu < du; ++qu)
                for (std::size_t qv = 0; qv < dv; ++qv)
                    for (std::size_t pu = 0; pu < du; ++pu)
                        for (std::size_t pv = 0; pv < dv; ++pv)
                            H(static_cast<Eigen::Index>(base + qu * su + qv * sv),
                              static_cast<Eigen::Index>(base + pu * su + pv * sv)) +=
                                W(static_cast<Eigen::Index>(qu * dv + qv),
                                  static_cast<Eigen::Index>(pu * dv + pv));
        }
    }
    return H;
}

Eigen::VectorXcd apply_hamiltonian(const HamiltonianSpec& spec, const Eigen::VectorXcd& psi) {
    auto lay = basis_layout(spec.sites, static_cast<std::size_t>(-1));
    std::size_t dim = lay.total;
    if (psi.size() != static_cast<Eigen::Index>(dim))
        throw std::invalid_argument("apply_hamiltonian: state dimension mismatch");
    VectorXcd out = VectorXcd::Zero(psi.size());
    for (const auto& bond : spec.bonds) {
        auto cb = check_bond(spec, bond);
        MatrixXcd W = bond_operator(spec, cb);
        std::size_t du = lay.dims[static_cast<std::size_t>(cb.u)];
        std::size_t dv = lay.dims[static_cast<std::size_t>(cb.v)];
        std::size_t su = lay.strides[static_cast<std::size_t>(cb.u)];
        std::size_t sv = lay.strides[static_cast<std::size_t>(cb.v)];
        for (std::size_t i = 0; i < dim; ++i) {
            std::complex<double> x = psi(static_cast<Eigen::Index>(i));
            if (x == 0.0) continue;
            std::size_t qu = (i / su) % du;
            std::size_t qv = (i / sv) % dv;
            std::size_t rest = i - qu * su - qv * sv;
            Eigen::Index col = static_cast<Eigen::Index>(qu * dv + qv);
            for (std::size_t pu = 0; pu < du; ++pu)
                for (std::size_t pv = 0; pv < dv; ++pv)
                    out(static_cast<Eigen::Index>(rest + pu * su + pv * sv)) +=
                        W(static_cast<Eigen::Index>(pu * dv + pv), col) * x;
        }
    }
    return out;
}

Eigen::MatrixXcd block_hamiltonian(const HamiltonianSpec& spec, int first, int last) {
    return block_hamiltonian(spec, first, last, default_dim_cap());
}

Eigen::MatrixXcd block_hamiltonian(const HamiltonianSpec& spec, int first, int last,
                                   std::size_t dim_cap) {
    int n = static_cast<int>(spec.sites.size());
    if (first < 0 || last >= n || first > last)
        throw std::domain_error("block_hamiltonian: block must be a nonempty site range");
    HamiltonianSpec sub;
    sub.sites.assign(spec.sites.begin() + first, spec.sites.begin() + last + 1);
    for (const auto& b : spec.bonds) {
        if (b.u < first || b.u > last || b.v < first || b.v > last) continue;
        BondTerm t = b;
        t.u -= first;
        t.v -= first;
        sub.bonds.push_back(std::move(t));
    }
    if (sub.bonds.empty()) {
        std::size_t dim = hilbert_dim(sub.sites, dim_cap);
        return MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    }
    return assemble_hamiltonian(sub, dim_cap);
}

int kernel_dimension(const Eigen::MatrixXcd& H, double rel_tol) {
    if (H.rows() != H.cols()) throw std::invalid_argument("kernel_dimension: matrix not square");
    if (H.rows() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    double scale = ev.cwiseAbs().maxCoeff();
    double thresh = rel_tol * scale;
    int count = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (std::abs(ev(i)) <= thresh) ++count;
    return count;
}

}  // namespace vbslab
