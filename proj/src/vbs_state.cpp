#include "vbslab/vbs_state.hpp"

#include <stdexcept>
#include <string>

#include "vbslab/errors.hpp"
#include "vbslab/wigner.hpp"

namespace vbslab {

namespace {

BigInt binomial(int n, int k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void check_edges(const std::vector<HalfInt>& spins, const std::vector<ValenceEdge>& edges,
                 std::vector<int>* leg_budget) {
    int n = static_cast<int>(spins.size());
    std::vector<int> incident(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges) {
        if (e.k < 0 || e.k >= n || e.l < 0 || e.l >= n)
            throw std::invalid_argument("valence edge endpoint out of range");
        if (e.k >= e.l) throw std::invalid_argument("valence edges must satisfy k < l");
        if (e.mult < 1) throw std::invalid_argument("valence edge multiplicity must be >= 1");
        incident[static_cast<std::size_t>(e.k)] += e.mult;
        incident[static_cast<std::size_t>(e.l)] += e.mult;
    }
    for (int l = 0; l < n; ++l) {
        int deficit = spins[static_cast<std::size_t>(l)].twice - incident[static_cast<std::size_t>(l)];
        if (leg_budget == nullptr) {
            if (deficit != 0)
                throw model_error("site " + std::to_string(l) + " receives " +
                                  std::to_string(incident[static_cast<std::size_t>(l)]) +
                                  " bosons but carries 2S = " +
                                  std::to_string(spins[static_cast<std::size_t>(l)].twice));
        } else {
            if (deficit < 0)
                throw model_error("site " + std::to_string(l) + " is oversaturated");
            (*leg_budget)[static_cast<std::size_t>(l)] = deficit;
        }
    }
}

// expansion core; sites may be left deficient when allow_deficit is set
BosonMonomialMap expand_core(const std::vector<HalfInt>& spins,
                             const std::vector<ValenceEdge>& edges, std::size_t term_cap,
                             bool allow_deficit) {
    std::vector<int> budget(spins.size(), 0);
    check_edges(spins, edges, allow_deficit ? &budget : nullptr);

    std::size_t combos = 1;
    for (const auto& e : edges) {
        std::size_t w = static_cast<std::size_t>(e.mult) + 1;
        if (combos > term_cap / w)
            throw resource_error("valence bond expansion exceeds term cap " +
                                 std::to_string(term_cap));
        combos *= w;
    }

    BosonMonomialMap map;
    map.spins = spins;
    MonomialKey p(spins.size(), 0);
    std::vector<int> q(spins.size(), 0);
    BigInt coeff = 1;

    // depth-first over the binomial choice t_e on each edge
    auto recurse = [&](auto&& self, std::size_t ei) -> void {
        if (ei == edges.size()) {
            ExactRational c(coeff);
            auto [it, inserted] = map.terms.try_emplace(p, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) map.terms.erase(it);
            }
            return;
        }
        const auto& e = edges[ei];
        auto k = static_cast<std::size_t>(e.k), l = static_cast<std::size_t>(e.l);
        for (int t = 0; t <= e.mult; ++t) {
            BigInt saved = coeff;
            BigInt term = binomial(e.mult, t);
            if ((e.mult - t) % 2 != 0) term = -term;
            coeff *= term;
            p[k] += t;
            q[l] += t;
            p[l] += e.mult - t;
            q[k] += e.mult - t;
            self(self, ei + 1);
            p[k] -= t;
            q[l] -= t;
            p[l] -= e.mult - t;
            q[k] -= e.mult - t;
            coeff = saved;
        }
    };
    recurse(recurse, 0);
    return map;
}

ExactRational boson_weight(const std::vector<HalfInt>& spins, const std::vector<std::size_t>& strides,
                           const std::vector<std::size_t>& dims, std::size_t index) {
    BigInt w = 1;
    for (std::size_t l = 0; l < spins.size(); ++l) {
        auto q = static_cast<unsigned long>((index / strides[l]) % dims[l]);
        auto p = static_cast<unsigned long>(spins[l].twice) - q;
        w *= factorial(p) * factorial(q);
    }
    return ExactRational(w);
}

void refresh_dense(StateVector& st) {
    const auto& ex = *st.exact;
    std::size_t total = 1;
    for (std::size_t d : st.dims) total *= d;
    std::vector<std::size_t> strides(st.dims.size(), 1);
    for (std::size_t l = st.dims.size(); l-- > 0;)
        if (l + 1 < st.dims.size()) strides[l] = strides[l + 1] * st.dims[l + 1];
    st.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total));
    for (const auto& [i, rel] : ex.rel) {
        if (rel == 0) continue;
        SignedSqrtRational amp(rel > 0 ? 1 : -1,
                               ex.global_square * rel * rel *
                                   boson_weight(st.spins, strides, st.dims, i));
        st.amplitudes(static_cast<Eigen::Index>(i)) = amp.to_double();
    }
}

}  // namespace

BosonMonomialMap expand_valence_bonds(const std::vector<HalfInt>& spins,
                                      const std::vector<ValenceEdge>& edges,
                                      std::size_t term_cap) {
    return expand_core(spins, edges, term_cap, false);
}

StateVector monomials_to_state(const BosonMonomialMap& map) {
    return monomials_to_state(map, default_dim_cap());
}

StateVector monomials_to_state(const BosonMonomialMap& map, std::size_t dim_cap) {
    auto lay = basis_layout(map.spins, dim_cap);
    StateVector st;
    st.spins = map.spins;
    st.dims = lay.dims;
    st.exact = ExactAmplitudes{};
    for (const auto& [key, coeff] : map.terms) {
        std::size_t index = 0;
        for (std::size_t l = 0; l < key.size(); ++l) {
            int q = map.spins[l].twice - key[l];
            if (key[l] < 0 || q < 0)
                throw std::invalid_argument("monomial key outside the site boson budget");
            index += static_cast<std::size_t>(q) * lay.strides[l];
        }
        if (coeff != 0) st.exact->rel[index] += coeff;
    }
    refresh_dense(st);
    return st;
}

ExactRational exact_norm_square(const StateVector& st) {
    if (!st.exact) throw std::domain_error("exact_norm_square: state has no exact amplitudes");
    std::vector<std::size_t> strides(st.dims.size(), 1);
    for (std::size_t l = st.dims.size(); l-- > 0;)
        if (l + 1 < st.dims.size()) strides[l] = strides[l + 1] * st.dims[l + 1];
    ExactRational sum = 0;
    for (const auto& [i, rel] : st.exact->rel)
        sum += rel * rel * boson_weight(st.spins, strides, st.dims, i);
    return st.exact->global_square * sum;
}

SignedSqrtRational exact_inner(const StateVector& a, const StateVector& b) {
    if (!a.exact || !b.exact) throw std::domain_error("exact_inner: missing exact amplitudes");
    if (a.spins != b.spins) throw std::invalid_argument("exact_inner: site lists differ");
    std::vector<std::size_t> strides(a.dims.size(), 1);
    for (std::size_t l = a.dims.size(); l-- > 0;)
        if (l + 1 < a.dims.size()) strides[l] = strides[l + 1] * a.dims[l + 1];
    ExactRational sum = 0;
    for (const auto& [i, ra] : a.exact->rel) {
        auto it = b.exact->rel.find(i);
        if (it == b.exact->rel.end()) continue;
        sum += ra * it->second * boson_weight(a.spins, strides, a.dims, i);
    }
    if (sum == 0) return SignedSqrtRational::zero();
    return {sum > 0 ? 1 : -1,
            a.exact->global_square * b.exact->global_square * sum * sum};
}

void normalize(StateVector& st) {
    if (st.exact) {
        ExactRational n2 = exact_norm_square(st);
        if (n2 == 0) throw std::domain_error("normalize: zero state");
        st.exact->global_square /= n2;
        refresh_dense(st);
        return;
    }
    double n = st.amplitudes.norm();
    if (n == 0.0) throw std::domain_error("normalize: zero state");
    st.amplitudes /= n;
}

StateVector build_vbs_chain(const ChainSpec& chain) {
    return build_vbs_chain(chain, default_dim_cap());
}

StateVector build_vbs_chain(const ChainSpec& chain, std::size_t dim_cap) {
    auto sites = chain_sites(chain);
    std::vector<ValenceEdge> edges;
    edges.reserve(chain.multiplicities.size());
    for (std::size_t j = 0; j < chain.multiplicities.size(); ++j)
        edges.push_back({static_cast<int>(j), static_cast<int>(j) + 1, chain.multiplicities[j]});
    return monomials_to_state(expand_valence_bonds(sites, edges), dim_cap);
}

StateVector build_vbs_spin1_mes(int n_sites) {
    if (n_sites < 1) throw std::invalid_argument("build_vbs_spin1_mes: need at least one site");
    std::vector<HalfInt> spins;
    spins.push_back(HalfInt::from_twice(1));
    for (int j = 0; j < n_sites; ++j) spins.push_back(HalfInt::whole(1));
    spins.push_back(HalfInt::from_twice(1));
    auto lay = basis_layout(spins, std::size_t{1} << 26);

    StateVector st;
    st.spins = spins;
    st.dims = lay.dims;
    st.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(lay.total));

    // per-site 2x2 factors in the entangled-pair representation, indexed
    // by the local digit q = 1 - m
    const double r2 = std::sqrt(2.0);
    const double G[3][2][2] = {
        {{0, 0}, {r2, 0}},    // m = +1
        {{-1, 0}, {0, 1}},    // m = 0
        {{0, -r2}, {0, 0}},   // m = -1
    };
    // pair state of the two boundary spin-1/2's, rows = left digit
    const double V[2][2] = {{0, -1 / r2}, {1 / r2, 0}};
    const double scale = std::pow(3.0, -0.5 * n_sites);

    std::vector<int> digit(static_cast<std::size_t>(n_sites), 0);
    std::size_t bulk_total = 1;
    for (int j = 0; j < n_sites; ++j) bulk_total *= 3;
    for (std::size_t b = 0; b < bulk_total; ++b) {
        std::size_t rest = b;
        for (int j = n_sites - 1; j >= 0; --j) {
            digit[static_cast<std::size_t>(j)] = static_cast<int>(rest % 3);
            rest /= 3;
        }
        // M = G^(m_N) ... G^(m_1)
        double M[2][2] = {{1, 0}, {0, 1}};
        for (int j = 0; j < n_sites; ++j) {
            const auto& g = G[digit[static_cast<std::size_t>(j)]];
            double t[2][2];
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) t[r][c] = g[r][0] * M[0][c] + g[r][1] * M[1][c];
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) M[r][c] = t[r][c];
        }
        // bulk part of the basis index
        std::size_t bulk_index = 0;
        for (int j = 0; j < n_sites; ++j)
            bulk_index += static_cast<std::size_t>(digit[static_cast<std::size_t>(j)]) *
                          lay.strides[static_cast<std::size_t>(j) + 1];
        for (int s0 = 0; s0 < 2; ++s0)
            for (int sR = 0; sR < 2; ++sR) {
                // right boundary component: row index of M acts there
                double amp = M[sR][0] * V[s0][0] + M[sR][1] * V[s0][1];
                if (amp == 0.0) continue;
                std::size_t idx = static_cast<std::size_t>(s0) * lay.strides[0] + bulk_index +
                                  static_cast<std::size_t>(sR) * lay.strides.back();
                st.amplitudes(static_cast<Eigen::Index>(idx)) = scale * amp;
            }
    }
    return st;
}

BlockChainSpec homogeneous_block(HalfInt S, int length) {
    if (!S.is_integer() || S.twice <= 0)
        throw std::invalid_argument("homogeneous_block: spin must be a positive integer");
    if (length < 1) throw std::invalid_argument("homogeneous_block: length must be >= 1");
    BlockChainSpec block;
    block.spins.assign(static_cast<std::size_t>(length), S);
    block.interior_mult.assign(static_cast<std::size_t>(length) - 1, S.as_int());
    block.left_mult = S.as_int();
    block.right_mult = S.as_int();
    return block;
}

StateVector build_degenerate_vbs(const BlockChainSpec& block, HalfInt J, HalfInt M) {
    return build_degenerate_vbs(block, J, M, default_dim_cap());
}

StateVector build_degenerate_vbs(const BlockChainSpec& block, HalfInt J, HalfInt M,
                                 std::size_t dim_cap) {
    std::size_t L = block.spins.size();
    if (L == 0) throw std::invalid_argument("build_degenerate_vbs: empty block");
    if (block.interior_mult.size() + 1 != L)
        throw std::invalid_argument("build_degenerate_vbs: need one multiplicity per interior bond");
    if (block.left_mult < 0 || block.right_mult < 0)
        throw std::invalid_argument("build_degenerate_vbs: negative leg multiplicity");

    HalfInt j1 = HalfInt::from_twice(block.left_mult);
    HalfInt jL = HalfInt::from_twice(block.right_mult);
    HalfInt jplus = j1 + jL, jminus = abs(j1 - jL);
    if (J < jminus || J > jplus || (J.twice - jminus.twice) % 2 != 0)
        throw std::domain_error("build_degenerate_vbs: J outside " + to_string(jminus) + ".." +
                                to_string(jplus));
    if (!valid_projection(J, M))
        throw std::domain_error("build_degenerate_vbs: M is not a projection of J");

    std::vector<ValenceEdge> edges;
    for (std::size_t j = 0; j + 1 < L; ++j)
        edges.push_back({static_cast<int>(j), static_cast<int>(j) + 1, block.interior_mult[j]});
    auto interior = expand_core(block.spins, edges, std::size_t{1} << 22, true);

    // saturation: every interior site full, end sites short by the legs
    std::vector<int> incident(L, 0);
    for (const auto& e : edges) {
        incident[static_cast<std::size_t>(e.k)] += e.mult;
        incident[static_cast<std::size_t>(e.l)] += e.mult;
    }
    incident[0] += block.left_mult;
    incident[L - 1] += block.right_mult;
    for (std::size_t l = 0; l < L; ++l)
        if (incident[l] != block.spins[l].twice)
            throw model_error("block site " + std::to_string(l) +
                              " is not saturated by bonds and legs");

    // leg recoupling weights w(m1) = <j1 m1; jL mL | J M> / sqrt of the
    // boson factorials the legs inject; ratios w(m1)/w0 are rational
    struct LegTerm {
        HalfInt m1, mL;
        ExactRational rel;
    };
    std::vector<LegTerm> legs;
    SignedSqrtRational w0;
    for (int m1t = -j1.twice; m1t <= j1.twice; m1t += 2) {
        HalfInt m1 = HalfInt::from_twice(m1t);
        HalfInt mL = M - m1;
        if (!valid_projection(jL, mL)) continue;
        auto cg = clebsch_gordan(j1, m1, jL, mL, J, M);
        if (cg.is_zero()) continue;
        ExactRational denom(factorial(j1 + m1) * factorial(j1 - m1) * factorial(jL + mL) *
                            factorial(jL - mL));
        auto w = cg * SignedSqrtRational::sqrt_of(1 / denom);
        if (w0.is_zero()) {
            w0 = w;
            legs.push_back({m1, mL, 1});
        } else {
            legs.push_back({m1, mL, (w / w0).to_rational()});
        }
    }

    BosonMonomialMap full;
    full.spins = block.spins;
    for (const auto& leg : legs) {
        // the key stores a-boson counts only; the b-bosons the legs add
        // are absorbed by the fixed site total 2S
        int dp1 = (j1 + leg.m1).twice / 2;
        int dpL = (jL + leg.mL).twice / 2;
        for (const auto& [key, coeff] : interior.terms) {
            MonomialKey nk = key;
            nk[0] += dp1;
            nk[L - 1] += dpL;
            ExactRational c = coeff * leg.rel;
            auto [it, inserted] = full.terms.try_emplace(nk, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) full.terms.erase(it);
            }
        }
    }

    StateVector st = monomials_to_state(full, dim_cap);
    if (!w0.is_zero()) {
        st.exact->global_square *= w0.square;
        if (w0.sign < 0)
            for (auto& [i, rel] : st.exact->rel) rel = -rel;
        refresh_dense(st);
    }
    return st;
}

std::vector<int> solve_multiplicities(const std::vector<HalfInt>& spins) {
    if (spins.size() < 2)
        throw std::invalid_argument("solve_multiplicities: need at least two sites");
    std::vector<int> mult;
    mult.reserve(spins.size() - 1);
    int carry = 0;  // multiplicity of the bond entering the current site
    for (std::size_t j = 0; j + 1 < spins.size(); ++j) {
        int m = spins[j].twice - carry;
        if (m < 1)
            throw model_error("bond multiplicity between sites " + std::to_string(j) + " and " +
                              std::to_string(j + 1) + " would be " + std::to_string(m));
        mult.push_back(m);
        carry = m;
    }
    if (carry != spins.back().twice)
        throw model_error("no bond multiplicities saturate the final site: alternating spin sum "
                          "does not vanish");
    return mult;
}

}  // namespace vbslab
