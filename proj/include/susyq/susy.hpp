// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "susyq/field.hpp"
#include "susyq/grid.hpp"
#include "susyq/lattice_operator.hpp"
#include "susyq/operators.hpp"

namespace susyq {

inline constexpr double kDefaultAdmissibilityTol = 1e-10;
inline constexpr double kDefaultAlgebraTol = 1e-10;

/// Base supercharge Q0 = sum_i sigma_i (x) (p_i - A_i) in units with
/// hbar = 1, e/c = 1, 2m = 1 and gyromagnetic ratio 2, so H = Q0^2 is the
/// Pauli Hamiltonian with no prefactor.
inline LatticeOperator build_q0(const Grid& g, const VectorPotentialSpec& field) {
    LatticeOperator q0 = LatticeOperator::zero(g.total_dim());
    for (int i = 0; i < 3; ++i) {
        SparseBlock pi = orbital_momentum(g, axis_from_index(i)) -
                         orbital_multiplication(g, field.components[i]);
        q0 = q0 + kron_spin_orbital(pauli(i + 1), pi, true);
    }
    q0.set_hermitian(true);
    return q0;
}

/// H = Q0 * Q0, never discretized independently; every superalgebra relation
/// is checked against this matrix square.
inline LatticeOperator build_hamiltonian(const LatticeOperator& q0) {
    LatticeOperator h = q0 * q0;
    h.set_hermitian(true);
    return h;
}

/// A prospective involution sigma_i (x) G together with its certification
/// residuals. involution_residual is the absolute Frobenius norm of T^2 - Id
/// (exactly zero for any honest permutation (x) Pauli candidate);
/// q0_residual is ||{T, Q0}||_F / ||Q0||_F, filled in by admissibility().
struct CandidateT {
    int spin = 1;  // sigma index, 1..3
    OrbitalSymmetry orbital{};
    LatticeOperator op;
    double involution_residual = 0.0;
    double q0_residual = std::numeric_limits<double>::quiet_NaN();
    bool admissible = false;

    std::string label() const {
        return "(sigma_" + std::to_string(spin) + ", " + orbital.name() + ")";
    }
};

inline double involution_residual_of(const LatticeOperator& op) {
    return frobenius_norm(op * op - LatticeOperator::identity(op.dim()));
}

inline CandidateT make_candidate(const Grid& g, int spin, const OrbitalSymmetry& sym) {
    CandidateT c;
    c.spin = spin;
    c.orbital = sym;
    c.op = kron_spin_orbital(pauli(spin), orbital_symmetry(g, sym), true);
    c.involution_residual = involution_residual_of(c.op);
    return c;
}

inline const std::vector<OrbitalSymmetry>& candidate_symmetries() {
    static const std::vector<OrbitalSymmetry> kinds = {
        OrbitalSymmetry::reflection(Axis::X),  OrbitalSymmetry::reflection(Axis::Y),
        OrbitalSymmetry::reflection(Axis::Z),  OrbitalSymmetry::rotation_pi(Axis::X),
        OrbitalSymmetry::rotation_pi(Axis::Y), OrbitalSymmetry::rotation_pi(Axis::Z),
        OrbitalSymmetry::full_inversion()};
    return kinds;
}

/// All 21 candidates {sigma_1, sigma_2, sigma_3} x {I_x, I_y, I_z, R_x, R_y,
/// R_z, I} in deterministic (spin-major) order.
inline std::vector<CandidateT> enumerate_candidates(const Grid& g) {
    std::vector<CandidateT> out;
    out.reserve(21);
    for (int spin = 1; spin <= 3; ++spin)
        for (const auto& sym : candidate_symmetries()) out.push_back(make_candidate(g, spin, sym));
    return out;
}

struct Admissibility {
    bool pass = false;
    double residual = 0.0;
};

/// T is admissible when it anticommutes with Q0: residual
/// ||{T, Q0}||_F / ||Q0||_F within tol.
inline Admissibility admissibility(const CandidateT& c, const LatticeOperator& q0,
                                   double tol = kDefaultAdmissibilityTol) {
    double nq = frobenius_norm(q0);
    double residual = frobenius_norm(anticommutator(c.op, q0)) / std::max(nq, 1e-300);
    return {residual <= tol, residual};
}

/// Enumerates, tests and annotates all candidates against q0.
inline std::vector<CandidateT> certify_candidates(const Grid& g, const LatticeOperator& q0,
                                                  double tol = kDefaultAdmissibilityTol) {
    std::vector<CandidateT> out = enumerate_candidates(g);
    for (auto& c : out) {
        Admissibility a = admissibility(c, q0, tol);
        c.q0_residual = a.residual;
        c.admissible = a.pass;
    }
    return out;
}

namespace detail {

// Deterministic preference order: reflections before rotations before full
// inversion, then (spin, axis) lexicographic.
inline std::tuple<int, int, int> candidate_key(const CandidateT& c) {
    int kind_rank = 0;
    switch (c.orbital.kind) {
        case OrbitalSymmetry::Kind::Reflection: kind_rank = 0; break;
        case OrbitalSymmetry::Kind::RotationPi: kind_rank = 1; break;
        case OrbitalSymmetry::Kind::FullInversion: kind_rank = 2; break;
    }
    int axis = c.orbital.kind == OrbitalSymmetry::Kind::FullInversion
                   ? 0
                   : static_cast<int>(c.orbital.axis);
    return {kind_rank, c.spin, axis};
}

}  // namespace detail

/// Maximum-cardinality subset of pairwise anticommuting candidates, found by
/// exhaustive subset search (at most 21 inputs). The pair test is
/// ||{T, T'}||_F normalized by 2 sqrt(dim), so failures are order one. Ties
/// between subsets of equal size resolve by the candidate preference order,
/// which also makes the result independent of input ordering.
inline std::vector<CandidateT> max_compatible_set(const std::vector<CandidateT>& candidates,
                                                  double tol = kDefaultAdmissibilityTol) {
    const int k = static_cast<int>(candidates.size());
    if (k == 0) return {};
    if (k > 21) throw Error("compatibility search expects at most 21 candidates");

    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return detail::candidate_key(candidates[a]) < detail::candidate_key(candidates[b]);
    });

    std::vector<std::uint32_t> compat(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const auto& ta = candidates[order[a]];
            const auto& tb = candidates[order[b]];
            double norm = 2.0 * std::sqrt(static_cast<double>(ta.op.dim()));
            double r = frobenius_norm(anticommutator(ta.op, tb.op)) / norm;
            if (r <= tol) {
                compat[a] |= 1u << b;
                compat[b] |= 1u << a;
            }
        }

    // Lexicographic comparison of the ascending index sequences two masks
    // select from the preference-sorted candidates.
    auto lex_less = [](std::uint32_t a, std::uint32_t b) {
        while (a != 0 && b != 0) {
            int la = std::countr_zero(a), lb = std::countr_zero(b);
            if (la != lb) return la < lb;
            a &= a - 1;
            b &= b - 1;
        }
        return false;  // equal length inputs only
    };

    std::uint32_t best_mask = 0;
    int best_size = 0;
    const std::uint32_t limit = 1u << k;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        int size = std::popcount(mask);
        if (size < best_size) continue;
        if (size == best_size && !lex_less(mask, best_mask)) continue;
        bool ok = true;
        for (std::uint32_t rest = mask; rest != 0 && ok;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if ((mask & ~compat[i] & ~(1u << i)) != 0) ok = false;
        }
        if (ok) {
            best_mask = mask;
            best_size = size;
        }
    }

    std::vector<CandidateT> out;
    for (int i = 0; i < k; ++i)
        if (best_mask & (1u << i)) out.push_back(candidates[order[i]]);
    return out;
}

/// The assembled structure: Q0, the involutions T_j, the derived supercharges
/// Q_j = i T_j Q0, and H = Q0^2. N counts Q0 itself.
struct SuperchargeSet {
    LatticeOperator q0;
    std::vector<CandidateT> ts;
    std::vector<LatticeOperator> qs;
    LatticeOperator hamiltonian;
    int supercharge_count = 1;
};

inline SuperchargeSet assemble_supercharges(const LatticeOperator& q0,
                                            std::vector<CandidateT> ts) {
    SuperchargeSet set;
    set.q0 = q0;
    set.hamiltonian = build_hamiltonian(q0);
    set.ts = std::move(ts);
    set.qs.reserve(set.ts.size());
    for (const auto& t : set.ts) {
        LatticeOperator q = cplx(0.0, 1.0) * (t.op * q0);
        q.set_hermitian(true);  // (i T Q0)^+ = i T Q0 given {T, Q0} = 0
        set.qs.push_back(std::move(q));
    }
    set.supercharge_count = static_cast<int>(set.ts.size()) + 1;
    return set;
}

struct PairResidual {
    int i = 0, j = 0;
    double value = 0.0;
};

struct TInfo {
    int spin = 1;
    std::string orbital;
    double residual_q0 = 0.0;
};

/// Numeric certification of the N-extended superalgebra. All residuals are
/// relative Frobenius norms; pass means every one of them is within tol.
struct AlgebraReport {
    int supercharge_count = 1;
    double tol = kDefaultAlgebraTol;
    std::vector<TInfo> ts;
    std::vector<PairResidual> supercharge_pairs;   // ||{Q_i,Q_j} - 2 d_ij H|| / ||H||
    std::vector<PairResidual> involution_pairs;    // ||{T_i,T_j} - 2 d_ij Id|| / ||Id||
    std::vector<double> q0_anticommutators;        // ||{T_i, Q0}|| / ||Q0||
    std::vector<double> hamiltonian_t_commutators; // ||[H, T_i]|| / ||H||
    std::vector<double> hamiltonian_q_commutators; // ||[H, Q_i]|| / ||H||
    bool pass = false;

    double max_residual() const {
        double m = 0.0;
        for (const auto& p : supercharge_pairs) m = std::max(m, p.value);
        for (const auto& p : involution_pairs) m = std::max(m, p.value);
        for (double v : q0_anticommutators) m = std::max(m, v);
        for (double v : hamiltonian_t_commutators) m = std::max(m, v);
        for (double v : hamiltonian_q_commutators) m = std::max(m, v);
        return m;
    }
};

inline AlgebraReport verify_superalgebra(const SuperchargeSet& set,
                                         double tol = kDefaultAlgebraTol) {
    AlgebraReport report;
    report.supercharge_count = set.supercharge_count;
    report.tol = tol;

    const LatticeOperator& h = set.hamiltonian;
    const double nh = std::max(frobenius_norm(h), 1e-300);
    const double nq0 = std::max(frobenius_norm(set.q0), 1e-300);
    const double nid = std::sqrt(static_cast<double>(set.q0.dim()));

    std::vector<const LatticeOperator*> charges;
    charges.push_back(&set.q0);
    for (const auto& q : set.qs) charges.push_back(&q);
    const int n = static_cast<int>(charges.size());

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            LatticeOperator lhs = anticommutator(*charges[i], *charges[j]);
            if (i == j) lhs = lhs - 2.0 * h;
            report.supercharge_pairs.push_back({i, j, frobenius_norm(lhs) / nh});
        }

    const int nt = static_cast<int>(set.ts.size());
    for (int i = 0; i < nt; ++i)
        for (int j = i; j < nt; ++j) {
            LatticeOperator lhs = anticommutator(set.ts[i].op, set.ts[j].op);
            if (i == j) lhs = lhs - 2.0 * LatticeOperator::identity(set.q0.dim());
            report.involution_pairs.push_back({i, j, frobenius_norm(lhs) / nid});
        }

    for (const auto& t : set.ts) {
        report.q0_anticommutators.push_back(frobenius_norm(anticommutator(t.op, set.q0)) / nq0);
        report.hamiltonian_t_commutators.push_back(frobenius_norm(commutator(h, t.op)) / nh);
        report.ts.push_back({t.spin, t.orbital.name(), report.q0_anticommutators.back()});
    }
    for (int i = 0; i < n; ++i)
        report.hamiltonian_q_commutators.push_back(frobenius_norm(commutator(h, *charges[i])) / nh);

    report.pass = report.max_residual() <= tol;
    return report;
}

/// Normalized Gaussian spinor centred on the origin. Width defaults to about
/// a quarter of the box half extent so the state is both resolved on coarse
/// grids and negligible at the walls.
inline Eigen::VectorXcd gaussian_state(const Grid& g, double sigma) {
    if (!(sigma > 0.0)) throw Error("gaussian width must be positive");
    const int D = g.orbital_dim();
    Eigen::VectorXcd v(2 * D);
    for (int nx = 0; nx < g.points[0]; ++nx)
        for (int ny = 0; ny < g.points[1]; ++ny)
            for (int nz = 0; nz < g.points[2]; ++nz) {
                const auto p = g.site(nx, ny, nz);
                const double a = std::exp(-(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) /
                                          (2.0 * sigma * sigma));
                const int n = g.orbital_index(nx, ny, nz);
                v[n] = a;
                v[D + n] = a;
            }
    v /= v.norm();
    return v;
}

inline double default_gaussian_width(const Grid& g) { return g.min_half_extent() * 4.0 / 15.0; }

/// Discretization diagnostic against the minimally coupled form
/// H_pauli = (p - A)^2 - sigma . B with B = curl A taken by central
/// differences of the component expressions at +- h steps. Returns
/// ||(Q0^2 - H_pauli) state||_2; second-order stencils make it O(h^2) on a
/// fixed box.
inline double pauli_consistency_check(const Grid& g, const VectorPotentialSpec& field,
                                      const Eigen::VectorXcd& state) {
    if (state.size() != g.total_dim())
        throw DimensionError("state length does not match the grid");
    LatticeOperator h = build_hamiltonian(build_q0(g, field));

    LatticeOperator h_pauli = LatticeOperator::zero(g.total_dim());
    for (int k = 0; k < 3; ++k) {
        SparseBlock pi = orbital_momentum(g, axis_from_index(k)) -
                         orbital_multiplication(g, field.components[k]);
        h_pauli = h_pauli + kron_spin_orbital(Eigen::Matrix2cd::Identity(), SparseBlock(pi * pi));
    }
    // B_l = dA_b/dx_a - dA_a/dx_b for cyclic (a, b, l), sampled pointwise.
    for (int l = 0; l < 3; ++l) {
        const int a = (l + 1) % 3, b = (l + 2) % 3;
        std::vector<Eigen::Triplet<cplx>> triplets;
        for (int nx = 0; nx < g.points[0]; ++nx)
            for (int ny = 0; ny < g.points[1]; ++ny)
                for (int nz = 0; nz < g.points[2]; ++nz) {
                    auto pa_plus = g.site(nx, ny, nz), pa_minus = pa_plus;
                    pa_plus[a] += g.spacing[a];
                    pa_minus[a] -= g.spacing[a];
                    auto pb_plus = g.site(nx, ny, nz), pb_minus = pb_plus;
                    pb_plus[b] += g.spacing[b];
                    pb_minus[b] -= g.spacing[b];
                    const double curl =
                        (evaluate(field.components[b], pa_plus) -
                         evaluate(field.components[b], pa_minus)) /
                            (2.0 * g.spacing[a]) -
                        (evaluate(field.components[a], pb_plus) -
                         evaluate(field.components[a], pb_minus)) /
                            (2.0 * g.spacing[b]);
                    if (curl != 0.0) {
                        const int n = g.orbital_index(nx, ny, nz);
                        triplets.emplace_back(n, n, cplx(curl, 0.0));
                    }
                }
        SparseBlock bl(g.orbital_dim(), g.orbital_dim());
        bl.setFromTriplets(triplets.begin(), triplets.end());
        h_pauli = h_pauli - kron_spin_orbital(pauli(l + 1), bl);
    }
    return (h.apply(state) - h_pauli.apply(state)).norm();
}

inline double pauli_consistency_check(const Grid& g, const VectorPotentialSpec& field) {
    return pauli_consistency_check(g, field, gaussian_state(g, default_gaussian_width(g)));
}

/// Full certification pipeline: Q0, candidate search, maximal compatible set,
/// assembly and superalgebra verification.
struct CertifiedStructure {
    std::vector<CandidateT> candidates;  // all 21, annotated
    SuperchargeSet set;
    AlgebraReport report;
};

inline CertifiedStructure certify(const Grid& g, const VectorPotentialSpec& field,
                                  double admissibility_tol = kDefaultAdmissibilityTol,
                                  double algebra_tol = kDefaultAlgebraTol) {
    CertifiedStructure out;
    LatticeOperator q0 = build_q0(g, field);
    out.candidates = certify_candidates(g, q0, admissibility_tol);
    std::vector<CandidateT> passing;
    for (const auto& c : out.candidates)
        if (c.admissible) passing.push_back(c);
    out.set = assemble_supercharges(q0, max_compatible_set(passing, admissibility_tol));
    out.report = verify_superalgebra(out.set, algebra_tol);
    return out;
}

}  // namespace susyq
