// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "susyq/common.hpp"
#include "susyq/expr.hpp"
#include "susyq/grid.hpp"
#include "susyq/lattice_operator.hpp"

namespace susyq {

using SparseBlock = LatticeOperator::Sparse;

/// One-dimensional central-difference momentum block,
/// p = -i (S+ - S-) / (2 h), with zero fill (dirichlet) or wraparound
/// (periodic) at the walls. Antisymmetric stencil times -i, so Hermitian
/// entry for entry.
inline SparseBlock momentum_block_1d(int points, double spacing, Boundary bc) {
    const cplx up(0.0, -1.0 / (2.0 * spacing));
    const cplx down(0.0, 1.0 / (2.0 * spacing));
    std::vector<Eigen::Triplet<cplx>> triplets;
    triplets.reserve(2 * points);
    for (int n = 0; n < points; ++n) {
        int fwd = n + 1, bwd = n - 1;
        if (fwd < points)
            triplets.emplace_back(n, fwd, up);
        else if (bc == Boundary::Periodic)
            triplets.emplace_back(n, 0, up);
        if (bwd >= 0)
            triplets.emplace_back(n, bwd, down);
        else if (bc == Boundary::Periodic)
            triplets.emplace_back(n, points - 1, down);
    }
    SparseBlock m(points, points);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

/// D x D momentum along one axis, identity in the other two.
inline SparseBlock orbital_momentum(const Grid& g, Axis axis) {
    const int k = static_cast<int>(axis);
    const int M = g.points[k];
    const cplx up(0.0, -1.0 / (2.0 * g.spacing[k]));
    const cplx down(0.0, 1.0 / (2.0 * g.spacing[k]));
    std::vector<Eigen::Triplet<cplx>> triplets;
    triplets.reserve(2 * g.orbital_dim());
    for (int nx = 0; nx < g.points[0]; ++nx)
        for (int ny = 0; ny < g.points[1]; ++ny)
            for (int nz = 0; nz < g.points[2]; ++nz) {
                int site[3] = {nx, ny, nz};
                const int row = g.orbital_index(nx, ny, nz);
                for (int step : {+1, -1}) {
                    int m = site[k] + step;
                    if (m < 0 || m >= M) {
                        if (g.boundary != Boundary::Periodic) continue;
                        m = (m + M) % M;
                    }
                    int to[3] = {nx, ny, nz};
                    to[k] = m;
                    triplets.emplace_back(row, g.orbital_index(to[0], to[1], to[2]),
                                          step > 0 ? up : down);
                }
            }
    SparseBlock m(g.orbital_dim(), g.orbital_dim());
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

/// Diagonal multiplication block with entries e(x_n, y_m, z_l).
inline SparseBlock orbital_multiplication(const Grid& g, const Expr& e) {
    std::vector<Eigen::Triplet<cplx>> triplets;
    triplets.reserve(g.orbital_dim());
    for (int nx = 0; nx < g.points[0]; ++nx)
        for (int ny = 0; ny < g.points[1]; ++ny)
            for (int nz = 0; nz < g.points[2]; ++nz) {
                const auto p = g.site(nx, ny, nz);
                double v;
                try {
                    v = evaluate(e, p);
                } catch (const DomainError& err) {
                    throw DomainError(std::string(err.what()) + " at grid point (" +
                                      detail::format_double(p[0]) + ", " +
                                      detail::format_double(p[1]) + ", " +
                                      detail::format_double(p[2]) + ")");
                }
                if (v != 0.0)
                    triplets.emplace_back(g.orbital_index(nx, ny, nz),
                                          g.orbital_index(nx, ny, nz), cplx(v, 0.0));
            }
    SparseBlock m(g.orbital_dim(), g.orbital_dim());
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

/// Point symmetries of the lattice that are exact index permutations:
/// axis reflections I_k, rotations by pi about an axis, and full inversion I.
struct OrbitalSymmetry {
    enum class Kind { Reflection, RotationPi, FullInversion };

    Kind kind = Kind::Reflection;
    Axis axis = Axis::X;  // ignored for full inversion

    static OrbitalSymmetry reflection(Axis a) { return {Kind::Reflection, a}; }
    static OrbitalSymmetry rotation_pi(Axis a) { return {Kind::RotationPi, a}; }
    static OrbitalSymmetry full_inversion() { return {Kind::FullInversion, Axis::X}; }

    /// Which coordinates get negated.
    std::array<bool, 3> flips() const {
        std::array<bool, 3> f{false, false, false};
        switch (kind) {
            case Kind::Reflection:
                f[static_cast<int>(axis)] = true;
                break;
            case Kind::RotationPi:
                f = {true, true, true};
                f[static_cast<int>(axis)] = false;
                break;
            case Kind::FullInversion:
                f = {true, true, true};
                break;
        }
        return f;
    }

    std::string name() const {
        switch (kind) {
            case Kind::Reflection: return std::string("I_") + axis_name(axis);
            case Kind::RotationPi: return std::string("R_") + axis_name(axis);
            case Kind::FullInversion: return "I";
        }
        return "?";
    }

    friend bool operator==(const OrbitalSymmetry& a, const OrbitalSymmetry& b) {
        if (a.kind != b.kind) return false;
        return a.kind == Kind::FullInversion || a.axis == b.axis;
    }
};

inline SparseBlock orbital_symmetry(const Grid& g, const OrbitalSymmetry& sym) {
    const auto flips = sym.flips();
    std::vector<Eigen::Triplet<cplx>> triplets;
    triplets.reserve(g.orbital_dim());
    for (int nx = 0; nx < g.points[0]; ++nx)
        for (int ny = 0; ny < g.points[1]; ++ny)
            for (int nz = 0; nz < g.points[2]; ++nz) {
                int from[3] = {nx, ny, nz};
                int to[3];
                for (int k = 0; k < 3; ++k)
                    to[k] = flips[k] ? g.points[k] - 1 - from[k] : from[k];
                triplets.emplace_back(g.orbital_index(from[0], from[1], from[2]),
                                      g.orbital_index(to[0], to[1], to[2]), cplx(1.0, 0.0));
            }
    SparseBlock m(g.orbital_dim(), g.orbital_dim());
    m.setFromTriplets(triplets.begin(), triplets.end());
    return m;
}

inline Eigen::Matrix2cd pauli(int i) {
    Eigen::Matrix2cd s;
    switch (i) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, cplx(0, -1), cplx(0, 1), 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw Error("pauli index must be 1, 2 or 3");
    }
    return s;
}

/// Tensor product (spin 2x2) x (orbital D x D) in spin-major layout: index
/// s * D + n for spin s and orbital site n.
inline LatticeOperator kron_spin_orbital(const Eigen::Matrix2cd& spin, const SparseBlock& orbital,
                                         bool hermitian = false) {
    const Eigen::Index D = orbital.rows();
    std::vector<Eigen::Triplet<cplx>> triplets;
    triplets.reserve(4 * orbital.nonZeros());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const cplx s = spin(a, b);
            if (s == cplx(0.0, 0.0)) continue;
            for (int k = 0; k < orbital.outerSize(); ++k)
                for (SparseBlock::InnerIterator it(orbital, k); it; ++it)
                    triplets.emplace_back(a * D + it.row(), b * D + it.col(), s * it.value());
        }
    LatticeOperator::Sparse m(2 * D, 2 * D);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return LatticeOperator::from_sparse(std::move(m), hermitian);
}

// Full-space builders: orbital action tensored with spin identity (or the
// requested spin matrix for embed_spin). All return sparse operators of
// dimension 2 D.

inline LatticeOperator momentum_op(const Grid& g, Axis axis) {
    return kron_spin_orbital(Eigen::Matrix2cd::Identity(), orbital_momentum(g, axis), true);
}

inline LatticeOperator multiplication_op(const Grid& g, const Expr& e) {
    return kron_spin_orbital(Eigen::Matrix2cd::Identity(), orbital_multiplication(g, e), true);
}

inline LatticeOperator symmetry_op(const Grid& g, const OrbitalSymmetry& sym) {
    return kron_spin_orbital(Eigen::Matrix2cd::Identity(), orbital_symmetry(g, sym), true);
}

inline LatticeOperator embed_spin(const Eigen::Matrix2cd& spin, const Grid& g) {
    SparseBlock id(g.orbital_dim(), g.orbital_dim());
    id.setIdentity();
    const bool herm = spin.isApprox(spin.adjoint());
    return kron_spin_orbital(spin, id, herm);
}

}  // namespace susyq
