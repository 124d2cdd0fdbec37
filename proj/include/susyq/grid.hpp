// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <string>

#include "susyq/common.hpp"

namespace susyq {

enum class Boundary { Dirichlet, Periodic };

inline constexpr const char* boundary_name(Boundary b) {
    return b == Boundary::Dirichlet ? "dirichlet" : "periodic";
}

inline Boundary boundary_from_name(const std::string& s) {
    if (s == "dirichlet") return Boundary::Dirichlet;
    if (s == "periodic") return Boundary::Periodic;
    throw Error("unknown boundary condition '" + s + "'");
}

/// Symmetric lattice: coordinates x_n = (n - (M_k - 1)/2) h_k. M_k is odd so
/// the origin is a grid point and every axis reflection is an exact index
/// permutation.
struct Grid {
    std::array<int, 3> points{7, 7, 7};
    std::array<double, 3> spacing{0.5, 0.5, 0.5};
    Boundary boundary = Boundary::Dirichlet;

    static Grid make(std::array<int, 3> points, std::array<double, 3> spacing,
                     Boundary bc = Boundary::Dirichlet) {
        Grid g{points, spacing, bc};
        g.validate();
        return g;
    }

    static Grid cubic(int m, double h, Boundary bc = Boundary::Dirichlet) {
        return make({m, m, m}, {h, h, h}, bc);
    }

    void validate() const {
        for (int k = 0; k < 3; ++k) {
            if (points[k] < 3 || points[k] % 2 == 0)
                throw Error("grid points per axis must be odd and >= 3, got " +
                            std::to_string(points[k]));
            if (!(spacing[k] > 0.0) || !std::isfinite(spacing[k]))
                throw Error("grid spacing must be positive and finite");
        }
    }

    int orbital_dim() const { return points[0] * points[1] * points[2]; }
    int total_dim() const { return 2 * orbital_dim(); }

    double coord(Axis axis, int n) const {
        int k = static_cast<int>(axis);
        return (n - (points[k] - 1) / 2) * spacing[k];
    }

    std::array<double, 3> site(int nx, int ny, int nz) const {
        return {coord(Axis::X, nx), coord(Axis::Y, ny), coord(Axis::Z, nz)};
    }

    // x-major site ordering
    int orbital_index(int nx, int ny, int nz) const {
        return (nx * points[1] + ny) * points[2] + nz;
    }

    double half_extent(Axis axis) const {
        int k = static_cast<int>(axis);
        return (points[k] - 1) / 2 * spacing[k];
    }

    double min_half_extent() const {
        return std::min({half_extent(Axis::X), half_extent(Axis::Y), half_extent(Axis::Z)});
    }
};

}  // namespace susyq
