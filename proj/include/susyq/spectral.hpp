// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "susyq/common.hpp"
#include "susyq/lattice_operator.hpp"

namespace susyq {

inline constexpr Eigen::Index kDenseEigenLimit = 8192;
inline constexpr double kDefaultClusterRelTol = 1e-8;
inline constexpr double kDefaultZeroTol = 1e-8;

/// All eigenvalues, ascending. Dense self-adjoint solve (Householder
/// tridiagonalization with implicit-shift QL/QR); the operator must carry the
/// Hermitian flag.
inline std::vector<double> eigen_spectrum(const LatticeOperator& op) {
    if (!op.hermitian_flag())
        throw Error("eigen_spectrum requires a Hermitian-flagged operator");
    if (op.dim() > kDenseEigenLimit)
        throw Error("dimension " + std::to_string(op.dim()) +
                    " exceeds the dense eigensolver limit " + std::to_string(kDenseEigenLimit));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.to_dense(),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

struct EnergyCluster {
    double energy = 0.0;  // mean of the member eigenvalues
    int multiplicity = 0;
    bool divisible = true;  // multiplicity % 2^[N/2] == 0, set by the law check
};

struct SpectrumReport {
    std::vector<double> eigenvalues;  // sorted ascending
    std::vector<EnergyCluster> clusters;
    int zero_modes = 0;
    int supercharge_count = 1;  // N used by the law check
    bool law_satisfied = false;
    double cluster_rel_tol = kDefaultClusterRelTol;
    double zero_tol = kDefaultZeroTol;
};

/// Splits eigenvalues into zero modes (|E| <= zero_tol * scale with scale =
/// max |E| floored at 1) and degenerate clusters grown greedily while the gap
/// between neighbours stays within cluster_rel_tol * scale.
inline SpectrumReport cluster_degeneracies(std::vector<double> eigenvalues,
                                           double cluster_rel_tol = kDefaultClusterRelTol,
                                           double zero_tol = kDefaultZeroTol) {
    if (!(cluster_rel_tol > 0.0) || !(zero_tol > 0.0))
        throw Error("cluster tolerances must be positive");
    std::sort(eigenvalues.begin(), eigenvalues.end());

    SpectrumReport report;
    report.cluster_rel_tol = cluster_rel_tol;
    report.zero_tol = zero_tol;
    report.eigenvalues = std::move(eigenvalues);
    if (report.eigenvalues.empty()) return report;

    double scale = 1.0;
    for (double e : report.eigenvalues) scale = std::max(scale, std::fabs(e));

    double sum = 0.0;
    int count = 0;
    double previous = 0.0;
    auto flush = [&]() {
        if (count > 0) report.clusters.push_back({sum / count, count, true});
        sum = 0.0;
        count = 0;
    };
    for (double e : report.eigenvalues) {
        if (std::fabs(e) <= zero_tol * scale) {
            ++report.zero_modes;
            continue;
        }
        if (count > 0 && e - previous > cluster_rel_tol * scale) flush();
        sum += e;
        ++count;
        previous = e;
    }
    flush();
    return report;
}

inline constexpr int degeneracy_divisor(int supercharge_count) {
    return 1 << (supercharge_count / 2);  // 2^[N/2]
}

/// The degeneracy law: every non-zero cluster multiplicity is divisible by
/// 2^[N/2]. Zero modes are exempt. Divisibility rather than equality is
/// asserted because tensor-product lattices stack accidental coincidences on
/// top of the guaranteed multiplets. Records the verdict in the report.
inline bool check_degeneracy_law(SpectrumReport& report, int supercharge_count) {
    if (supercharge_count < 1) throw Error("supercharge count must be at least 1");
    const int divisor = degeneracy_divisor(supercharge_count);
    report.supercharge_count = supercharge_count;
    bool all = true;
    for (auto& cluster : report.clusters) {
        cluster.divisible = cluster.multiplicity % divisor == 0;
        all = all && cluster.divisible;
    }
    report.law_satisfied = all;
    return all;
}

}  // namespace susyq
