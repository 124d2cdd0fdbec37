// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <variant>

#include "susyq/common.hpp"

namespace susyq {

/// Complex linear operator on the spinor lattice space. Storage is either a
/// dense matrix or a compressed sparse matrix assembled from triplets; binary
/// operations stay sparse when both operands are sparse and promote to dense
/// otherwise. A Hermitian flag travels with the operator where hermiticity is
/// guaranteed by construction.
class LatticeOperator {
  public:
    using Dense = Eigen::MatrixXcd;
    using Sparse = Eigen::SparseMatrix<cplx>;

    LatticeOperator() : storage_(Sparse(0, 0)) {}

    static LatticeOperator from_dense(Dense m, bool hermitian = false) {
        if (m.rows() != m.cols()) throw DimensionError("operator matrix must be square");
        LatticeOperator op;
        op.storage_ = std::move(m);
        op.hermitian_ = hermitian;
        return op;
    }

    static LatticeOperator from_sparse(Sparse m, bool hermitian = false) {
        if (m.rows() != m.cols()) throw DimensionError("operator matrix must be square");
        m.makeCompressed();
        LatticeOperator op;
        op.storage_ = std::move(m);
        op.hermitian_ = hermitian;
        return op;
    }

    static LatticeOperator identity(Eigen::Index dim) {
        Sparse m(dim, dim);
        m.setIdentity();
        return from_sparse(std::move(m), true);
    }

    static LatticeOperator zero(Eigen::Index dim) { return from_sparse(Sparse(dim, dim), true); }

    Eigen::Index dim() const {
        return std::visit([](const auto& m) { return m.rows(); }, storage_);
    }

    bool is_sparse() const { return std::holds_alternative<Sparse>(storage_); }
    bool hermitian_flag() const { return hermitian_; }

    LatticeOperator& set_hermitian(bool flag) {
        hermitian_ = flag;
        return *this;
    }

    const Sparse& sparse() const {
        if (!is_sparse()) throw Error("operator is stored dense");
        return std::get<Sparse>(storage_);
    }

    const Dense& dense() const {
        if (is_sparse()) throw Error("operator is stored sparse");
        return std::get<Dense>(storage_);
    }

    Dense to_dense() const {
        if (is_sparse()) return Dense(std::get<Sparse>(storage_));
        return std::get<Dense>(storage_);
    }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
        if (v.size() != dim()) throw DimensionError("vector length does not match operator");
        return std::visit([&](const auto& m) -> Eigen::VectorXcd { return m * v; }, storage_);
    }

    LatticeOperator adjoint() const {
        LatticeOperator out;
        if (is_sparse())
            out.storage_ = Sparse(std::get<Sparse>(storage_).adjoint());
        else
            out.storage_ = Dense(std::get<Dense>(storage_).adjoint());
        out.hermitian_ = hermitian_;
        return out;
    }

    double frobenius_norm() const {
        return std::visit([](const auto& m) { return m.norm(); }, storage_);
    }

    Eigen::Index stored_nonzeros() const {
        if (is_sparse()) return std::get<Sparse>(storage_).nonZeros();
        return dim() * dim();
    }

    friend LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b) {
        check_dims(a, b);
        LatticeOperator out;
        if (a.is_sparse() && b.is_sparse())
            out.storage_ = Sparse(a.sparse() + b.sparse());
        else
            out.storage_ = Dense(a.to_dense() + b.to_dense());
        out.hermitian_ = a.hermitian_ && b.hermitian_;
        return out;
    }

    friend LatticeOperator operator-(const LatticeOperator& a, const LatticeOperator& b) {
        check_dims(a, b);
        LatticeOperator out;
        if (a.is_sparse() && b.is_sparse())
            out.storage_ = Sparse(a.sparse() - b.sparse());
        else
            out.storage_ = Dense(a.to_dense() - b.to_dense());
        out.hermitian_ = a.hermitian_ && b.hermitian_;
        return out;
    }

    /// Operator composition a∘b.
    friend LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b) {
        check_dims(a, b);
        LatticeOperator out;
        if (a.is_sparse() && b.is_sparse())
            out.storage_ = Sparse(a.sparse() * b.sparse());
        else
            out.storage_ = Dense(a.to_dense() * b.to_dense());
        return out;
    }

    friend LatticeOperator operator*(cplx c, const LatticeOperator& a) {
        LatticeOperator out;
        if (a.is_sparse())
            out.storage_ = Sparse(c * a.sparse());
        else
            out.storage_ = Dense(c * a.to_dense());
        out.hermitian_ = a.hermitian_ && c.imag() == 0.0;
        return out;
    }

    friend LatticeOperator operator*(const LatticeOperator& a, cplx c) { return c * a; }

    /// Sparse-triplet text dump: header "dim N nnz K", then one
    /// "row col re im" line per (semantically) nonzero entry.
    void dump(std::ostream& os) const;
    static LatticeOperator read_dump(std::istream& is);

  private:
    static void check_dims(const LatticeOperator& a, const LatticeOperator& b) {
        if (a.dim() != b.dim())
            throw DimensionError("operator dimensions differ: " + std::to_string(a.dim()) +
                                 " vs " + std::to_string(b.dim()));
    }

    std::variant<Dense, Sparse> storage_;
    bool hermitian_ = false;
};

inline LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b) {
    return a * b - b * a;
}

inline LatticeOperator anticommutator(const LatticeOperator& a, const LatticeOperator& b) {
    LatticeOperator out = a * b + b * a;
    out.set_hermitian(a.hermitian_flag() && b.hermitian_flag());
    return out;
}

inline double frobenius_norm(const LatticeOperator& a) { return a.frobenius_norm(); }

inline double max_abs_entry(const LatticeOperator& a) {
    if (a.dim() == 0) return 0.0;
    if (a.is_sparse()) {
        double best = 0.0;
        const auto& m = a.sparse();
        for (int k = 0; k < m.outerSize(); ++k)
            for (LatticeOperator::Sparse::InnerIterator it(m, k); it; ++it)
                best = std::max(best, std::abs(it.value()));
        return best;
    }
    return a.dense().cwiseAbs().maxCoeff();
}

inline void LatticeOperator::dump(std::ostream& os) const {
    struct Entry {
        Eigen::Index row, col;
        cplx value;
    };
    std::vector<Entry> entries;
    if (is_sparse()) {
        const auto& m = sparse();
        for (int k = 0; k < m.outerSize(); ++k)
            for (Sparse::InnerIterator it(m, k); it; ++it)
                if (it.value() != cplx(0.0, 0.0)) entries.push_back({it.row(), it.col(), it.value()});
    } else {
        const auto& m = dense();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            for (Eigen::Index r = 0; r < m.rows(); ++r)
                if (m(r, c) != cplx(0.0, 0.0)) entries.push_back({r, c, m(r, c)});
    }
    os << "dim " << dim() << " nnz " << entries.size() << "\n";
    char line[96];
    for (const auto& e : entries) {
        std::snprintf(line, sizeof(line), "%lld %lld %.17g %.17g\n",
                      static_cast<long long>(e.row), static_cast<long long>(e.col),
                      e.value.real(), e.value.imag());
        os << line;
    }
}

inline LatticeOperator LatticeOperator::read_dump(std::istream& is) {
    std::string word;
    long long dim = 0, nnz = 0;
    if (!(is >> word) || word != "dim" || !(is >> dim) || !(is >> word) || word != "nnz" ||
        !(is >> nnz) || dim < 0 || nnz < 0)
        throw Error("malformed operator dump header");
    std::vector<Eigen::Triplet<cplx>> triplets;
    triplets.reserve(static_cast<std::size_t>(nnz));
    for (long long i = 0; i < nnz; ++i) {
        long long r = 0, c = 0;
        double re = 0.0, im = 0.0;
        if (!(is >> r >> c >> re >> im) || r < 0 || c < 0 || r >= dim || c >= dim)
            throw Error("malformed operator dump entry " + std::to_string(i));
        triplets.emplace_back(static_cast<int>(r), static_cast<int>(c), cplx(re, im));
    }
    Sparse m(dim, dim);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return from_sparse(std::move(m));
}

}  // namespace susyq
