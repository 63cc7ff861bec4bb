#pragma once

#include <span>
#include <vector>

#include "curvcheck/errors.hpp"

namespace curvcheck {

enum class IndexDir { Raise, Lower };

/// Dense covariant tensor of arbitrary rank over an n-dimensional chart,
/// row-major entries.  Rank 0 holds a single scalar entry.
class DenseTensor {
public:
    DenseTensor() : rank_(0), dim_(1), e_(1, 0.0) {}
    DenseTensor(int rank, int dim);

    static DenseTensor scalar(double v);

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    std::size_t size() const { return e_.size(); }

    double& operator[](std::size_t flat) { return e_[flat]; }
    double operator[](std::size_t flat) const { return e_[flat]; }

    std::size_t flat(std::span<const int> idx) const;
    double& at(std::span<const int> idx) { return e_[flat(idx)]; }
    double at(std::span<const int> idx) const { return e_[flat(idx)]; }
    double& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx)); }
    double at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx)); }

    double max_abs() const;

    DenseTensor operator+(const DenseTensor& o) const;
    DenseTensor operator-(const DenseTensor& o) const;
    DenseTensor operator*(double s) const;

private:
    int rank_;
    int dim_;
    std::vector<double> e_;
};

/// Visits every index tuple of the given rank/dim in row-major order.
template <class F>
void for_each_index(int rank, int dim, F&& f) {
    std::vector<int> idx(static_cast<std::size_t>(rank < 0 ? 0 : rank), 0);
    if (rank <= 0) {
        f(idx);
        return;
    }
    for (;;) {
        f(idx);
        int k = rank - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == dim) {
            idx[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
}

/// Symmetric n-by-n matrix; both triangles are stored and kept equal.
class SymMatrix {
public:
    SymMatrix() : n_(0) {}
    explicit SymMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0.0) {}

    static SymMatrix identity(int n);
    /// Builds from row-major entries; rejects input asymmetric beyond `tol`.
    static SymMatrix from_rows(int n, const std::vector<double>& rows, double tol = 1e-10);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        e_[static_cast<std::size_t>(i) * n_ + j] = v;
        e_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    double max_abs() const;
    double frobenius() const;
    double trace() const;

    DenseTensor to_tensor() const;
    static SymMatrix from_tensor(const DenseTensor& t, double tol = 1e-9);

    SymMatrix operator+(const SymMatrix& o) const;
    SymMatrix operator-(const SymMatrix& o) const;
    SymMatrix operator*(double s) const;

private:
    int n_;
    std::vector<double> e_;
};

/// Cholesky factorization A = L L^T of a positive definite matrix.
class Cholesky {
public:
    static Cholesky factor(const SymMatrix& a);

    int dim() const { return n_; }
    double l(int i, int j) const { return l_[static_cast<std::size_t>(i) * n_ + j]; }

    std::vector<double> solve(const std::vector<double>& b) const;
    std::vector<double> solve_lower(const std::vector<double>& b) const;
    std::vector<double> solve_lower_t(const std::vector<double>& b) const;
    SymMatrix inverse() const;

private:
    int n_ = 0;
    std::vector<double> l_;
};

struct EigenSystem {
    std::vector<double> values;                 ///< ascending
    std::vector<std::vector<double>> vectors;   ///< vectors[k] pairs with values[k]
};

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations
/// (off-diagonal Frobenius threshold 1e-12 relative, 100-sweep cap).
/// Eigenvector signs follow a lexicographic convention: the first component
/// larger than 1e-12 in magnitude is made positive.
EigenSystem symmetric_eigen(const SymMatrix& m);

/// Solves A v = lambda G v for symmetric A and positive definite G.
/// Returned vectors are G-orthonormal.
EigenSystem generalized_eigen(const SymMatrix& a, const SymMatrix& g);

/// Averages a tensor over all permutations of its slots.
DenseTensor symmetrize(const DenseTensor& t);

/// Contracts one slot with g^{ij} (raise) or g_{ij} (lower).
DenseTensor adjust_index(const DenseTensor& t, int slot, const SymMatrix& metric, IndexDir dir);

/// Raises every slot of a covariant tensor.
DenseTensor raise_all(const DenseTensor& t, const SymMatrix& metric);

/// g-trace over the first two slots of a covariant tensor.
DenseTensor trace_first_two(const DenseTensor& t, const SymMatrix& metric);

/// Full metric contraction g(T, S) of two covariant tensors of equal shape.
double inner_product(const DenseTensor& t, const DenseTensor& s, const SymMatrix& metric);

struct TraceAndNorm {
    DenseTensor trace;  ///< g-trace of T over its first two slots
    double inner;       ///< g(T, S)
};

/// Combined trace/inner-product helper for equally shaped covariant tensors.
TraceAndNorm trace_and_norm(const DenseTensor& t, const DenseTensor& s, const SymMatrix& metric);

inline double tensor_norm_sq(const DenseTensor& t, const SymMatrix& metric) {
    return inner_product(t, t, metric);
}

}  // namespace curvcheck
