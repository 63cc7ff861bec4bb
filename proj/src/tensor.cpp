#include "curvcheck/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace curvcheck {

namespace {

std::size_t pow_size(int dim, int rank) {
    std::size_t s = 1;
    for (int k = 0; k < rank; ++k) s *= static_cast<std::size_t>(dim);
    return s;
}

}  // namespace

DenseTensor::DenseTensor(int rank, int dim) : rank_(rank), dim_(dim) {
    if (rank < 0 || (rank > 0 && dim <= 0)) {
        throw ShapeError("tensor rank " + std::to_string(rank) + ", dim " + std::to_string(dim));
    }
    if (rank == 0) dim_ = 1;
    e_.assign(pow_size(dim_, rank_), 0.0);
}

DenseTensor DenseTensor::scalar(double v) {
    DenseTensor t;
    t.e_[0] = v;
    return t;
}

std::size_t DenseTensor::flat(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != rank_) {
        throw ShapeError("index tuple of length " + std::to_string(idx.size()) +
                         " against rank " + std::to_string(rank_));
    }
    std::size_t f = 0;
    for (int k = 0; k < rank_; ++k) {
        int i = idx[static_cast<std::size_t>(k)];
        if (i < 0 || i >= dim_) throw ShapeError("index out of range");
        f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return f;
}

double DenseTensor::max_abs() const {
    double m = 0.0;
    for (double v : e_) m = std::max(m, std::fabs(v));
    return m;
}

DenseTensor DenseTensor::operator+(const DenseTensor& o) const {
    if (rank_ != o.rank_ || dim_ != o.dim_) throw ShapeError("tensor shape mismatch in +");
    DenseTensor r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

DenseTensor DenseTensor::operator-(const DenseTensor& o) const {
    if (rank_ != o.rank_ || dim_ != o.dim_) throw ShapeError("tensor shape mismatch in -");
    DenseTensor r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

DenseTensor DenseTensor::operator*(double s) const {
    DenseTensor r = *this;
    for (double& v : r.e_) v *= s;
    return r;
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::from_rows(int n, const std::vector<double>& rows, double tol) {
    if (static_cast<std::size_t>(n) * n != rows.size()) {
        throw ShapeError("row data size does not match dimension");
    }
    double asym = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            asym = std::max(asym, std::fabs(rows[static_cast<std::size_t>(i) * n + j] -
                                            rows[static_cast<std::size_t>(j) * n + i]));
        }
    }
    if (asym > tol) {
        throw AsymmetricMatrixError("matrix asymmetry " + std::to_string(asym) +
                                    " exceeds tolerance");
    }
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            m.set(i, j, 0.5 * (rows[static_cast<std::size_t>(i) * n + j] +
                               rows[static_cast<std::size_t>(j) * n + i]));
        }
    }
    return m;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : e_) m = std::max(m, std::fabs(v));
    return m;
}

double SymMatrix::frobenius() const {
    double s = 0.0;
    for (double v : e_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
}

DenseTensor SymMatrix::to_tensor() const {
    DenseTensor t(2, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.at({i, j}) = (*this)(i, j);
    return t;
}

SymMatrix SymMatrix::from_tensor(const DenseTensor& t, double tol) {
    if (t.rank() != 2) throw ShapeError("rank-2 tensor required");
    int n = t.dim();
    double asym = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) asym = std::max(asym, std::fabs(t.at({i, j}) - t.at({j, i})));
    if (asym > tol) {
        throw AsymmetricMatrixError("rank-2 tensor asymmetry " + std::to_string(asym));
    }
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, 0.5 * (t.at({i, j}) + t.at({j, i})));
    return m;
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
    if (n_ != o.n_) throw ShapeError("matrix dim mismatch in +");
    SymMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
    if (n_ != o.n_) throw ShapeError("matrix dim mismatch in -");
    SymMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

SymMatrix SymMatrix::operator*(double s) const {
    SymMatrix r = *this;
    for (double& v : r.e_) v *= s;
    return r;
}

Cholesky Cholesky::factor(const SymMatrix& a) {
    int n = a.dim();
    Cholesky c;
    c.n_ = n;
    c.l_.assign(static_cast<std::size_t>(n) * n, 0.0);
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::fabs(a(i, i)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= c.l(i, k) * c.l(j, k);
            if (i == j) {
                if (!(s > 1e-13 * std::max(1.0, max_diag))) {
                    throw SingularMetricError("matrix not positive definite (pivot " +
                                              std::to_string(s) + ")");
                }
                c.l_[static_cast<std::size_t>(i) * n + j] = std::sqrt(s);
            } else {
                c.l_[static_cast<std::size_t>(i) * n + j] = s / c.l(j, j);
            }
        }
    }
    return c;
}

std::vector<double> Cholesky::solve_lower(const std::vector<double>& b) const {
    std::vector<double> x(b);
    for (int i = 0; i < n_; ++i) {
        double s = x[static_cast<std::size_t>(i)];
        for (int k = 0; k < i; ++k) s -= l(i, k) * x[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(i)] = s / l(i, i);
    }
    return x;
}

std::vector<double> Cholesky::solve_lower_t(const std::vector<double>& b) const {
    std::vector<double> x(b);
    for (int i = n_ - 1; i >= 0; --i) {
        double s = x[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < n_; ++k) s -= l(k, i) * x[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(i)] = s / l(i, i);
    }
    return x;
}

std::vector<double> Cholesky::solve(const std::vector<double>& b) const {
    return solve_lower_t(solve_lower(b));
}

SymMatrix Cholesky::inverse() const {
    SymMatrix inv(n_);
    std::vector<double> e(static_cast<std::size_t>(n_), 0.0);
    for (int j = 0; j < n_; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[static_cast<std::size_t>(j)] = 1.0;
        std::vector<double> col = solve(e);
        for (int i = j; i < n_; ++i) inv.set(i, j, col[static_cast<std::size_t>(i)]);
    }
    return inv;
}

namespace {

void apply_sign_convention(std::vector<double>& v) {
    for (double c : v) {
        if (std::fabs(c) > 1e-12) {
            if (c < 0.0) {
                for (double& w : v) w = -w;
            }
            return;
        }
    }
}

EigenSystem jacobi_eigen(int n, std::vector<double> a) {
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [&](std::vector<double>& m, int i, int j) -> double& {
        return m[static_cast<std::size_t>(i) * n + j];
    };
    double frob = 0.0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    const double threshold = 1e-12 * std::max(frob, 1e-300);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += 2.0 * at(a, p, q) * at(a, p, q);
        return std::sqrt(s);
    };

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > threshold; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(a, p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(a, k, p), akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(a, p, k), aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = at(v, k, p), vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return at(a, x, x) < at(a, y, y); });

    EigenSystem es;
    es.values.resize(static_cast<std::size_t>(n));
    es.vectors.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        int src = order[static_cast<std::size_t>(k)];
        es.values[static_cast<std::size_t>(k)] = at(a, src, src);
        std::vector<double> col(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = at(v, i, src);
        apply_sign_convention(col);
        es.vectors[static_cast<std::size_t>(k)] = std::move(col);
    }
    return es;
}

}  // namespace

EigenSystem symmetric_eigen(const SymMatrix& m) {
    int n = m.dim();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
    return jacobi_eigen(n, std::move(a));
}

EigenSystem generalized_eigen(const SymMatrix& a, const SymMatrix& g) {
    if (a.dim() != g.dim()) throw ShapeError("matrix dims differ in generalized eigenproblem");
    int n = a.dim();
    Cholesky ch = Cholesky::factor(g);

    // B = L^{-1} A L^{-T}, assembled column by column.
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<double> col(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = a(i, j);
        m[static_cast<std::size_t>(j)] = ch.solve_lower(col);  // columns of L^{-1} A
    }
    std::vector<double> b(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        std::vector<double> bi = ch.solve_lower(row);  // row i of B
        for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(i) * n + j] = bi[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double v = 0.5 * (b[static_cast<std::size_t>(i) * n + j] + b[static_cast<std::size_t>(j) * n + i]);
            b[static_cast<std::size_t>(i) * n + j] = v;
            b[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    EigenSystem es = jacobi_eigen(n, std::move(b));
    for (auto& u : es.vectors) {
        u = ch.solve_lower_t(u);
        apply_sign_convention(u);
    }
    return es;
}

DenseTensor symmetrize(const DenseTensor& t) {
    int r = t.rank(), n = t.dim();
    if (r <= 1) return t;
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    DenseTensor out(r, n);
    std::vector<int> src(static_cast<std::size_t>(r));
    for_each_index(r, n, [&](const std::vector<int>& idx) {
        double s = 0.0;
        for (const auto& p : perms) {
            for (int k = 0; k < r; ++k) src[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])];
            s += t.at(src);
        }
        out.at(idx) = s / static_cast<double>(perms.size());
    });
    return out;
}

DenseTensor adjust_index(const DenseTensor& t, int slot, const SymMatrix& metric, IndexDir dir) {
    int r = t.rank(), n = t.dim();
    if (slot < 0 || slot >= r) throw ShapeError("slot out of range in adjust_index");
    if (metric.dim() != n) throw ShapeError("metric dim mismatch in adjust_index");
    const SymMatrix m = (dir == IndexDir::Raise) ? Cholesky::factor(metric).inverse() : metric;

    DenseTensor out(r, n);
    std::vector<int> src;
    for_each_index(r, n, [&](const std::vector<int>& idx) {
        src = idx;
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            src[static_cast<std::size_t>(slot)] = k;
            s += m(idx[static_cast<std::size_t>(slot)], k) * t.at(src);
        }
        out.at(idx) = s;
    });
    return out;
}

DenseTensor raise_all(const DenseTensor& t, const SymMatrix& metric) {
    int r = t.rank(), n = t.dim();
    if (metric.dim() != n) throw ShapeError("metric dim mismatch in raise_all");
    const SymMatrix inv = Cholesky::factor(metric).inverse();
    DenseTensor out = t;
    std::vector<int> src;
    for (int slot = 0; slot < r; ++slot) {
        DenseTensor next(r, n);
        for_each_index(r, n, [&](const std::vector<int>& idx) {
            src = idx;
            double s = 0.0;
            for (int k = 0; k < n; ++k) {
                src[static_cast<std::size_t>(slot)] = k;
                s += inv(idx[static_cast<std::size_t>(slot)], k) * out.at(src);
            }
            next.at(idx) = s;
        });
        out = next;
    }
    return out;
}

DenseTensor trace_first_two(const DenseTensor& t, const SymMatrix& metric) {
    int r = t.rank(), n = t.dim();
    if (r < 2) throw ShapeError("trace requires rank >= 2");
    if (metric.dim() != n) throw ShapeError("metric dim mismatch in trace");
    const SymMatrix inv = Cholesky::factor(metric).inverse();
    DenseTensor out(r - 2, r - 2 == 0 ? 1 : n);
    std::vector<int> src(static_cast<std::size_t>(r));
    for_each_index(r - 2, n, [&](const std::vector<int>& rest) {
        for (int k = 0; k < r - 2; ++k) src[static_cast<std::size_t>(k + 2)] = rest[static_cast<std::size_t>(k)];
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                src[0] = i;
                src[1] = j;
                s += inv(i, j) * t.at(src);
            }
        }
        out.at(rest) = s;
    });
    return out;
}

double inner_product(const DenseTensor& t, const DenseTensor& s, const SymMatrix& metric) {
    if (t.rank() != s.rank() || t.dim() != s.dim()) {
        throw ShapeError("tensor shape mismatch in inner product");
    }
    if (t.rank() > 0 && metric.dim() != t.dim()) {
        throw ShapeError("metric dim mismatch in inner product");
    }
    const DenseTensor up = (t.rank() == 0) ? t : raise_all(t, metric);
    double acc = 0.0;
    for (std::size_t k = 0; k < up.size(); ++k) acc += up[k] * s[k];
    return acc;
}

TraceAndNorm trace_and_norm(const DenseTensor& t, const DenseTensor& s, const SymMatrix& metric) {
    return TraceAndNorm{trace_first_two(t, metric), inner_product(t, s, metric)};
}

}  // namespace curvcheck
