#include "hopfmorita/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hm {

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Gauss& z) { return z.is_zero(); });
}

Vec conj(const Vec& v) {
    Vec r;
    r.reserve(v.size());
    for (const auto& z : v) r.push_back(z.conj());
    return r;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a);
    for (auto& z : r) z = -z;
    return r;
}

Vec operator*(const Gauss& s, const Vec& v) {
    Vec r(v.size());
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = s * v[i];
    return r;
}

void axpy(Vec& y, const Gauss& s, const Vec& x) {
    if (y.size() != x.size()) throw std::invalid_argument("vector size mismatch");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += s * x[i];
}

Vec kron(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

Gauss dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Gauss s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
    if (v.size() != rows_ || j >= cols_) throw std::invalid_argument("set_col: size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_ || i >= rows_) throw std::invalid_argument("set_row: size mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
    return t;
}

Matrix Matrix::conj() const {
    Matrix c(*this);
    for (auto& z : c.data_) z = z.conj();
    return c;
}

bool Matrix::is_zero() const { return hm::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Gauss& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
        }
    return c;
}

Matrix operator*(const Gauss& s, Matrix a) {
    for (auto& z : a.data_)
        if (!z.is_zero()) z *= s;
    return a;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector size mismatch");
    Vec r(a.rows_);
    for (std::size_t k = 0; k < a.cols_; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows_; ++i)
            if (!a(i, k).is_zero()) r[i] += a(i, k) * v[k];
    }
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

Matrix stack_rows(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t cols = blocks.front().cols(), rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("stack_rows: column mismatch");
        rows += b.rows();
    }
    Matrix m(rows, cols);
    std::size_t at = 0;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i) m.set_row(at++, b.row(i));
    return m;
}

Rref rref(Matrix m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c).is_zero()) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = c; j < C; ++j) std::swap(m(p, j), m(r, j));
        Gauss inv = Gauss(1) / m(r, c);
        for (std::size_t j = c; j < C; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Gauss f = m(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(r, C);
    for (std::size_t i = 0; i < r; ++i) out.set_row(i, m.row(i));
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("span: vector size mismatch");
    auto e = rref(Matrix::from_rows(vectors, ambient));
    for (std::size_t i = 0; i < e.r.rows(); ++i) s.basis_.push_back(e.r.row(i));
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(ambient, i));
    return span(ambient, vs);
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("reduce: vector size mismatch");
    Vec r(v);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        Gauss f = r[pivots_[k]];
        if (!f.is_zero()) axpy(r, -f, basis_[k]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

Subspace Subspace::annihilator() const {
    if (basis_.empty()) return full(ambient_);
    return kernel(basis_matrix());
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("subspace intersection: ambient mismatch");
    // the bilinear annihilator is an involution, so U n W = ann(ann U + ann W)
    return (annihilator() + other.annihilator()).annihilator();
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_); }

Subspace kernel(const Matrix& a) {
    auto e = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> vs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.r(k, f);
        vs.push_back(std::move(v));
    }
    return Subspace::span(n, vs);
}

Subspace column_space(const Matrix& a) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.col(j));
    return Subspace::span(a.rows(), cols);
}

std::optional<Solution> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.r(k, a.cols());
    return Solution{std::move(x), kernel(a)};
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.square()) return std::nullopt;
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.r(i, n + j);
    return inv;
}

Quotient::Quotient(Subspace sub) : sub_(std::move(sub)) {
    std::vector<bool> is_pivot(sub_.ambient(), false);
    for (auto p : sub_.pivots()) is_pivot[p] = true;
    for (std::size_t i = 0; i < sub_.ambient(); ++i)
        if (!is_pivot[i]) free_.push_back(i);
}

Vec Quotient::project(const Vec& v) const {
    Vec r = sub_.reduce(v);
    Vec q(free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k) q[k] = r[free_[k]];
    return q;
}

Vec Quotient::lift(const Vec& q) const {
    if (q.size() != free_.size()) throw std::invalid_argument("lift: size mismatch");
    Vec v(sub_.ambient());
    for (std::size_t k = 0; k < free_.size(); ++k) v[free_[k]] = q[k];
    return v;
}

Matrix Quotient::projection_matrix() const {
    Matrix p(dim(), ambient());
    for (std::size_t j = 0; j < ambient(); ++j) p.set_col(j, project(unit_vector(ambient(), j)));
    return p;
}

Matrix Quotient::lift_matrix() const {
    Matrix l(ambient(), dim());
    for (std::size_t k = 0; k < free_.size(); ++k) l(free_[k], k) = 1;
    return l;
}

std::vector<Gauss> char_poly(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    Matrix h(m);
    // similarity reduction to upper Hessenberg form
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t p = j + 1;
        while (p < n && h(p, j).is_zero()) ++p;
        if (p == n) continue;
        if (p != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
        }
        Gauss inv = Gauss(1) / h(j + 1, j);
        for (std::size_t r = j + 2; r < n; ++r) {
            if (h(r, j).is_zero()) continue;
            Gauss u = h(r, j) * inv;
            for (std::size_t c = 0; c < n; ++c)
                if (!h(j + 1, c).is_zero()) h(r, c) -= u * h(j + 1, c);
            for (std::size_t c = 0; c < n; ++c)
                if (!h(c, r).is_zero()) h(c, j + 1) += u * h(c, r);
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod of subdiagonal) p_{i-1}
    std::vector<std::vector<Gauss>> p(n + 1);
    p[0] = {Gauss(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Gauss> pk(k + 1);
        const auto& prev = p[k - 1];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            pk[d + 1] += prev[d];
            pk[d] -= h(k - 1, k - 1) * prev[d];
        }
        Gauss t(1);
        for (std::size_t i = k - 1; i >= 1; --i) {
            t *= h(i, i - 1);
            if (t.is_zero()) break;
            Gauss f = t * h(i - 1, k - 1);
            if (!f.is_zero())
                for (std::size_t d = 0; d < p[i - 1].size(); ++d) pk[d] -= f * p[i - 1][d];
        }
        p[k] = std::move(pk);
    }
    return p[n];
}

bool is_hermitian(const Matrix& m) { return m.square() && m == m.adjoint(); }

bool psd_check(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("psd_check: matrix not square");
    if (!is_hermitian(m)) return false;
    const std::size_t n = m.rows();
    auto c = char_poly(m);
    for (std::size_t k = 0; k <= n; ++k) {
        if (!c[k].is_real()) return false;
        int s = sgn(c[k].re());
        if ((n - k) % 2 == 1) s = -s;
        if (s < 0) return false;
    }
    return true;
}

}  // namespace hm
