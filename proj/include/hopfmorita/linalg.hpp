#pragma once

#include "hopfmorita/scalar.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hm {

using Vec = std::vector<Gauss>;

Vec zeros(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec conj(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Gauss& s, const Vec& v);
// y += s * x
void axpy(Vec& y, const Gauss& s, const Vec& x);
// Coefficient vector of a (x) b in the basis e_i (x) f_j, index i * |b| + j.
Vec kron(const Vec& a, const Vec& b);
// Bilinear sum a_i b_i (no conjugation).
Gauss dot(const Vec& a, const Vec& b);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Gauss& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Gauss& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Gauss>& data() const { return data_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_col(std::size_t j, const Vec& v);
    void set_row(std::size_t i, const Vec& v);

    Matrix transpose() const;
    Matrix adjoint() const;  // conjugate transpose
    Matrix conj() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Gauss& s, Matrix a);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Gauss> data_;
};

// Block matrix with (i, j) block a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);
// Vertical concatenation; all inputs share a column count.
Matrix stack_rows(const std::vector<Matrix>& blocks);

struct Rref {
    Matrix r;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Rref rref(Matrix m);
std::size_t rank(const Matrix& m);

// Subspace of Q(i)^n stored by its reduced row echelon basis, so equal
// subspaces have identical data.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    // by value on temporaries, so `for (v : kernel(m).basis())` is safe
    const std::vector<Vec>& basis() const& { return basis_; }
    std::vector<Vec> basis() && { return std::move(basis_); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // v minus its component along the pivot coordinates; zero iff v is inside.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    // Vectors w with sum_i w_i v_i = 0 for every v in the subspace.
    Subspace annihilator() const;
    Matrix basis_matrix() const;  // basis vectors as rows

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& a);
Subspace column_space(const Matrix& a);

struct Solution {
    Vec particular;
    Subspace kernel;
};

// All x with a x = b; free variables of the particular solution are zero.
std::optional<Solution> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& a);

// V / W realized on the coordinates outside the pivots of W.
class Quotient {
public:
    Quotient() = default;
    explicit Quotient(Subspace sub);

    std::size_t dim() const { return free_.size(); }
    std::size_t ambient() const { return sub_.ambient(); }
    const Subspace& subspace() const { return sub_; }
    Vec project(const Vec& v) const;
    Vec lift(const Vec& q) const;
    Matrix projection_matrix() const;
    Matrix lift_matrix() const;

private:
    Subspace sub_;
    std::vector<std::size_t> free_;
};

// Coefficients c_0..c_n of det(lambda I - m), c_n = 1.
std::vector<Gauss> char_poly(const Matrix& m);
bool is_hermitian(const Matrix& m);
// Hermitian and (-1)^(n-k) c_k >= 0 for every char-poly coefficient.
bool psd_check(const Matrix& m);

}  // namespace hm
