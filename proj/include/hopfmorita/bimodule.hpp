#pragma once

#include "hopfmorita/action.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hm {

// (B, A)-bimodule E with basis x_0..x_{m-1}.
//   left_act[b * m + i]  = b_b . x_i
//   right_act[i * dA + a] = x_i . a_a
//   ip_right[i * m + j]  = <x_i, x_j>   (A-valued, antilinear in the first slot)
//   ip_left[i * m + j]   = B<x_i, x_j>  (B-valued, linear in the first slot)
//   h_act[g * m + i]     = b_g |> x_i
struct CovariantBimodule {
    AlgPtr left;
    AlgPtr right;
    std::size_t dim = 0;
    std::vector<Vec> left_act;
    std::vector<Vec> right_act;
    std::vector<Vec> ip_right;
    std::optional<std::vector<Vec>> ip_left;
    std::optional<std::vector<Vec>> h_act;
    ActionPtr rho_left;   // H on B, required with h_act
    ActionPtr rho_right;  // H on A, required with h_act
    std::optional<FaithfulRep> rep_left, rep_right;

    Vec basis(std::size_t i) const { return unit_vector(dim, i); }
    Vec lmul(const Vec& b, const Vec& x) const;
    Vec rmul(const Vec& x, const Vec& a) const;
    Vec ip(const Vec& x, const Vec& y) const;
    Vec lip(const Vec& x, const Vec& y) const;
    Vec act(const Vec& g, const Vec& x) const;
    Vec act(std::size_t g, const Vec& x) const;
    Matrix lmul_matrix(const Vec& b) const;
    Matrix rmul_matrix(const Vec& a) const;
    Matrix act_matrix(const Vec& g) const;

    bool has_h() const { return h_act.has_value(); }
    const HopfStarAlgebra& hopf() const { return *rho_right->hopf; }
    // Throws std::invalid_argument on shape errors.
    void validate() const;
};

using BimodPtr = std::shared_ptr<const CovariantBimodule>;

BimodPtr make_bimodule(CovariantBimodule e);

Report check_covariant_module(const CovariantBimodule& e);

Subspace degeneracy_space(const CovariantBimodule& e);
Subspace left_degeneracy_space(const CovariantBimodule& e);

struct QuotientModule {
    BimodPtr module;
    Quotient q;
};
// Throws std::domain_error if the degeneracy space is not stable under the
// module structure or differs from the left one.
QuotientModule quotient_module(const CovariantBimodule& e);

// Positive in M_m(A) of the basis Gram matrix. Every tuple Gram matrix is
// C^H G C for a coefficient matrix C, so this single check covers all tuples.
// Throws std::invalid_argument without a positivity rep for A.
bool complete_positivity_check(const CovariantBimodule& e);
// Same for the B-valued product (tuple Grams are C^T G conj(C)).
bool complete_positivity_left(const CovariantBimodule& e);

// Requires the left inner product.
BimodPtr conjugate_bimodule(const CovariantBimodule& e);

struct TensorProduct {
    BimodPtr module;
    Quotient q;  // raw index i_F * dim(E) + j_E
    std::size_t dim_f = 0, dim_e = 0;

    // Class of y (x) x in the product.
    Vec element(const Vec& y, const Vec& x) const { return q.project(kron(y, x)); }
};

// F over (C, B), E over (B, A). Throws std::invalid_argument on mismatched
// middle algebras, std::domain_error when balancing relations are not
// degenerate or the two degeneracy spaces differ.
TensorProduct internal_tensor(const CovariantBimodule& f, const CovariantBimodule& e);

struct Operator {
    Matrix matrix;
    std::optional<Matrix> adjoint;
};

// Spanning family of adjointable operators; throws std::domain_error for a
// degenerate inner product.
std::vector<Operator> adjointable_operators(const CovariantBimodule& e);
bool is_adjoint_pair(const CovariantBimodule& e, const Matrix& t, const Matrix& ts);
bool is_right_linear(const CovariantBimodule& e, const Matrix& t);
// z -> x . <y, z>
Operator rank_one(const CovariantBimodule& e, const Vec& x, const Vec& y);
// (g |> T) x = g_(1) |> T(S(g_(2)) |> x); the adjoint is S(g)* |> T*.
Operator adjoint_on_operators(const CovariantBimodule& e, const Vec& g, const Operator& t);

// A as an (A, A)-bimodule with <a, b> = a* b and A<a, b> = a b*.
BimodPtr identity_bimodule(const ActionPtr& rho);
BimodPtr identity_bimodule(const AlgPtr& a);
// A^n between M_n(A) and A. Basis index i * dim(A) + k is e_i (x) a_k.
BimodPtr standard_equivalence(const ActionPtr& rho, std::size_t n);

Report check_equivalence_bimodule(const CovariantBimodule& e, bool strong);

// Items for a candidate isomorphism u : e -> f (matrix f.dim x e.dim).
Report check_module_map(const CovariantBimodule& e, const CovariantBimodule& f, const Matrix& u);

// Raw map on the pre-quotient space pushed down to the product; empty when
// it does not vanish on the quotiented subspace.
std::optional<Matrix> descend(const TensorProduct& t, const Matrix& raw);

// Unit, inverse and (with g) associativity laws for composable F over (C, B),
// E over (B, A), G over (D, C).
Report verify_canonical_isos(const CovariantBimodule& f, const CovariantBimodule& e,
                             const CovariantBimodule* g = nullptr);

// E (+) E with both inner products supported on the first summand; used to
// model degenerate input.
BimodPtr pad_with_null(const CovariantBimodule& e);

}  // namespace hm
