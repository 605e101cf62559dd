#pragma once

#include "hopfmorita/bimodule.hpp"
#include "hopfmorita/groups.hpp"
#include "hopfmorita/search.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hm {

// F over (C, B) and a *-isomorphism phi : A -> B give F_phi over (C, A) with
// x . a = x phi(a) and <x, y> = phi^{-1}(<x, y>). The H-action on F is kept;
// rho_a is the action on A (defaults to F's right action when phi is an
// automorphism). The result is covariant exactly when phi is equivariant.
// Throws std::invalid_argument if phi is not a bijective *-homomorphism.
BimodPtr twist_right(const CovariantBimodule& f, const AlgebraMorphism& phi, ActionPtr rho_a = nullptr);
// E over (B, A) and psi : B -> C give E over (C, A) with c . x = psi^{-1}(c) x
// and left product psi(B<x, y>).
BimodPtr twist_left(const CovariantBimodule& e, const AlgebraMorphism& psi, ActionPtr rho_c = nullptr);

// B as a (B, A)-bimodule with the right structure twisted by phi : A -> B.
// Throws std::invalid_argument unless phi is an equivariant *-isomorphism.
BimodPtr ell(const AlgebraMorphism& phi, const ActionPtr& rho_b, const ActionPtr& rho_a);

struct IsoSearch {
    SearchOutcome outcome = SearchOutcome::undetermined;
    std::optional<Matrix> witness;  // e'.dim x e.dim
    std::size_t solution_dim = 0;   // dimension of the intertwiner space
};

// Bimodule-linear, H-equivariant (when both carry actions) and isometric for
// every inner product present on both sides. Throws std::invalid_argument
// when the algebra pairs differ.
IsoSearch find_bimodule_isomorphism(const CovariantBimodule& e, const CovariantBimodule& f, std::uint64_t seed = 0);

struct InnerSearch {
    SearchOutcome outcome = SearchOutcome::undetermined;
    std::optional<Vec> unitary;  // phi(a) = u a u*, invariant when rho is given
};

// Unitary u (H-invariant if rho is given) implementing phi.
InnerSearch detect_inner(const AlgebraMorphism& phi, const StarAction* rho = nullptr, std::uint64_t seed = 0);

// With u_g(x) = g_(1) |> (S(g_(2)) |>' x) for the actions of e and e_prime on
// the same module, the unique twist b over the left algebra with
// u_g(x) = b(g) x. Throws std::invalid_argument when the modules differ
// outside the action, std::domain_error when u_g is not a left
// multiplication or the reconstruction fails.
Twist action_difference(const CovariantBimodule& e, const CovariantBimodule& e_prime);

// g |>^b x = b(g_(1)) (g_(2) |> x), b in U(H, B).
BimodPtr twisted_action_left(const CovariantBimodule& e, const Twist& b);
// g |>_a x = (g_(1) |> x) a(g_(2)), a in U(H, A).
BimodPtr twisted_action_right(const CovariantBimodule& e, const Twist& a);

// The central w in B with w x = x z for all x. Throws std::invalid_argument
// for non-central z, std::domain_error when w does not exist or is not
// unique.
Vec h_center(const CovariantBimodule& e, const Vec& z);

// The twist h over B with |>_a = |>^h. Throws std::invalid_argument when a
// is not in U(H, A), std::domain_error if no unique solution exists.
Twist h_twist(const CovariantBimodule& e, const Twist& a);

struct DualBasis {
    std::vector<Vec> xs, ys;
};

bool is_hermitian_dual_basis(const CovariantBimodule& p, const DualBasis& d);
// x = sum_i x_i <y_i, x> for every x. Any such family can be rewritten with
// the y_i running over the module basis, so an empty result is definitive.
std::optional<DualBasis> hermitian_dual_basis(const CovariantBimodule& p);

struct IdealSubspace {
    AlgPtr algebra;
    Subspace space;
};

// "left ideal", "right ideal", "star closed" and, with rho, "H-invariant".
Report check_ideal(const IdealSubspace& j, const StarAction* rho = nullptr);

// {b in B : <x, b y> in J for all x, y}. Throws std::invalid_argument if J
// is not a *-ideal of the right algebra.
IdealSubspace ideal_transfer(const CovariantBimodule& e, const IdealSubspace& j);

}  // namespace hm
