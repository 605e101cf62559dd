#pragma once

#include "hopfmorita/hopf.hpp"

#include <memory>
#include <vector>

namespace hm {

// Left *-action of H on A, stored as act[g * dim(A) + a] = b_g |> b_a.
struct StarAction {
    HopfPtr hopf;
    AlgPtr alg;
    std::vector<Vec> act;
    bool unchecked = false;  // loaded from a file without validation

    std::size_t dim_h() const { return hopf->dim(); }
    std::size_t dim_a() const { return alg->dim; }
    Vec apply(std::size_t g, const Vec& a) const;
    Vec apply(const Vec& g, const Vec& a) const;
    // Matrix of a -> g |> a.
    Matrix matrix(std::size_t g) const;
    Matrix matrix(const Vec& g) const;
};

using ActionPtr = std::shared_ptr<const StarAction>;

// Validates shape, then the *-action identities; throws std::invalid_argument
// naming the first failed identity.
ActionPtr make_action(HopfPtr h, AlgPtr a, std::vector<Vec> act);
// Shape check only.
ActionPtr make_action_unchecked(HopfPtr h, AlgPtr a, std::vector<Vec> act);

Report check_star_action(const StarAction& rho);

ActionPtr trivial_action(const HopfPtr& h, const AlgPtr& a);
// Ad_g(x) = g_(1) x S(g_(2)) on the algebra underlying h.
ActionPtr adjoint_action(const HopfPtr& h);
// Componentwise action on M_n(A), indexed as in matrix_algebra_over.
ActionPtr lift_to_matrices(const StarAction& rho, std::size_t n);
// C[G] acting on functions on X through perm[g][x]; h must be a group algebra.
ActionPtr permutation_action(const HopfPtr& h, const std::vector<std::vector<std::size_t>>& perm);
// Z2 exchanging the two points of C^2.
ActionPtr swap_action();

// {a : g |> a = eps(g) a for all g}
Subspace invariants(const StarAction& rho);
bool is_invariant(const StarAction& rho, const Vec& a);

// Index of the group element a basis vector represents, if it is grouplike.
std::optional<std::size_t> grouplike_index(const HopfStarAlgebra& h, const Vec& g);

}  // namespace hm
