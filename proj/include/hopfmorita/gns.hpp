#pragma once

#include "hopfmorita/action.hpp"

#include <vector>

namespace hm {

// Linear functional a -> row . a on an algebra.
struct Functional {
    AlgPtr algebra;
    Vec row;

    Gauss operator()(const Vec& a) const { return dot(row, a); }
};

// Matrix (omega(b_i* b_j)).
Matrix functional_gram(const Functional& omega);

// "positive" and, with rho, "H-invariant".
Report check_functional(const Functional& omega, const StarAction* rho = nullptr);

// Representation of A on C^dim with <x, y> = x^H gram y, together with an
// H-action h(g).
struct CovariantRep {
    ActionPtr rho;
    std::size_t dim = 0;
    std::vector<Matrix> pi;  // per basis element of A
    std::vector<Matrix> h;   // per basis element of H
    Matrix gram;

    Matrix pi_of(const Vec& a) const;
    Matrix h_of(const Vec& g) const;
};

// "multiplicative", "unital", "star preserving", "H-module", "adjointable"
// (<x, g |> y> = <g* |> x, y>), "covariant"
// (pi(g |> a) = h(g_(1)) pi(a) h(S(g_(2)))) and "gram positive definite".
Report check_covariant_rep(const CovariantRep& r);

struct GnsSpace {
    CovariantRep rep;
    Quotient q;  // A / J_omega
    Vec vacuum;  // class of 1

    std::size_t dim() const { return rep.dim; }
    Vec psi(const Vec& a) const { return q.project(a); }
};

// Kernel of the Gram matrix, i.e. the degeneracy space of omega(a* b).
Subspace gelfand_ideal(const Functional& omega);

// Throws std::invalid_argument unless omega is positive and H-invariant.
GnsSpace gns(const Functional& omega, const ActionPtr& rho);

struct Intertwiner {
    Matrix u;  // GNS(omega (x) eps) x GNS(omega)
    Report checks;
};

// psi_a -> psi_{a (x) 1} into the GNS space of omega (x) eps on the crossed
// product; checks "well-defined", "isometric", "surjective" and
// "intertwines" against the hat representation. Throws like gns.
Intertwiner gns_crossed_intertwiner(const Functional& omega, const ActionPtr& rho);

}  // namespace hm
