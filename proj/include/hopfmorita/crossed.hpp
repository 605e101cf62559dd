#pragma once

#include "hopfmorita/bimodule.hpp"
#include "hopfmorita/gns.hpp"

#include <vector>

namespace hm {

// A x| H with basis index a * dim(H) + g for a_a (x) b_g.
struct CrossedAlgebra {
    ActionPtr base;
    AlgPtr alg;
    AlgebraMorphism iota;   // a -> a (x) 1
    AlgebraMorphism jmath;  // g -> 1 (x) g
    ActionPtr canonical_action;

    const HopfStarAlgebra& hopf() const { return *base->hopf; }
    Vec element(const Vec& a, const Vec& g) const { return kron(a, g); }
};

// Builds the product (a (x) g)(b (x) h) = a (g_(1) |> b) (x) g_(2) h and
// (a (x) g)* = g_(1)* |> a* (x) g_(2)*, then verifies the algebra axioms, the
// canonical action against j(g_(1)) (.) j(S(g_(2))), and that iota is
// injective and equivariant. Throws std::invalid_argument for an unverified
// action that fails its checks, std::domain_error if a verification fails.
CrossedAlgebra crossed_algebra(const ActionPtr& rho);

// a (x) g -> iota_b(a) jmath_b(g). Throws std::invalid_argument unless both
// maps are unital *-homomorphisms into one algebra satisfying
// iota_b(g |> a) = jmath_b(g_(1)) iota_b(a) jmath_b(S(g_(2))).
AlgebraMorphism universal_map(const CrossedAlgebra& c, const AlgebraMorphism& iota_b,
                              const AlgebraMorphism& jmath_b);

// phi (x) id. Throws std::invalid_argument unless phi : A -> B is an
// equivariant *-homomorphism between the two bases.
AlgebraMorphism crossed_morphism(const AlgebraMorphism& phi, const CrossedAlgebra& ca, const CrossedAlgebra& cb);

// E (x) H before the quotient, raw index i * dim(H) + g. The H-action is
// g |> (x (x) h) = g_(1) |> x (x) g_(2) h S(g_(3)).
BimodPtr crossed_raw(const CovariantBimodule& e, const CrossedAlgebra& cb, const CrossedAlgebra& ca);

struct CrossedBimodule {
    BimodPtr module;  // over (B x| H, A x| H)
    Quotient q;       // raw E (x) H modulo the degeneracy space

    Vec element(const Vec& x, const Vec& g) const { return q.project(kron(x, g)); }
};

// Requires an H-action on e. Throws std::invalid_argument when cb, ca do not
// match the algebras and actions of e, std::domain_error if the quotient is
// not well defined.
CrossedBimodule crossed_bimodule(const CovariantBimodule& e, const CrossedAlgebra& cb, const CrossedAlgebra& ca);
CrossedBimodule crossed_bimodule(const CovariantBimodule& e);

// I1 : (F x| H) (x) (E x| H) -> (F (x) E) x| H, I2 : conj(E x| H) -> conj(E) x| H
// with its inverse (only when E has a left product) and I3 : the crossed
// identity bimodule against A x| H itself. F over (C, B), E over (B, A).
Report verify_crossed_isos(const CovariantBimodule& f, const CovariantBimodule& e);

// omega (x) mu on the crossed product. Throws std::invalid_argument unless
// omega is positive and H-invariant and mu is positive.
Functional functional_product(const Functional& omega, const Functional& mu, const CrossedAlgebra& c);

// pi^(a (x) g) = pi(a) h(g). Throws std::invalid_argument if r fails the
// covariance relation or does not belong to c's action.
FaithfulRep hat_representation(const CovariantRep& r, const CrossedAlgebra& c);

}  // namespace hm
