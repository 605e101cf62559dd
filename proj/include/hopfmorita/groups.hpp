#pragma once

#include "hopfmorita/action.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hm {

// Linear map a : H -> A, column g holding a(b_g). Membership in GL(H, A) or
// U(H, A) is a predicate checked against an action, not an invariant.
struct Twist {
    HopfPtr hopf;
    AlgPtr alg;
    Matrix m;  // dim(A) x dim(H)

    Vec at(std::size_t g) const { return m.col(g); }
    Vec operator()(const Vec& g) const { return m * g; }
    friend bool operator==(const Twist& a, const Twist& b) { return a.m == b.m; }
};

// e(g) = eps(g) 1
Twist twist_unit(const HopfPtr& h, const AlgPtr& a);
// (a * b)(g) = a(g_(1)) b(g_(2))
Twist convolve(const Twist& a, const Twist& b);
// g -> chi(g) 1 for a character given on group-like basis elements.
Twist character_twist(const HopfPtr& h, const AlgPtr& a, const std::vector<Gauss>& chi);

// Items "normalization", "action condition", "module condition" and, for U,
// "unitarity condition".
Report is_GL_member(const Twist& a, const StarAction& rho);
Report is_U_member(const Twist& a, const StarAction& rho);

// a^{-1}(g) = g_(2) |> a(S^{-1}(g_(1))). Throws std::invalid_argument when a
// is not in GL(H, A).
Twist twist_inverse(const Twist& a, const StarAction& rho);

// c^(g) = c (g |> c^{-1}) for central invertible c; throws
// std::invalid_argument otherwise.
Twist hat(const Vec& c, const StarAction& rho);

enum class U0Outcome { equal, not_equal, undetermined };
const char* to_string(U0Outcome o);

struct U0Result {
    U0Outcome outcome = U0Outcome::undetermined;
    std::optional<Vec> witness;  // unitary central c with a * b^{-1} = c^
};

// Whether a and b agree modulo the image of the hat map on unitary central
// elements. Throws std::invalid_argument unless both lie in U(H, A).
U0Result u0_equal(const Twist& a, const Twist& b, const StarAction& rho, std::uint64_t seed = 0);

// All characters G -> {1, i, -1, -i} of the group behind H, lifted to
// constant central twists and kept when they pass U membership. Throws
// std::invalid_argument unless H is a group algebra.
std::vector<Twist> enumerate_characters(const StarAction& rho);

// Phi^chi(g) = chi(S(g_(1))) g_(2) for chi a twist with values in the scalars.
// Throws std::invalid_argument when chi is not in GL(H, C).
AlgebraMorphism char_automorphism(const Twist& chi);

// phi o a for a surjective H-equivariant *-homomorphism phi : A -> B. Throws
// std::invalid_argument when phi is not of that kind.
Twist pushforward(const AlgebraMorphism& phi, const StarAction& rho_a, const StarAction& rho_b, const Twist& a);

// Checks specific to cocommutative H on the given twists: "values central",
// "convolution commutes", "invariant-center homomorphisms closed" and
// "inverse formula". Throws std::invalid_argument for non-cocommutative H.
Report cocommutative_facts(const StarAction& rho, const std::vector<Twist>& twists);

// Unitary elements sum_k w_k z_k with w_k in {1, i, -1, -i, 0} over the
// echelon basis z_k of the center (exhaustive for small centers, seeded
// sampling otherwise). Always contains 1.
std::vector<Vec> unitary_central_samples(const StarAlgebra& a, std::uint64_t seed = 0);

// Closure of gens under convolution, stopping at cap elements.
std::vector<Twist> convolution_closure(const std::vector<Twist>& gens, std::size_t cap = 64);

// "membership", "identity", "closure", "inverses", "associativity" on a
// finite set of twists.
Report check_group_axioms(const std::vector<Twist>& elems, const StarAction& rho);

}  // namespace hm
