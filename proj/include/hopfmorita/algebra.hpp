#pragma once

#include "hopfmorita/linalg.hpp"
#include "hopfmorita/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hm {

// *-representation on C^dim with inner product <x, y> = x^H gram y.
// Positivity of an algebra element is decided through one of these.
struct FaithfulRep {
    std::size_t dim = 0;
    std::vector<Matrix> images;  // one per algebra basis element
    Matrix gram;

    Matrix image(const Vec& a) const;
};

// Finite-dimensional unital *-algebra given by structure constants.
struct StarAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<Vec> mult;  // mult[i * dim + j] = b_i b_j
    Vec unit;
    Matrix invol;                  // x* = invol * conj(x)
    bool invol_conjugates = true;  // false: x* = invol * x (only to model broken input)
    std::optional<FaithfulRep> rep;

    Vec mul(const Vec& a, const Vec& b) const;
    Vec star(const Vec& a) const;
    Vec basis(std::size_t i) const { return unit_vector(dim, i); }
    Vec zero() const { return Vec(dim); }
    Vec one() const { return unit; }
    Matrix left_mult(const Vec& a) const;   // x -> a x
    Matrix right_mult(const Vec& a) const;  // x -> x a

    // Structure-constant equality (names and positivity data ignored).
    bool same_structure(const StarAlgebra& o) const;
};

using AlgPtr = std::shared_ptr<const StarAlgebra>;

// Throws std::invalid_argument when tensor shapes disagree with dim.
void validate_shape(const StarAlgebra& a);

Report check_star_algebra(const StarAlgebra& a);

AlgPtr make_matrix_algebra(std::size_t n);
AlgPtr make_function_algebra(std::size_t k);
AlgPtr make_scalar_algebra();
// Basis index of E_rc (x) b_k is (r * n + c) * dim(A) + k.
AlgPtr matrix_algebra_over(const AlgPtr& a, std::size_t n);

Report check_rep(const StarAlgebra& a, const FaithfulRep& rep);
// Left regular representation with gram (tr L(b_i* b_j)); empty if that form
// is not positive definite.
std::optional<FaithfulRep> regular_trace_rep(const StarAlgebra& a);
// The algebra's own rep, else the regular trace rep.
std::optional<FaithfulRep> positivity_rep(const StarAlgebra& a);

bool element_is_positive(const StarAlgebra& a, const Vec& x, const FaithfulRep& rep);
bool element_is_positive(const StarAlgebra& a, const Vec& x);

Subspace center(const StarAlgebra& a);
// Two-sided inverse, if any.
std::optional<Vec> invert(const StarAlgebra& a, const Vec& x);
bool is_unitary(const StarAlgebra& a, const Vec& u);
// Hermitian block matrix (m_ij) over A viewed through rep inflated to M_n(A).
bool matrix_over_algebra_is_positive(const StarAlgebra& a, const std::vector<std::vector<Vec>>& m,
                                     const FaithfulRep& rep);

struct AlgebraMorphism {
    AlgPtr source;
    AlgPtr target;
    Matrix matrix;  // target.dim x source.dim

    AlgebraMorphism() = default;
    AlgebraMorphism(AlgPtr s, AlgPtr t, Matrix m);
    Vec operator()(const Vec& x) const { return matrix * x; }
};

struct MorphismFlags {
    bool multiplicative = false;
    bool unital = false;
    bool star = false;
    bool injective = false;
    bool surjective = false;
};

MorphismFlags morphism_flags(const AlgebraMorphism& f);
Report check_morphism(const AlgebraMorphism& f);
AlgebraMorphism identity_morphism(const AlgPtr& a);
AlgebraMorphism compose(const AlgebraMorphism& outer, const AlgebraMorphism& inner);
// Throws std::domain_error if not bijective.
AlgebraMorphism inverse(const AlgebraMorphism& f);
// a -> u a u*, for u in a.
AlgebraMorphism conjugation_by(const AlgPtr& a, const Vec& u);

}  // namespace hm
