#pragma once

#include "hopfmorita/algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hm {

// One summand w * (b_left (x) b_right) of a comultiplication, basis-pair form.
struct CoTerm {
    std::size_t left;
    std::size_t right;
    Gauss weight;
};

struct CoTerm3 {
    std::size_t a, b, c;
    Gauss weight;
};

struct HopfStarAlgebra {
    AlgPtr alg;
    std::vector<Vec> comult;  // comult[i] has length dim^2, index p * dim + q
    Vec counit;
    Matrix antipode;

    std::size_t dim() const { return alg->dim; }
    Vec delta(const Vec& x) const;
    Gauss eps(const Vec& x) const { return dot(counit, x); }
    Vec S(const Vec& x) const { return antipode * x; }
    // S^{-1}(g) = S(g*)*
    Vec S_inv(const Vec& x) const { return alg->star(S(alg->star(x))); }
    Vec star(const Vec& x) const { return alg->star(x); }
    Vec mul(const Vec& a, const Vec& b) const { return alg->mul(a, b); }
    Vec basis(std::size_t i) const { return alg->basis(i); }

    // Delta(b_g) split into basis pairs, and (Delta (x) id) Delta(b_g).
    const std::vector<CoTerm>& co(std::size_t g) const { return co_[g]; }
    const std::vector<CoTerm3>& co3(std::size_t g) const { return co3_[g]; }
    // Must be called after the fields are filled; also validates shapes.
    void index();

private:
    std::vector<std::vector<CoTerm>> co_;
    std::vector<std::vector<CoTerm3>> co3_;
};

using HopfPtr = std::shared_ptr<const HopfStarAlgebra>;

HopfPtr make_hopf(AlgPtr alg, std::vector<Vec> comult, Vec counit, Matrix antipode);

Report check_hopf(const HopfStarAlgebra& h);
bool is_cocommutative(const HopfStarAlgebra& h);

// Group algebra from a Cayley table with the identity at index 0. With
// star_is_inverse false the involution fixes every group element.
HopfPtr group_hopf(const std::vector<std::vector<std::size_t>>& cayley, const std::vector<std::size_t>& inv = {},
                   bool star_is_inverse = true, std::vector<std::string> names = {});
HopfPtr cyclic_group_hopf(std::size_t n);
HopfPtr symmetric_group_s3_hopf();

struct SweedlerTerm {
    Vec left;
    Vec right;
    Gauss weight;
};

std::vector<SweedlerTerm> sweedler(const HopfStarAlgebra& h, const Vec& x);

// Linear map H -> A, one column per basis element of H.
struct LinMap {
    Matrix m;
    Vec operator()(const Vec& x) const { return m * x; }
    Vec at(std::size_t g) const { return m.col(g); }
};

LinMap convolution(const LinMap& f, const LinMap& g, const HopfStarAlgebra& h, const StarAlgebra& a);
// e(g) = eps(g) 1_A
LinMap convolution_unit(const HopfStarAlgebra& h, const StarAlgebra& a);

}  // namespace hm
