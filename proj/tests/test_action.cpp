#include <doctest.h>

#include "fixtures.hpp"
#include "hopfmorita/action.hpp"
#include "oracles.hpp"

using namespace hm;

namespace {

std::vector<ActionPtr> shipped_actions() {
    auto z4 = cyclic_group_hopf(4);
    auto s3 = symmetric_group_s3_hopf();
    return {
        swap_action(),
        trivial_action(z4, make_matrix_algebra(2)),
        lift_to_matrices(*swap_action(), 2),
        adjoint_action(s3),
        adjoint_action(fx::sweedler_hopf()),
        permutation_action(cyclic_group_hopf(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}),
    };
}

bool is_unital_star_subalgebra(const StarAlgebra& a, const Subspace& s) {
    if (!s.contains(a.unit)) return false;
    for (const auto& x : s.basis()) {
        if (!s.contains(a.star(x))) return false;
        for (const auto& y : s.basis())
            if (!s.contains(a.mul(x, y))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("shipped actions pass") {
    for (const auto& r : shipped_actions()) {
        auto rep = check_star_action(*r);
        CHECK(rep.items().size() == 5);
        CHECK(rep.passed());
        CHECK_FALSE(r->unchecked);
    }
}

TEST_CASE("trivial action") {
    auto z2 = cyclic_group_hopf(2);
    auto c2 = make_function_algebra(2);
    auto t = trivial_action(z2, c2);
    CHECK(t->apply(1, c2->basis(0)) == c2->basis(0));
    CHECK(t->apply(z2->alg->unit, Vec{3, Gauss::i()}) == Vec{3, Gauss::i()});
    CHECK(invariants(*t) == Subspace::full(2));
}

TEST_CASE("swap action and a corrupted Leibniz entry") {
    auto s = swap_action();
    CHECK(s->apply(1, Vec{1, 0}) == Vec{0, 1});
    CHECK(invariants(*s) == Subspace::span(2, {Vec{1, 1}}));

    auto act = s->act;
    act[1 * 2 + 0] = Vec{1, 1};
    auto bad = make_action_unchecked(s->hopf, s->alg, act);
    CHECK(bad->unchecked);
    auto rep = check_star_action(*bad);
    CHECK(rep.has_failure("leibniz rule"));
    CHECK(rep.find("unit acts as identity")->ok);
    CHECK_THROWS_AS(make_action(s->hopf, s->alg, act), std::invalid_argument);
    CHECK_THROWS_AS(make_action_unchecked(s->hopf, s->alg, {}), std::invalid_argument);
}

TEST_CASE("star compatibility is detected") {
    auto s = swap_action();
    auto act = s->act;
    act[1 * 2 + 0] = Vec{0, Gauss::i()};
    act[1 * 2 + 1] = Vec{-Gauss::i(), 0};
    auto rep = check_star_action(*make_action_unchecked(s->hopf, s->alg, act));
    CHECK(rep.has_failure("unit fixed"));
    CHECK(rep.has_failure("star compatibility"));
    CHECK(rep.find("module law")->ok);
}

TEST_CASE("adjoint action") {
    auto z2 = cyclic_group_hopf(2);
    auto ad = adjoint_action(z2);
    CHECK(ad->apply(1, z2->basis(1)) == z2->basis(1));
    CHECK(invariants(*ad) == Subspace::full(2));

    auto s3 = symmetric_group_s3_hopf();
    auto ads = adjoint_action(s3);
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h)
            CHECK(ads->apply(g, s3->basis(h)) == s3->mul(s3->mul(s3->basis(g), s3->basis(h)), s3->S(s3->basis(g))));
    // class sums: identity, transpositions, 3-cycles
    std::vector<Vec> classes(3, Vec(6));
    for (std::size_t g = 0; g < 6; ++g) {
        std::size_t order = 1;
        Vec p = s3->basis(g);
        while (p != s3->basis(0)) p = s3->mul(p, s3->basis(g)), ++order;
        classes[order == 1 ? 0 : order == 2 ? 1 : 2][g] = 1;
    }
    CHECK(invariants(*ads) == Subspace::span(6, classes));
}

TEST_CASE("lifted action") {
    auto lifted = lift_to_matrices(*swap_action(), 2);
    CHECK(lifted->dim_a() == 8);
    // e1 * E12 sits at index (0*2+1)*2+0
    CHECK(lifted->apply(1, unit_vector(8, 2)) == unit_vector(8, 3));
    CHECK(invariants(*lifted).dim() == 4 * invariants(*swap_action()).dim());
    auto triv = trivial_action(cyclic_group_hopf(3), make_function_algebra(2));
    auto lt = lift_to_matrices(*triv, 2);
    CHECK(invariants(*lt) == Subspace::full(8));
}

TEST_CASE("permutation actions") {
    auto z3 = cyclic_group_hopf(3);
    auto cyc = permutation_action(z3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(cyc->apply(1, Vec{1, 1, 1}) == Vec{1, 1, 1});
    CHECK(invariants(*cyc) == Subspace::span(3, {Vec{1, 1, 1}}));
    auto id = permutation_action(z3, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(id->act == trivial_action(z3, make_function_algebra(2))->act);
    CHECK_THROWS_AS(permutation_action(z3, {{0, 1}, {1, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(permutation_action(z3, {{0, 0}, {0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(permutation_action(fx::sweedler_hopf(), {{0}, {0}, {0}, {0}}), std::invalid_argument);
}

TEST_CASE("invariants form a unital *-subalgebra") {
    for (const auto& r : shipped_actions()) {
        auto inv = invariants(*r);
        CHECK(is_unital_star_subalgebra(*r->alg, inv));
        for (const auto& v : inv.basis()) CHECK(is_invariant(*r, v));
    }
}

TEST_CASE("cocommutative actions preserve the center") {
    for (const auto& r : shipped_actions()) {
        if (!is_cocommutative(*r->hopf)) continue;
        auto z = center(*r->alg);
        for (std::size_t g = 0; g < r->dim_h(); ++g)
            for (const auto& c : z.basis()) CHECK(z.contains(r->apply(g, c)));
    }
}

TEST_CASE("action matrices compose like H") {
    oracle::Sampler s(5);
    auto r = lift_to_matrices(*swap_action(), 2);
    const auto& H = *r->hopf;
    for (int t = 0; t < 10; ++t) {
        Vec g = s.vec(2), h = s.vec(2);
        CHECK(r->matrix(H.mul(g, h)) == r->matrix(g) * r->matrix(h));
    }
}
