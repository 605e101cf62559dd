#include <doctest.h>

#include "fixtures.hpp"
#include "hopfmorita/crossed.hpp"
#include "hopfmorita/morita.hpp"
#include "oracles.hpp"

using namespace hm;

namespace {

ActionPtr inner_z2(const Vec& u) {
    auto m = make_matrix_algebra(2);
    auto c = conjugation_by(m, u);
    std::vector<Vec> act;
    for (std::size_t k = 0; k < 4; ++k) act.push_back(m->basis(k));
    for (std::size_t k = 0; k < 4; ++k) act.push_back(c.matrix.col(k));
    return make_action(cyclic_group_hopf(2), m, act);
}

ActionPtr z3_cycle() { return permutation_action(cyclic_group_hopf(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }

// a (x) g -> diag(a) P(g) from C^2 x| Z_2 to M_2.
Matrix diag_perm() {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        m(i * 2 + i, i * 2 + 0) = 1;
        m(i * 2 + (1 - i), i * 2 + 1) = 1;
    }
    return m;
}

// For a group algebra: (a (x) g)(b (x) h) = a (g |> b) (x) gh.
bool matches_group_formula(const CrossedAlgebra& c) {
    const StarAlgebra& A = *c.base->alg;
    const HopfStarAlgebra& H = c.hopf();
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t g = 0; g < H.dim(); ++g)
            for (std::size_t b = 0; b < A.dim; ++b)
                for (std::size_t h = 0; h < H.dim(); ++h) {
                    Vec expect = kron(A.mul(A.basis(a), c.base->apply(g, A.basis(b))), H.mul(H.basis(g), H.basis(h)));
                    if (c.alg->mul(kron(A.basis(a), H.basis(g)), kron(A.basis(b), H.basis(h))) != expect) return false;
                    // g |> (b (x) h) = (g |> b) (x) g h g^{-1}
                    Vec ad = kron(c.base->apply(g, A.basis(b)), H.mul(H.mul(H.basis(g), H.basis(h)), H.S(H.basis(g))));
                    if (c.canonical_action->apply(g, kron(A.basis(b), H.basis(h))) != ad) return false;
                }
    return true;
}

BimodPtr strip_action(const CovariantBimodule& e) {
    CovariantBimodule c = e;
    c.h_act.reset();
    return make_bimodule(std::move(c));
}

// B<x (x) g, y (x) h> = g_(2) |> B<S^{-1}(g_(1)) |> x, S^{-1}(h_(1)) |> y> (x) g_(3) h_(2)*
std::vector<Vec> left_product_by_transport(const CovariantBimodule& e, std::size_t dbh) {
    const HopfStarAlgebra& H = e.hopf();
    const std::size_t m = e.dim, dh = H.dim();
    std::vector<Vec> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t g = 0; g < dh; ++g)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t h = 0; h < dh; ++h) {
                    Vec v(dbh);
                    for (const auto& s : H.co3(g))
                        for (const auto& t : H.co(h)) {
                            Vec inner = e.lip(e.act(H.S_inv(H.basis(s.a)), e.basis(i)),
                                              e.act(H.S_inv(H.basis(t.left)), e.basis(j)));
                            axpy(v, s.weight * t.weight.conj(),
                                 kron(e.rho_left->apply(s.b, inner), H.mul(H.basis(s.c), H.star(H.basis(t.right)))));
                        }
                    out.push_back(std::move(v));
                }
    return out;
}

}  // namespace

TEST_CASE("trivial action gives the tensor product algebra") {
    auto c2 = make_function_algebra(2);
    auto z2 = cyclic_group_hopf(2);
    auto c = crossed_algebra(trivial_action(z2, c2));
    for (std::size_t p = 0; p < 4; ++p)
        for (std::size_t q = 0; q < 4; ++q) {
            Vec expect = kron(c2->mul(c2->basis(p / 2), c2->basis(q / 2)), z2->mul(z2->basis(p % 2), z2->basis(q % 2)));
            CHECK(c.alg->mult[p * 4 + q] == expect);
        }
    CHECK(c.alg->unit == Vec{1, 0, 1, 0});
}

TEST_CASE("C^2 x| Z_2 is M_2") {
    auto sw = swap_action();
    auto c = crossed_algebra(sw);
    AlgebraMorphism phi(c.alg, make_matrix_algebra(2), diag_perm());
    CHECK(check_morphism(phi).passed());
    // (1 (x) t)(e1 (x) e) = e2 (x) t
    Vec one_t = kron(sw->alg->unit, Vec{0, 1});
    Vec e1_e = kron(Vec{1, 0}, Vec{1, 0});
    CHECK(c.alg->mul(one_t, e1_e) == kron(Vec{0, 1}, Vec{0, 1}));
    CHECK(matches_group_formula(c));
}

TEST_CASE("crossed products of group actions follow the group formula") {
    auto s3 = symmetric_group_s3_hopf();
    auto perm = permutation_action(s3, {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
    for (const auto& rho : {swap_action(), z3_cycle(), inner_z2(Vec{1, 0, 0, -1}), perm}) {
        auto c = crossed_algebra(rho);
        CHECK(matches_group_formula(c));
        CHECK(check_star_algebra(*c.alg).passed());
        CHECK(check_star_action(*c.canonical_action).passed());
        CHECK(rank(c.iota.matrix) == rho->dim_a());
    }
}

TEST_CASE("crossed product for a non-cocommutative Hopf algebra") {
    auto sw = fx::sweedler_hopf();
    auto c = crossed_algebra(adjoint_action(sw));
    CHECK(c.alg->dim == 16);
    CHECK(check_star_algebra(*c.alg).passed());
    auto triv = crossed_algebra(trivial_action(sw, make_function_algebra(2)));
    CHECK(check_star_algebra(*triv.alg).passed());
}

TEST_CASE("universal property") {
    auto sw = swap_action();
    auto c = crossed_algebra(sw);
    CHECK(universal_map(c, c.iota, c.jmath).matrix == Matrix::identity(4));

    auto m2 = make_matrix_algebra(2);
    AlgebraMorphism diag(sw->alg, m2, Matrix::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}}, 2));
    AlgebraMorphism perm(sw->hopf->alg, m2, Matrix::from_rows({{1, 0}, {0, 1}, {0, 1}, {1, 0}}, 2));
    auto u = universal_map(c, diag, perm);
    CHECK(u.matrix == diag_perm());
    CHECK(compose(u, c.iota).matrix == diag.matrix);
    CHECK(compose(u, c.jmath).matrix == perm.matrix);

    // j_B collapsing to the counit cannot implement the swap
    AlgebraMorphism flat(sw->hopf->alg, m2, Matrix::from_rows({{1, 1}, {0, 0}, {0, 0}, {1, 1}}, 2));
    CHECK(morphism_flags(flat).multiplicative);
    CHECK_THROWS_AS(universal_map(c, diag, flat), std::invalid_argument);
}

TEST_CASE("crossed morphisms are functorial") {
    auto sw = swap_action();
    auto c = crossed_algebra(sw);
    CHECK(crossed_morphism(identity_morphism(sw->alg), c, c).matrix == Matrix::identity(4));
    AlgebraMorphism flip(sw->alg, sw->alg, Matrix::from_rows({{0, 1}, {1, 0}}, 2));
    auto lifted = crossed_morphism(flip, c, c);
    CHECK(check_morphism(lifted).passed());
    CHECK(crossed_morphism(compose(flip, flip), c, c).matrix == compose(lifted, lifted).matrix);

    auto cyc = z3_cycle();
    auto c3 = crossed_algebra(cyc);
    std::vector<AlgebraMorphism> rot;
    for (std::size_t k = 0; k < 3; ++k) rot.emplace_back(cyc->alg, cyc->alg, cyc->matrix(k));
    oracle::Sampler s(3);
    for (int trial = 0; trial < 9; ++trial) {
        const auto& a = rot[static_cast<std::size_t>(s.small(0, 2))];
        const auto& b = rot[static_cast<std::size_t>(s.small(0, 2))];
        CHECK(crossed_morphism(compose(a, b), c3, c3).matrix ==
              compose(crossed_morphism(a, c3, c3), crossed_morphism(b, c3, c3)).matrix);
    }
    AlgebraMorphism transposition(cyc->alg, cyc->alg, Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, 3));
    CHECK_THROWS_AS(crossed_morphism(transposition, c3, c3), std::invalid_argument);
}

TEST_CASE("crossed bimodule over a trivial Hopf algebra is the module itself") {
    auto one = cyclic_group_hopf(1);
    auto c2 = make_function_algebra(2);
    auto e = standard_equivalence(trivial_action(one, c2), 2);
    auto x = crossed_bimodule(*e);
    CHECK(x.q.subspace().dim() == 0);
    CHECK(x.module->ip_right == e->ip_right);
    CHECK(x.module->ip_left == e->ip_left);
    CHECK(x.module->left_act == e->left_act);
    CHECK(x.module->right_act == e->right_act);
}

TEST_CASE("standard module over C^2 with the swap") {
    auto sw = swap_action();
    auto e = standard_equivalence(sw, 2);
    auto cb = crossed_algebra(e->rho_left);
    auto ca = crossed_algebra(sw);
    auto raw = crossed_raw(*e, cb, ca);
    CHECK(raw->dim == 8);
    CHECK(degeneracy_space(*raw) == left_degeneracy_space(*raw));
    CHECK(*raw->ip_left == left_product_by_transport(*e, cb.alg->dim));
    auto x = crossed_bimodule(*e, cb, ca);
    Report r = check_equivalence_bimodule(*x.module, true);
    CHECK_MESSAGE(r.passed(), r.first_failure()->name);

    // a (x) g = <e_1 (x) 1, e_1 a (x) g>
    Vec e1 = Vec{1, 1, 0, 0};
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t g = 0; g < 2; ++g) {
            Vec lhs = x.module->ip(x.element(e1, Vec{1, 0}), x.element(e->rmul(e1, sw->alg->basis(a)), unit_vector(2, g)));
            CHECK(lhs == kron(sw->alg->basis(a), unit_vector(2, g)));
        }
}

TEST_CASE("strong equivalence bimodules stay strong after crossing") {
    auto sw = swap_action();
    auto ad = inner_z2(Vec{0, 1, 1, 0});
    std::vector<BimodPtr> shipped = {identity_bimodule(sw), standard_equivalence(sw, 2), identity_bimodule(ad),
                                     conjugate_bimodule(*standard_equivalence(sw, 2)),
                                     identity_bimodule(z3_cycle())};
    for (const auto& e : shipped) {
        REQUIRE(check_equivalence_bimodule(*e, true).passed());
        auto cb = crossed_algebra(e->rho_left);
        auto ca = crossed_algebra(e->rho_right);
        auto raw = crossed_raw(*e, cb, ca);
        CHECK(*raw->ip_left == left_product_by_transport(*e, cb.alg->dim));
        Report r = check_equivalence_bimodule(*crossed_bimodule(*e, cb, ca).module, true);
        CHECK_MESSAGE(r.passed(), r.first_failure()->name);
    }
}

TEST_CASE("crossed bimodule rejects mismatched data") {
    auto sw = swap_action();
    auto e = identity_bimodule(sw);
    auto other = crossed_algebra(trivial_action(sw->hopf, sw->alg));
    auto good = crossed_algebra(sw);
    CHECK_THROWS_AS(crossed_bimodule(*e, other, good), std::invalid_argument);
    CHECK_THROWS_AS(crossed_bimodule(*identity_bimodule(sw->alg)), std::invalid_argument);
}

TEST_CASE("canonical isomorphisms of crossed bimodules") {
    auto sw = swap_action();
    auto std2 = standard_equivalence(sw, 2);
    auto ida = identity_bimodule(sw);

    Report r = verify_crossed_isos(*std2, *ida);
    CHECK_MESSAGE(r.passed(), r.first_failure()->name);
    CHECK(r.find("I1: bijective"));
    CHECK(r.find("I2 inverse: round trip"));
    CHECK(r.find("I3: isometric"));

    Report r2 = verify_crossed_isos(*conjugate_bimodule(*std2), *std2);
    CHECK_MESSAGE(r2.passed(), r2.first_failure()->name);

    auto ad = inner_z2(Vec{1, 0, 0, -1});
    Report r3 = verify_crossed_isos(*identity_bimodule(ad), *identity_bimodule(ad));
    CHECK(r3.passed());

    CHECK_THROWS_AS(verify_crossed_isos(*std2, *std2), std::invalid_argument);
}

TEST_CASE("crossed identity bimodule matches the crossed algebra") {
    auto sw = swap_action();
    auto ca = crossed_algebra(sw);
    auto x = crossed_bimodule(*identity_bimodule(sw), ca, ca);
    auto id = identity_bimodule(ca.canonical_action);
    CHECK(x.q.subspace().dim() == 0);
    CHECK(x.module->left_act == id->left_act);
    CHECK(x.module->right_act == id->right_act);
    CHECK(x.module->ip_right == id->ip_right);
    CHECK(x.module->ip_left == id->ip_left);
    CHECK(x.module->h_act == id->h_act);
}

TEST_CASE("functionals on the crossed product") {
    auto sw = swap_action();
    auto c = crossed_algebra(sw);
    Functional omega{sw->alg, Vec{1, 1}};
    Functional eps{sw->hopf->alg, sw->hopf->counit};
    auto prod = functional_product(omega, eps, c);
    CHECK(prod.row == Vec{1, 1, 1, 1});
    CHECK(oracle::psd_by_elimination(functional_gram(prod)));
    CHECK(check_functional(prod, c.canonical_action.get()).passed());

    Functional chi{sw->hopf->alg, Vec{1, -1}};
    auto twisted = functional_product(omega, chi, c);
    CHECK(check_functional(twisted, c.canonical_action.get()).passed());
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(twisted(c.canonical_action->apply(g, c.alg->basis(k))) == sw->hopf->counit[g] * twisted.row[k]);

    CHECK_THROWS_AS(functional_product(omega, {sw->hopf->alg, Vec{1, 2}}, c), std::invalid_argument);
    CHECK_THROWS_AS(functional_product({sw->alg, Vec{1, 0}}, eps, c), std::invalid_argument);

    // trivial action: omega (x) mu is positive exactly when mu is
    auto tc = crossed_algebra(trivial_action(sw->hopf, sw->alg));
    oracle::Sampler s(4);
    for (int t = 0; t < 10; ++t) {
        Functional w{sw->alg, Vec{s.small(0, 3), s.small(0, 3)}};
        long a = s.small(0, 3), b = s.small(-3, 3);
        Functional mu{sw->hopf->alg, Vec{a, b}};
        bool mu_pos = a >= (b < 0 ? -b : b);
        if (!mu_pos) {
            CHECK_THROWS_AS(functional_product(w, mu, tc), std::invalid_argument);
            continue;
        }
        CHECK(check_functional(functional_product(w, mu, tc)).passed());
    }
}

TEST_CASE("hat representation") {
    auto sw = swap_action();
    auto c = crossed_algebra(sw);
    CovariantRep mult{sw, 2, {Matrix::from_rows({{1, 0}, {0, 0}}, 2), Matrix::from_rows({{0, 0}, {0, 1}}, 2)},
                      {Matrix::identity(2), Matrix::from_rows({{0, 1}, {1, 0}}, 2)}, Matrix::identity(2)};
    auto hat = hat_representation(mult, c);
    CHECK(check_rep(*c.alg, hat).passed());  // faithful, so all four images independent

    auto one = cyclic_group_hopf(1);
    auto triv = trivial_action(one, sw->alg);
    auto ct = crossed_algebra(triv);
    CovariantRep plain{triv, 2, mult.pi, {Matrix::identity(2)}, Matrix::identity(2)};
    auto ht = hat_representation(plain, ct);
    CHECK(ht.images == mult.pi);

    CovariantRep broken = mult;
    broken.h[1] = Matrix::identity(2);
    CHECK_THROWS_AS(hat_representation(broken, c), std::invalid_argument);
}

TEST_CASE("crossing a character-twisted scalar module gives ell of the character automorphism") {
    for (std::size_t n : {2u, 3u, 4u}) {
        auto h = cyclic_group_hopf(n);
        auto scalars = make_scalar_algebra();
        auto triv = trivial_action(h, scalars);
        auto cc = crossed_algebra(triv);
        for (const auto& chi : enumerate_characters(*triv)) {
            auto twisted = twisted_action_right(*identity_bimodule(triv), chi);
            auto x = crossed_bimodule(*twisted, cc, cc);
            auto phi = char_automorphism(chi);
            auto l = ell(AlgebraMorphism(cc.alg, cc.alg, phi.matrix), cc.canonical_action, cc.canonical_action);
            auto iso = find_bimodule_isomorphism(*strip_action(*x.module), *strip_action(*l));
            CHECK(iso.outcome == SearchOutcome::found);
        }
    }
}
