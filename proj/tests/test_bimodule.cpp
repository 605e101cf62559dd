#include <doctest.h>

#include "fixtures.hpp"
#include "hopfmorita/bimodule.hpp"
#include "oracles.hpp"

using namespace hm;

namespace {

ActionPtr scalar_trivial() { return trivial_action(cyclic_group_hopf(2), make_scalar_algebra()); }

bool same_data(const CovariantBimodule& a, const CovariantBimodule& b) {
    return a.dim == b.dim && a.left->same_structure(*b.left) && a.right->same_structure(*b.right) &&
           a.left_act == b.left_act && a.right_act == b.right_act && a.ip_right == b.ip_right &&
           a.ip_left == b.ip_left && a.h_act == b.h_act;
}

bool has_covariance_failure(const Report& r) {
    for (const auto& it : r.items())
        if (!it.ok && it.name.find("covariance") != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("standard examples are covariant modules") {
    auto c2 = standard_equivalence(scalar_trivial(), 2);
    CHECK(check_covariant_module(*c2).passed());
    auto a2 = standard_equivalence(swap_action(), 2);
    CHECK(a2->dim == 4);
    CHECK(a2->left->dim == 8);
    CHECK(check_covariant_module(*a2).passed());
    CHECK(check_covariant_module(*identity_bimodule(swap_action())).passed());
}

TEST_CASE("corrupted H-action breaks covariance") {
    auto a2 = standard_equivalence(swap_action(), 2);
    CovariantBimodule bad = *a2;
    (*bad.h_act)[1 * 4 + 1] = Vec{0, 0, 1, 0};
    auto r = check_covariant_module(bad);
    CHECK_FALSE(r.passed());
    CHECK(has_covariance_failure(r));
    CHECK(r.find("left module")->ok);
    CHECK(r.find("compatibility")->ok);
}

TEST_CASE("standard equivalence data") {
    auto c2 = standard_equivalence(scalar_trivial(), 2);
    CHECK(c2->ip(Vec{1, 0}, Vec{0, 1}) == Vec{0});
    CHECK(c2->ip(Vec{Gauss::i(), 0}, Vec{1, 0}) == Vec{-Gauss::i()});
    // n = 1 is the identity bimodule
    auto one = standard_equivalence(swap_action(), 1);
    CHECK(same_data(*one, *identity_bimodule(swap_action())));
    // E12 (x) e1 . (e_2 (x) e1) = e_1 (x) e1
    auto a2 = standard_equivalence(swap_action(), 2);
    CHECK(a2->lmul(unit_vector(8, 2), unit_vector(4, 2)) == unit_vector(4, 0));
    CHECK(a2->lmul(unit_vector(8, 2), unit_vector(4, 0)) == Vec(4));
}

TEST_CASE("degeneracy and quotients") {
    auto a2 = standard_equivalence(swap_action(), 2);
    CHECK(degeneracy_space(*a2).dim() == 0);
    auto q = quotient_module(*a2);
    CHECK(same_data(*q.module, *a2));

    auto padded = pad_with_null(*a2);
    CHECK(check_covariant_module(*padded).has_failure("compatibility"));
    std::vector<Vec> second;
    for (std::size_t i = 4; i < 8; ++i) second.push_back(unit_vector(8, i));
    CHECK(degeneracy_space(*padded) == Subspace::span(8, second));
    auto qp = quotient_module(*padded);
    CHECK(same_data(*qp.module, *a2));
}

TEST_CASE("complete positivity") {
    auto a2 = standard_equivalence(swap_action(), 2);
    CHECK(complete_positivity_check(*a2));
    CHECK(complete_positivity_left(*a2));
    CovariantBimodule neg = *a2;
    for (auto& v : neg.ip_right) v = -v;
    CHECK_FALSE(complete_positivity_check(neg));

    auto m2 = make_matrix_algebra(2);
    oracle::Sampler s(17);
    for (int t = 0; t < 10; ++t) {
        Vec b = s.vec(4);
        Vec h = m2->mul(m2->star(b), b);
        CHECK(complete_positivity_check(*fx::weighted_module(m2, {{h}})));
        CHECK_FALSE(complete_positivity_check(*fx::weighted_module(m2, {{-m2->unit}})));
    }
}

TEST_CASE("conjugate bimodule") {
    auto a2 = standard_equivalence(swap_action(), 2);
    auto c = conjugate_bimodule(*a2);
    CHECK(c->left->same_structure(*a2->right));
    CHECK(*c->ip_left == a2->ip_right);
    CHECK(c->ip_right == *a2->ip_left);
    CHECK(check_covariant_module(*c).passed());
    CHECK(check_equivalence_bimodule(*c, true).passed());
    CHECK(same_data(*conjugate_bimodule(*c), *a2));

    auto triv = standard_equivalence(scalar_trivial(), 2);
    auto ct = conjugate_bimodule(*triv);
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t i = 0; i < 2; ++i) CHECK(ct->act(g, unit_vector(2, i)) == unit_vector(2, i));

    CovariantBimodule one_sided = *a2;
    one_sided.ip_left.reset();
    CHECK_THROWS_AS(conjugate_bimodule(one_sided), std::invalid_argument);
    CHECK(complete_positivity_check(*a2) == complete_positivity_check(*c));
}

TEST_CASE("internal tensor products") {
    auto rho = swap_action();
    auto a2 = standard_equivalence(rho, 2);
    auto ida = identity_bimodule(rho);

    auto t = internal_tensor(*a2, *ida);
    CHECK(t.module->dim == 4);
    CHECK(check_covariant_module(*t.module).passed());

    auto c = conjugate_bimodule(*a2);
    auto ce = internal_tensor(*c, *a2);
    CHECK(ce.q.ambient() == 16);
    CHECK(ce.module->dim == 2);
    CHECK(check_equivalence_bimodule(*ce.module, true).passed());

    auto sc = standard_equivalence(scalar_trivial(), 2);
    auto sct = internal_tensor(*conjugate_bimodule(*sc), *sc);
    CHECK(sct.q.ambient() == 4);
    CHECK(sct.module->dim == 1);

    CHECK_THROWS_AS(internal_tensor(*a2, *a2), std::invalid_argument);
}

TEST_CASE("adjointable operators") {
    auto ida = identity_bimodule(make_function_algebra(2));
    auto ops = adjointable_operators(*ida);
    CHECK(ops.size() == 2);
    std::vector<Vec> flat, lm;
    for (const auto& op : ops) {
        CHECK(is_adjoint_pair(*ida, op.matrix, *op.adjoint));
        CHECK(is_right_linear(*ida, op.matrix));
        flat.push_back(op.matrix.data());
    }
    for (std::size_t p = 0; p < 2; ++p) lm.push_back(ida->lmul_matrix(unit_vector(2, p)).data());
    CHECK(Subspace::span(4, flat) == Subspace::span(4, lm));

    auto c2 = standard_equivalence(scalar_trivial(), 2);
    auto ops2 = adjointable_operators(*c2);
    CHECK(ops2.size() == 4);
    std::vector<Vec> flat2;
    for (const auto& op : ops2) flat2.push_back(op.matrix.data());
    CHECK(Subspace::span(4, flat2).contains(Matrix::identity(2).data()));

    auto padded = pad_with_null(*c2);
    CHECK_THROWS_AS(adjointable_operators(*padded), std::domain_error);
}

TEST_CASE("rank-one operators and the induced action") {
    auto a2 = standard_equivalence(swap_action(), 2);
    const auto& H = a2->hopf();
    oracle::Sampler s(23);
    for (int t = 0; t < 5; ++t) {
        Vec x = s.vec(4), y = s.vec(4), z = s.vec(4);
        auto th = rank_one(*a2, x, y);
        CHECK(th.matrix * z == a2->rmul(x, a2->ip(y, z)));
        CHECK(is_adjoint_pair(*a2, th.matrix, rank_one(*a2, y, x).matrix));
        CHECK(*th.adjoint == rank_one(*a2, y, x).matrix);
        for (std::size_t g = 0; g < 2; ++g) {
            Matrix expect(4, 4);
            for (const auto& c : H.co(g))
                expect += c.weight * rank_one(*a2, a2->act(c.left, x), a2->act(H.star(H.S(H.basis(c.right))), y)).matrix;
            auto acted = adjoint_on_operators(*a2, H.basis(g), th);
            CHECK(acted.matrix == expect);
            CHECK(is_adjoint_pair(*a2, acted.matrix, *acted.adjoint));
        }
    }
    auto c2 = standard_equivalence(scalar_trivial(), 2);
    Operator op{Matrix::from_rows({{1, 2}, {3, Gauss::i()}}, 2), std::nullopt};
    CHECK(adjoint_on_operators(*c2, c2->hopf().basis(1), op).matrix == op.matrix);
}

TEST_CASE("equivalence bimodule certification") {
    CHECK(check_equivalence_bimodule(*standard_equivalence(swap_action(), 2), true).passed());
    CHECK(check_equivalence_bimodule(*identity_bimodule(swap_action()), true).passed());
    CHECK(check_equivalence_bimodule(*identity_bimodule(make_matrix_algebra(2)), true).passed());

    // keep only the diagonal part of the left inner product
    auto a2 = standard_equivalence(swap_action(), 2);
    CovariantBimodule diag = *a2;
    for (auto& v : *diag.ip_left)
        for (std::size_t k = 0; k < 8; ++k) {
            std::size_t rc = k / 2;
            if (rc == 1 || rc == 2) v[k] = 0;
        }
    auto r = check_equivalence_bimodule(diag, false);
    CHECK(r.has_failure("left inner product full"));
    CHECK(r.find("right inner product full")->ok);

    CovariantBimodule one_sided = *a2;
    one_sided.ip_left.reset();
    CHECK(check_equivalence_bimodule(one_sided, true).has_failure("left inner product present"));
}

TEST_CASE("canonical isomorphisms") {
    auto rho = swap_action();
    auto a2 = standard_equivalence(rho, 2);
    auto ida = identity_bimodule(rho);
    auto idm = identity_bimodule(a2->rho_left);
    auto r = verify_canonical_isos(*a2, *ida, idm.get());
    for (const auto& it : r.items()) {
        INFO(it.name << " " << it.detail);
        CHECK(it.ok);
    }
    CHECK(r.find("E unit left: isometric"));
    CHECK(r.find("associativity: equivariant"));
    CHECK(r.find("F inverse right: bijective"));

    // a map that is not isometric is reported
    Matrix twice = Gauss(2) * Matrix::identity(4);
    auto bad = check_module_map(*a2, *a2, twice);
    CHECK(bad.has_failure("isometric"));
    CHECK(bad.find("left linear")->ok);
}

TEST_CASE("tensor product inner products are completely positive") {
    auto rho = swap_action();
    auto a2 = standard_equivalence(rho, 2);
    auto c = conjugate_bimodule(*a2);
    auto t = internal_tensor(*a2, *c);
    CHECK(t.module->dim == 8);
    CHECK(complete_positivity_check(*t.module));
    CHECK(complete_positivity_left(*t.module));
}
