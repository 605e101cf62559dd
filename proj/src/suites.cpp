#include "hopfmorita/suites.hpp"

#include "hopfmorita/crossed.hpp"
#include "hopfmorita/morita.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace hm {

namespace {

void witness(Report& r, const std::string& name, const CovariantBimodule& e, const CovariantBimodule& f,
             std::uint64_t seed) {
    IsoSearch s = find_bimodule_isomorphism(e, f, seed);
    r.add(name + ": isomorphism found", s.outcome == SearchOutcome::found, to_string(s.outcome));
    if (s.witness) r.merge(name + ": ", check_module_map(e, f, *s.witness));
}

// Z_2 acting on M_2 by conjugation with a unitary involution.
ActionPtr inner_z2(const Vec& u) {
    auto m = make_matrix_algebra(2);
    auto c = conjugation_by(m, u);
    std::vector<Vec> act;
    for (std::size_t k = 0; k < 4; ++k) act.push_back(m->basis(k));
    for (std::size_t k = 0; k < 4; ++k) act.push_back(c.matrix.col(k));
    return make_action(cyclic_group_hopf(2), m, act);
}

Report equivalence_relation(std::uint64_t seed) {
    Report r;
    auto sw = swap_action();
    auto e = standard_equivalence(sw, 2);
    auto ce = conjugate_bimodule(*e);
    auto ida = identity_bimodule(sw);
    auto idb = identity_bimodule(e->rho_left);
    r.merge("reflexive A: ", check_equivalence_bimodule(*ida, true));
    r.merge("standard: ", check_equivalence_bimodule(*e, true));
    r.merge("symmetric conj(standard): ", check_equivalence_bimodule(*ce, true));
    auto ce_e = internal_tensor(*ce, *e);
    auto e_ce = internal_tensor(*e, *ce);
    witness(r, "conj(E) (x) E = A", *ce_e.module, *ida, seed);
    witness(r, "E (x) conj(E) = M2(A)", *e_ce.module, *idb, seed);
    r.merge("transitive E (x) A: ", check_equivalence_bimodule(*internal_tensor(*e, *ida).module, true));
    r.merge("transitive M2(A) (x) E: ", check_equivalence_bimodule(*internal_tensor(*idb, *e).module, true));
    r.merge("", verify_canonical_isos(*ce, *e, e.get()));
    return r;
}

Report canonical_isos(std::uint64_t) {
    Report r;
    auto sw = swap_action();
    auto e = standard_equivalence(sw, 2);
    auto ce = conjugate_bimodule(*e);
    r.merge("standard triple: ", verify_canonical_isos(*ce, *e, e.get()));
    r.merge("standard reversed: ", verify_canonical_isos(*e, *ce, ce.get()));
    auto ida = identity_bimodule(sw);
    r.merge("identity triple: ", verify_canonical_isos(*ida, *ida, ida.get()));
    auto ad = inner_z2(Vec{0, 1, 1, 0});
    auto idm = identity_bimodule(ad);
    r.merge("inner action triple: ", verify_canonical_isos(*idm, *idm, idm.get()));
    return r;
}

Report kernel_pic(std::uint64_t seed) {
    Report r;
    auto sw = swap_action();
    auto e = standard_equivalence(sw, 2);
    const StarAction& rb = *e->rho_left;
    std::vector<Twist> members;
    for (const auto& u : unitary_central_samples(*rb.alg, seed)) {
        Twist b{rb.hopf, rb.alg, Matrix(rb.dim_a(), 2)};
        b.m.set_col(0, rb.alg->unit);
        b.m.set_col(1, u);
        if (!is_U_member(b, rb).passed()) continue;
        bool seen = false;
        for (const auto& x : members) seen = seen || x == b;
        if (!seen) members.push_back(std::move(b));
    }
    r.add("members enumerated", !members.empty(), std::to_string(members.size()) + " twists");
    r.add("identity twist acts trivially",
          twisted_action_left(*e, twist_unit(rb.hopf, rb.alg))->h_act == e->h_act);
    std::vector<BimodPtr> twisted;
    for (const auto& b : members) twisted.push_back(twisted_action_left(*e, b));
    for (std::size_t k = 0; k < members.size(); ++k) {
        const std::string tag = "b" + std::to_string(k);
        r.add(tag + ": covariant", check_covariant_module(*twisted[k]).passed());
        Twist diff = action_difference(*twisted[k], *e);
        r.add(tag + ": difference recovers b", diff == members[k]);
        for (std::size_t l = 0; l < members.size(); ++l) {
            const std::string pair = tag + ", b" + std::to_string(l);
            auto twice = twisted_action_left(*twisted[l], members[k]);
            r.add(pair + ": composition", twice->h_act == twisted_action_left(*e, convolve(members[k], members[l]))->h_act);
            if (l != k) r.add(pair + ": distinct actions", twisted[k]->h_act != twisted[l]->h_act);
        }
    }
    return r;
}

Report crossed_isos(std::uint64_t) {
    Report r;
    auto sw = swap_action();
    auto e = standard_equivalence(sw, 2);
    auto ida = identity_bimodule(sw);
    r.merge("standard, A: ", verify_crossed_isos(*e, *ida));
    r.merge("conj(standard), standard: ", verify_crossed_isos(*conjugate_bimodule(*e), *e));
    auto idm = identity_bimodule(inner_z2(Vec{1, 0, 0, -1}));
    r.merge("inner action: ", verify_crossed_isos(*idm, *idm));
    return r;
}

Report appendix_groups(std::uint64_t seed) {
    Report r;
    auto z4 = cyclic_group_hopf(4);
    const std::vector<std::pair<std::string, ActionPtr>> cases = {
        {"Z2 on C2", swap_action()}, {"Z4 on M2", trivial_action(z4, make_matrix_algebra(2))}};
    for (const auto& [tag, rho] : cases) {
        const std::string p = tag + ": ";
        std::vector<Twist> gens = enumerate_characters(*rho);
        r.add(p + "characters enumerated", !gens.empty(), std::to_string(gens.size()) + " characters");
        const Subspace zinv = center(*rho->alg).intersect(invariants(*rho));
        const Twist e = twist_unit(rho->hopf, rho->alg);
        std::vector<Vec> kernel_samples;
        std::vector<Vec> units;
        for (const auto& u : unitary_central_samples(*rho->alg, seed)) {
            if (units.size() == 10) break;
            units.push_back(u);
        }
        bool kernel_ok = true, hom_ok = true;
        for (const auto& u : units) {
            Twist h = hat(u, *rho);
            gens.push_back(h);
            if (h == e) kernel_samples.push_back(u);
            kernel_ok = kernel_ok && (h == e) == zinv.contains(u);
            for (const auto& v : units)
                hom_ok = hom_ok && hat(rho->alg->mul(u, v), *rho) == convolve(h, hat(v, *rho));
        }
        r.add(p + "hat kernel is the invariant center", kernel_ok &&
                  Subspace::span(rho->alg->dim, kernel_samples) == zinv);
        r.add(p + "hat multiplicative", hom_ok);
        auto closure = convolution_closure(gens);
        r.merge(p, check_group_axioms(closure, *rho));
        bool inv_ok = true;
        for (const auto& a : closure) inv_ok = inv_ok && convolve(a, twist_inverse(a, *rho)) == e;
        r.add(p + "a * a^-1 = e", inv_ok, std::to_string(closure.size()) + " members");
    }
    return r;
}

Report crossed_morita(std::uint64_t seed) {
    Report r;
    auto sw = swap_action();
    auto c = crossed_algebra(sw);
    r.merge("C2 x| Z2: ", check_star_algebra(*c.alg));
    auto m2 = make_matrix_algebra(2);
    AlgebraMorphism diag(sw->alg, m2, Matrix::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}}, 2));
    AlgebraMorphism perm(sw->hopf->alg, m2, Matrix::from_rows({{1, 0}, {0, 1}, {0, 1}, {1, 0}}, 2));
    r.merge("C2 x| Z2 -> M2: ", check_morphism(universal_map(c, diag, perm)));
    auto e = standard_equivalence(sw, 2);
    r.merge("crossed standard: ", check_equivalence_bimodule(*crossed_bimodule(*e).module, true));
    r.merge("crossed conj(standard): ",
            check_equivalence_bimodule(*crossed_bimodule(*conjugate_bimodule(*e)).module, true));

    // scalar modules twisted by characters of Z_4
    auto z4 = cyclic_group_hopf(4);
    auto triv = trivial_action(z4, make_scalar_algebra());
    auto cc = crossed_algebra(triv);
    auto chars = enumerate_characters(*triv);
    r.add("Z4 characters", chars.size() == 4, std::to_string(chars.size()));
    std::vector<Matrix> autos;
    for (std::size_t k = 0; k < chars.size(); ++k) {
        auto x = crossed_bimodule(*twisted_action_right(*identity_bimodule(triv), chars[k]), cc, cc);
        auto phi = char_automorphism(chars[k]);
        autos.push_back(phi.matrix);
        auto l = ell(AlgebraMorphism(cc.alg, cc.alg, phi.matrix), cc.canonical_action, cc.canonical_action);
        CovariantBimodule xs = *x.module, ls = *l;
        xs.h_act.reset();
        ls.h_act.reset();
        witness(r, "chi" + std::to_string(k) + " crossed = ell", xs, ls, seed);
    }
    bool injective = true;
    for (std::size_t a = 0; a < autos.size(); ++a)
        for (std::size_t b = a + 1; b < autos.size(); ++b) injective = injective && autos[a] != autos[b];
    r.add("chi -> Phi injective", injective);
    return r;
}

using SuiteFn = Report (*)(std::uint64_t);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> m = {
        {"equivalence-relation", equivalence_relation}, {"canonical-isos", canonical_isos},
        {"kernel-pic", kernel_pic},                     {"crossed-isos", crossed_isos},
        {"appendix-groups", appendix_groups},           {"crossed-morita", crossed_morita},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"equivalence-relation", "canonical-isos", "kernel-pic",
                                                   "crossed-isos",         "appendix-groups", "crossed-morita"};
    return names;
}

bool has_suite(const std::string& name) { return registry().count(name) != 0; }

Report run_suite(const std::string& name, std::uint64_t seed) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::out_of_range("unknown suite \"" + name + "\"");
    return it->second(seed);
}

}  // namespace hm
