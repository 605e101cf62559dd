#include "hopfmorita/crossed.hpp"

#include <stdexcept>
#include <string>

namespace hm {

namespace {

bool same_action(const StarAction& x, const StarAction& y) {
    return x.hopf->alg->same_structure(*y.hopf->alg) && x.alg->same_structure(*y.alg) && x.act == y.act;
}

std::optional<Matrix> descend_quotient(const Quotient& q, const Matrix& raw) {
    for (const auto& v : q.subspace().basis())
        if (!is_zero(raw * v)) return std::nullopt;
    return raw * q.lift_matrix();
}

void check_map(Report& r, const std::string& name, const Quotient& q, const Matrix& raw,
               const CovariantBimodule& source, const CovariantBimodule& target) {
    auto u = descend_quotient(q, raw);
    r.add(name + ": well-defined", u.has_value());
    if (u) r.merge(name + ": ", check_module_map(source, target, *u));
}

}  // namespace

CrossedAlgebra crossed_algebra(const ActionPtr& rho) {
    if (rho->unchecked) {
        Report c = check_star_action(*rho);
        if (!c.passed()) throw std::invalid_argument("crossed_algebra: action fails " + c.first_failure()->name);
    }
    const StarAlgebra& A = *rho->alg;
    const HopfStarAlgebra& H = *rho->hopf;
    const std::size_t da = A.dim, dh = H.dim(), n = da * dh;

    std::vector<Vec> moved(dh * da);  // b_g |> a_b
    for (std::size_t g = 0; g < dh; ++g)
        for (std::size_t b = 0; b < da; ++b) moved[g * da + b] = rho->apply(g, A.basis(b));

    StarAlgebra x;
    x.dim = n;
    x.mult.assign(n * n, Vec(n));
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t g = 0; g < dh; ++g)
            for (std::size_t b = 0; b < da; ++b)
                for (std::size_t h = 0; h < dh; ++h) {
                    Vec& out = x.mult[(a * dh + g) * n + b * dh + h];
                    for (const auto& t : H.co(g))
                        axpy(out, t.weight,
                             kron(A.mul(A.basis(a), moved[t.left * da + b]), H.mul(H.basis(t.right), H.basis(h))));
                }
    x.unit = kron(A.unit, H.alg->unit);
    x.invol = Matrix(n, n);
    for (std::size_t a = 0; a < da; ++a) {
        Vec sa = A.star(A.basis(a));
        for (std::size_t g = 0; g < dh; ++g) {
            Vec col(n);
            for (const auto& t : H.co(g))
                axpy(col, t.weight.conj(),
                     kron(rho->apply(H.star(H.basis(t.left)), sa), H.star(H.basis(t.right))));
            x.invol.set_col(a * dh + g, col);
        }
    }
    if (A.names.size() == da && H.alg->names.size() == dh)
        for (std::size_t a = 0; a < da; ++a)
            for (std::size_t g = 0; g < dh; ++g) x.names.push_back(A.names[a] + "(x)" + H.alg->names[g]);

    Report axioms = check_star_algebra(x);
    if (!axioms.passed())
        throw std::domain_error("crossed_algebra: product fails " + axioms.first_failure()->name);

    CrossedAlgebra c;
    c.base = rho;
    c.alg = std::make_shared<const StarAlgebra>(std::move(x));
    const StarAlgebra& X = *c.alg;
    Matrix iota(n, da), jm(n, dh);
    for (std::size_t a = 0; a < da; ++a) iota.set_col(a, kron(A.basis(a), H.alg->unit));
    for (std::size_t g = 0; g < dh; ++g) jm.set_col(g, kron(A.unit, H.basis(g)));
    c.iota = AlgebraMorphism(rho->alg, c.alg, iota);
    c.jmath = AlgebraMorphism(H.alg, c.alg, jm);

    // g |> (a (x) h) = g_(1) |> a (x) g_(2) h S(g_(3))
    std::vector<Vec> act;
    act.reserve(dh * n);
    for (std::size_t k = 0; k < dh; ++k)
        for (std::size_t a = 0; a < da; ++a)
            for (std::size_t h = 0; h < dh; ++h) {
                Vec out(n);
                for (const auto& t : H.co3(k))
                    axpy(out, t.weight,
                         kron(moved[t.a * da + a], H.mul(H.mul(H.basis(t.b), H.basis(h)), H.S(H.basis(t.c)))));
                act.push_back(std::move(out));
            }
    try {
        c.canonical_action = make_action(rho->hopf, c.alg, std::move(act));
    } catch (const std::invalid_argument& err) {
        throw std::domain_error(std::string("crossed_algebra: canonical action: ") + err.what());
    }
    for (std::size_t k = 0; k < dh; ++k)
        for (std::size_t p = 0; p < n; ++p) {
            Vec inner(n);
            for (const auto& t : H.co(k))
                axpy(inner, t.weight,
                     X.mul(X.mul(c.jmath(H.basis(t.left)), X.basis(p)), c.jmath(H.S(H.basis(t.right)))));
            if (inner != c.canonical_action->apply(k, X.basis(p)))
                throw std::domain_error("crossed_algebra: canonical action is not inner");
        }
    if (rank(iota) != da) throw std::domain_error("crossed_algebra: iota is not injective");
    for (std::size_t k = 0; k < dh; ++k)
        for (std::size_t a = 0; a < da; ++a)
            if (c.iota(moved[k * da + a]) != c.canonical_action->apply(k, c.iota(A.basis(a))))
                throw std::domain_error("crossed_algebra: iota is not equivariant");
    return c;
}

AlgebraMorphism universal_map(const CrossedAlgebra& c, const AlgebraMorphism& iota_b,
                              const AlgebraMorphism& jmath_b) {
    const StarAlgebra& A = *c.base->alg;
    const HopfStarAlgebra& H = c.hopf();
    if (!iota_b.source->same_structure(A) || !jmath_b.source->same_structure(*H.alg))
        throw std::invalid_argument("universal_map: sources are not A and H");
    if (!iota_b.target->same_structure(*jmath_b.target))
        throw std::invalid_argument("universal_map: maps land in different algebras");
    for (const auto* f : {&iota_b, &jmath_b}) {
        MorphismFlags fl = morphism_flags(*f);
        if (!fl.multiplicative || !fl.unital || !fl.star)
            throw std::invalid_argument("universal_map: maps must be unital *-homomorphisms");
    }
    const StarAlgebra& T = *iota_b.target;
    for (std::size_t k = 0; k < H.dim(); ++k)
        for (std::size_t a = 0; a < A.dim; ++a) {
            Vec rhs(T.dim);
            for (const auto& t : H.co(k))
                axpy(rhs, t.weight,
                     T.mul(T.mul(jmath_b(H.basis(t.left)), iota_b(A.basis(a))), jmath_b(H.S(H.basis(t.right)))));
            if (iota_b(c.base->apply(k, A.basis(a))) != rhs)
                throw std::invalid_argument("universal_map: pair is not compatible with the action");
        }
    Matrix m(T.dim, c.alg->dim);
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t g = 0; g < H.dim(); ++g)
            m.set_col(a * H.dim() + g, T.mul(iota_b(A.basis(a)), jmath_b(H.basis(g))));
    return AlgebraMorphism(c.alg, iota_b.target, std::move(m));
}

AlgebraMorphism crossed_morphism(const AlgebraMorphism& phi, const CrossedAlgebra& ca, const CrossedAlgebra& cb) {
    if (!phi.source->same_structure(*ca.base->alg) || !phi.target->same_structure(*cb.base->alg))
        throw std::invalid_argument("crossed_morphism: morphism does not match the crossed products");
    if (!ca.hopf().alg->same_structure(*cb.hopf().alg))
        throw std::invalid_argument("crossed_morphism: different Hopf algebras");
    MorphismFlags fl = morphism_flags(phi);
    if (!fl.multiplicative || !fl.unital || !fl.star)
        throw std::invalid_argument("crossed_morphism: not a unital *-homomorphism");
    const StarAlgebra& A = *ca.base->alg;
    for (std::size_t g = 0; g < ca.hopf().dim(); ++g)
        for (std::size_t a = 0; a < A.dim; ++a)
            if (phi(ca.base->apply(g, A.basis(a))) != cb.base->apply(g, phi(A.basis(a))))
                throw std::invalid_argument("crossed_morphism: morphism is not equivariant");
    return AlgebraMorphism(ca.alg, cb.alg, kron(phi.matrix, Matrix::identity(ca.hopf().dim())));
}

BimodPtr crossed_raw(const CovariantBimodule& e, const CrossedAlgebra& cb, const CrossedAlgebra& ca) {
    e.validate();
    if (!e.has_h()) throw std::invalid_argument("crossed_bimodule: module carries no H-action");
    if (!same_action(*e.rho_left, *cb.base) || !same_action(*e.rho_right, *ca.base))
        throw std::invalid_argument("crossed_bimodule: crossed products do not match the module's actions");
    const HopfStarAlgebra& H = e.hopf();
    const StarAlgebra& A = *e.right;
    const StarAlgebra& B = *e.left;
    const std::size_t m = e.dim, dh = H.dim(), big = m * dh;
    auto hb = [&](std::size_t g) { return H.basis(g); };

    CovariantBimodule x;
    x.left = cb.alg;
    x.right = ca.alg;
    x.dim = big;
    x.rho_left = cb.canonical_action;
    x.rho_right = ca.canonical_action;

    // (b (x) k)(x_i (x) h) = b (k_(1) |> x_i) (x) k_(2) h
    x.left_act.reserve(B.dim * dh * big);
    for (std::size_t p = 0; p < B.dim; ++p)
        for (std::size_t k = 0; k < dh; ++k)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t h = 0; h < dh; ++h) {
                    Vec out(big);
                    for (const auto& t : H.co(k))
                        axpy(out, t.weight,
                             kron(e.lmul(B.basis(p), e.act(t.left, e.basis(i))), H.mul(hb(t.right), hb(h))));
                    x.left_act.push_back(std::move(out));
                }
    // (x_i (x) g)(a (x) h) = x_i (g_(1) |> a) (x) g_(2) h
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t g = 0; g < dh; ++g)
            for (std::size_t a = 0; a < A.dim; ++a)
                for (std::size_t h = 0; h < dh; ++h) {
                    Vec out(big);
                    for (const auto& t : H.co(g))
                        axpy(out, t.weight,
                             kron(e.rmul(e.basis(i), e.rho_right->apply(t.left, A.basis(a))),
                                  H.mul(hb(t.right), hb(h))));
                    x.right_act.push_back(std::move(out));
                }
    // <x (x) g, y (x) h> = g_(1)* |> <x, y> (x) g_(2)* h
    const std::size_t dah = ca.alg->dim;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t g = 0; g < dh; ++g)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t h = 0; h < dh; ++h) {
                    Vec out(dah);
                    Vec xy = e.ip(e.basis(i), e.basis(j));
                    for (const auto& t : H.co(g))
                        axpy(out, t.weight.conj(),
                             kron(e.rho_right->apply(H.star(hb(t.left)), xy), H.mul(H.star(hb(t.right)), hb(h))));
                    x.ip_right.push_back(std::move(out));
                }
    // B<x (x) g, y (x) h> = B<x, S(g_(1))* S^{-1}(h_(1)) |> y> (x) g_(2) h_(2)*
    if (e.ip_left) {
        const std::size_t dbh = cb.alg->dim;
        x.ip_left.emplace();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t g = 0; g < dh; ++g)
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t h = 0; h < dh; ++h) {
                        Vec out(dbh);
                        for (const auto& s : H.co(g))
                            for (const auto& t : H.co(h)) {
                                Vec k = H.mul(H.star(H.S(hb(s.left))), H.S_inv(hb(t.left)));
                                axpy(out, s.weight * t.weight.conj(),
                                     kron(e.lip(e.basis(i), e.act(k, e.basis(j))), H.mul(hb(s.right), H.star(hb(t.right)))));
                            }
                        x.ip_left->push_back(std::move(out));
                    }
    }
    // g |> (x (x) h) = g_(1) |> x (x) g_(2) h S(g_(3))
    x.h_act.emplace();
    for (std::size_t k = 0; k < dh; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t h = 0; h < dh; ++h) {
                Vec out(big);
                for (const auto& t : H.co3(k))
                    axpy(out, t.weight,
                         kron(e.act(t.a, e.basis(i)), H.mul(H.mul(hb(t.b), hb(h)), H.S(hb(t.c)))));
                x.h_act->push_back(std::move(out));
            }
    return make_bimodule(std::move(x));
}

CrossedBimodule crossed_bimodule(const CovariantBimodule& e, const CrossedAlgebra& cb, const CrossedAlgebra& ca) {
    QuotientModule qm = quotient_module(*crossed_raw(e, cb, ca));
    return {std::move(qm.module), std::move(qm.q)};
}

CrossedBimodule crossed_bimodule(const CovariantBimodule& e) {
    if (!e.has_h()) throw std::invalid_argument("crossed_bimodule: module carries no H-action");
    return crossed_bimodule(e, crossed_algebra(e.rho_left), crossed_algebra(e.rho_right));
}

Report verify_crossed_isos(const CovariantBimodule& f, const CovariantBimodule& e) {
    if (!f.has_h() || !e.has_h()) throw std::invalid_argument("verify_crossed_isos: both modules need H-actions");
    if (!same_action(*f.rho_right, *e.rho_left))
        throw std::invalid_argument("verify_crossed_isos: modules are not composable");
    const HopfStarAlgebra& H = e.hopf();
    const std::size_t dh = H.dim();
    CrossedAlgebra cc = crossed_algebra(f.rho_left);
    CrossedAlgebra cb = crossed_algebra(e.rho_left);
    CrossedAlgebra ca = crossed_algebra(e.rho_right);
    Report r;

    // I1
    {
        CrossedBimodule fh = crossed_bimodule(f, cc, cb);
        CrossedBimodule eh = crossed_bimodule(e, cb, ca);
        TensorProduct fe = internal_tensor(f, e);
        CrossedBimodule feh = crossed_bimodule(*fe.module, cc, ca);
        TensorProduct t = internal_tensor(*fh.module, *eh.module);
        const std::size_t rf = f.dim * dh, re = e.dim * dh;
        // image of (x_i (x) g) (x) (y_j (x) h), raw indices
        std::vector<Vec> img(rf * re);
        for (std::size_t i = 0; i < f.dim; ++i)
            for (std::size_t g = 0; g < dh; ++g)
                for (std::size_t j = 0; j < e.dim; ++j)
                    for (std::size_t h = 0; h < dh; ++h) {
                        Vec out(feh.module->dim);
                        for (const auto& s : H.co(g))
                            axpy(out, s.weight,
                                 feh.element(fe.element(f.basis(i), e.act(s.left, e.basis(j))),
                                             H.mul(H.basis(s.right), H.basis(h))));
                        img[(i * dh + g) * re + j * dh + h] = std::move(out);
                    }
        Matrix raw(feh.module->dim, fh.module->dim * eh.module->dim);
        for (std::size_t p = 0; p < fh.module->dim; ++p) {
            Vec u = fh.q.lift(unit_vector(fh.module->dim, p));
            for (std::size_t q = 0; q < eh.module->dim; ++q) {
                Vec v = eh.q.lift(unit_vector(eh.module->dim, q));
                Vec col(feh.module->dim);
                for (std::size_t a = 0; a < rf; ++a) {
                    if (u[a].is_zero()) continue;
                    for (std::size_t b = 0; b < re; ++b)
                        if (!v[b].is_zero()) axpy(col, u[a] * v[b], img[a * re + b]);
                }
                raw.set_col(p * eh.module->dim + q, col);
            }
        }
        check_map(r, "I1", t.q, raw, *t.module, *feh.module);
    }

    // I2 and its inverse
    if (e.ip_left) {
        CrossedBimodule eh = crossed_bimodule(e, cb, ca);
        BimodPtr conj_eh = conjugate_bimodule(*eh.module);
        BimodPtr ce = conjugate_bimodule(e);
        CrossedBimodule ceh = crossed_bimodule(*ce, ca, cb);
        const std::size_t n = eh.module->dim, k = ceh.module->dim;
        // conj(x (x) g) -> conj(S^{-1}(g_(1)) |> x) (x) g_(2)*
        Matrix fwd(k, n);
        for (std::size_t p = 0; p < n; ++p) {
            Vec u = eh.q.lift(unit_vector(n, p));
            Vec col(k);
            for (std::size_t i = 0; i < e.dim; ++i)
                for (std::size_t g = 0; g < dh; ++g) {
                    const Gauss& c = u[i * dh + g];
                    if (c.is_zero()) continue;
                    for (const auto& s : H.co(g))
                        axpy(col, c.conj() * s.weight.conj(),
                             ceh.element(conj(e.act(H.S_inv(H.basis(s.left)), e.basis(i))), H.star(H.basis(s.right))));
                }
            fwd.set_col(p, col);
        }
        r.merge("I2: ", check_module_map(*conj_eh, *ceh.module, fwd));
        // conj(x) (x) g -> conj(g_(1)* |> x (x) g_(2)*)
        Matrix back_raw(n, e.dim * dh);
        for (std::size_t i = 0; i < e.dim; ++i)
            for (std::size_t g = 0; g < dh; ++g) {
                Vec col(n);
                for (const auto& s : H.co(g))
                    axpy(col, s.weight,
                         conj(eh.element(e.act(H.star(H.basis(s.left)), e.basis(i)), H.star(H.basis(s.right)))));
                back_raw.set_col(i * dh + g, col);
            }
        auto back = descend_quotient(ceh.q, back_raw);
        r.add("I2 inverse: well-defined", back.has_value());
        if (back)
            r.add("I2 inverse: round trip", *back * fwd == Matrix::identity(n) && fwd * *back == Matrix::identity(k));
    }

    // I3
    {
        CrossedBimodule ah = crossed_bimodule(*identity_bimodule(e.rho_right), ca, ca);
        BimodPtr id = identity_bimodule(ca.canonical_action);
        check_map(r, "I3", ah.q, Matrix::identity(ca.alg->dim), *ah.module, *id);
    }
    return r;
}

Functional functional_product(const Functional& omega, const Functional& mu, const CrossedAlgebra& c) {
    if (!omega.algebra->same_structure(*c.base->alg) || !mu.algebra->same_structure(*c.hopf().alg))
        throw std::invalid_argument("functional_product: functionals do not match the crossed product");
    Report ro = check_functional(omega, c.base.get());
    if (!ro.passed()) throw std::invalid_argument("functional_product: omega is not " + ro.first_failure()->name);
    if (!check_functional(mu).passed()) throw std::invalid_argument("functional_product: mu is not positive");
    return {c.alg, kron(omega.row, mu.row)};
}

FaithfulRep hat_representation(const CovariantRep& r, const CrossedAlgebra& c) {
    if (!same_action(*r.rho, *c.base))
        throw std::invalid_argument("hat_representation: representation belongs to another action");
    Report chk = check_covariant_rep(r);
    if (!chk.passed())
        throw std::invalid_argument("hat_representation: representation is not " + chk.first_failure()->name);
    FaithfulRep out{r.dim, {}, r.gram};
    for (std::size_t a = 0; a < r.pi.size(); ++a)
        for (std::size_t g = 0; g < r.h.size(); ++g) out.images.push_back(r.pi[a] * r.h[g]);
    return out;
}

}  // namespace hm
