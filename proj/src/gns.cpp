#include "hopfmorita/gns.hpp"

#include "hopfmorita/crossed.hpp"

#include <stdexcept>

namespace hm {

Matrix functional_gram(const Functional& omega) {
    const StarAlgebra& A = *omega.algebra;
    if (omega.row.size() != A.dim) throw std::invalid_argument("functional: row length differs from algebra dimension");
    Matrix g(A.dim, A.dim);
    for (std::size_t i = 0; i < A.dim; ++i) {
        Vec si = A.star(A.basis(i));
        for (std::size_t j = 0; j < A.dim; ++j) g(i, j) = omega(A.mul(si, A.basis(j)));
    }
    return g;
}

Report check_functional(const Functional& omega, const StarAction* rho) {
    Report r;
    r.add("positive", psd_check(functional_gram(omega)));
    if (rho) {
        if (!rho->alg->same_structure(*omega.algebra))
            throw std::invalid_argument("check_functional: action on another algebra");
        const HopfStarAlgebra& H = *rho->hopf;
        bool inv = true;
        for (std::size_t g = 0; g < H.dim() && inv; ++g)
            for (std::size_t a = 0; a < rho->dim_a(); ++a)
                if (omega(rho->apply(g, omega.algebra->basis(a))) != H.counit[g] * omega.row[a]) {
                    inv = false;
                    break;
                }
        r.add("H-invariant", inv);
    }
    return r;
}

Matrix CovariantRep::pi_of(const Vec& a) const {
    Matrix m(dim, dim);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero()) m = m + a[k] * pi[k];
    return m;
}

Matrix CovariantRep::h_of(const Vec& g) const {
    Matrix m(dim, dim);
    for (std::size_t k = 0; k < g.size(); ++k)
        if (!g[k].is_zero()) m = m + g[k] * h[k];
    return m;
}

Report check_covariant_rep(const CovariantRep& r) {
    const StarAlgebra& A = *r.rho->alg;
    const HopfStarAlgebra& H = *r.rho->hopf;
    if (r.pi.size() != A.dim || r.h.size() != H.dim())
        throw std::invalid_argument("check_covariant_rep: one matrix per basis element required");
    const Matrix id = Matrix::identity(r.dim);
    Report out;
    auto all = [](std::size_t n, std::size_t m, auto pred) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (!pred(i, j)) return false;
        return true;
    };
    out.add("multiplicative", all(A.dim, A.dim, [&](std::size_t i, std::size_t j) {
                return r.pi_of(A.mult[i * A.dim + j]) == r.pi[i] * r.pi[j];
            }));
    out.add("unital", r.pi_of(A.unit) == id);
    out.add("star preserving", all(A.dim, 1, [&](std::size_t i, std::size_t) {
                return r.gram * r.pi_of(A.star(A.basis(i))) == r.pi[i].adjoint() * r.gram;
            }));
    out.add("H-module", r.h_of(H.alg->unit) == id && all(H.dim(), H.dim(), [&](std::size_t g, std::size_t k) {
                return r.h_of(H.alg->mult[g * H.dim() + k]) == r.h[g] * r.h[k];
            }));
    // <x, g |> y> = <g* |> x, y>
    out.add("adjointable", all(H.dim(), 1, [&](std::size_t g, std::size_t) {
                return r.gram * r.h[g] == r.h_of(H.star(H.basis(g))).adjoint() * r.gram;
            }));
    out.add("covariant", all(H.dim(), A.dim, [&](std::size_t g, std::size_t a) {
                Matrix rhs(r.dim, r.dim);
                for (const auto& t : H.co(g))
                    rhs = rhs + t.weight * (r.h[t.left] * r.pi[a] * r.h_of(H.S(H.basis(t.right))));
                return r.pi_of(r.rho->apply(g, A.basis(a))) == rhs;
            }));
    out.add("gram positive definite", psd_check(r.gram) && inverse(r.gram).has_value());
    return out;
}

Subspace gelfand_ideal(const Functional& omega) { return kernel(functional_gram(omega)); }

GnsSpace gns(const Functional& omega, const ActionPtr& rho) {
    Report c = check_functional(omega, rho.get());
    if (!c.passed()) throw std::invalid_argument("gns: functional is not " + c.first_failure()->name);
    const StarAlgebra& A = *omega.algebra;
    const HopfStarAlgebra& H = *rho->hopf;
    Matrix g = functional_gram(omega);
    GnsSpace s;
    s.q = Quotient(kernel(g));
    Matrix lift = s.q.lift_matrix();
    Matrix proj = s.q.projection_matrix();
    s.rep.rho = rho;
    s.rep.dim = s.q.dim();
    for (std::size_t a = 0; a < A.dim; ++a) s.rep.pi.push_back(proj * A.left_mult(A.basis(a)) * lift);
    for (std::size_t k = 0; k < H.dim(); ++k) s.rep.h.push_back(proj * rho->matrix(k) * lift);
    s.rep.gram = lift.adjoint() * g * lift;
    s.vacuum = s.q.project(A.unit);
    return s;
}

Intertwiner gns_crossed_intertwiner(const Functional& omega, const ActionPtr& rho) {
    GnsSpace base = gns(omega, rho);
    CrossedAlgebra c = crossed_algebra(rho);
    const HopfStarAlgebra& H = c.hopf();
    Functional eps{H.alg, H.counit};
    Functional prod = functional_product(omega, eps, c);
    GnsSpace top = gns(prod, c.canonical_action);

    Intertwiner out;
    Report& r = out.checks;
    // psi_a -> psi_{iota(a)}; well defined iff iota maps J_omega into J_{omega (x) eps}
    bool defined = true;
    for (const auto& v : base.q.subspace().basis())
        if (!top.q.subspace().contains(c.iota(v))) defined = false;
    r.add("well-defined", defined);
    out.u = top.q.projection_matrix() * c.iota.matrix * base.q.lift_matrix();
    r.add("isometric", out.u.adjoint() * top.rep.gram * out.u == base.rep.gram);
    r.add("surjective", rank(out.u) == top.dim());
    FaithfulRep hat = hat_representation(base.rep, c);
    bool inter = true;
    for (std::size_t k = 0; k < c.alg->dim && inter; ++k)
        inter = out.u * hat.images[k] == top.rep.pi[k] * out.u;
    r.add("intertwines", inter);
    return out;
}

}  // namespace hm
