#include "hopfmorita/bimodule.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace hm {

namespace {

// First index tuple (as "i,j,...") for which ok(...) is false, else "".
std::string first_bad(std::size_t n1, std::size_t n2, const std::function<bool(std::size_t, std::size_t)>& ok) {
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            if (!ok(i, j)) return std::to_string(i) + "," + std::to_string(j);
    return {};
}

std::string first_bad(std::size_t n1, std::size_t n2, std::size_t n3,
                      const std::function<bool(std::size_t, std::size_t, std::size_t)>& ok) {
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n3; ++k)
                if (!ok(i, j, k)) return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
    return {};
}

void add(Report& r, const std::string& name, const std::string& bad) { r.add(name, bad.empty(), bad); }

// Span of the given vectors is the whole ambient space.
bool spans(std::size_t ambient, const std::vector<Vec>& vs) { return Subspace::span(ambient, vs).dim() == ambient; }

}  // namespace

Vec CovariantBimodule::lmul(const Vec& b, const Vec& x) const {
    Vec r(dim);
    for (std::size_t p = 0; p < b.size(); ++p) {
        if (b[p].is_zero()) continue;
        for (std::size_t i = 0; i < dim; ++i)
            if (!x[i].is_zero()) axpy(r, b[p] * x[i], left_act[p * dim + i]);
    }
    return r;
}

Vec CovariantBimodule::rmul(const Vec& x, const Vec& a) const {
    const std::size_t da = right->dim;
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t k = 0; k < da; ++k)
            if (!a[k].is_zero()) axpy(r, x[i] * a[k], right_act[i * da + k]);
    }
    return r;
}

Vec CovariantBimodule::ip(const Vec& x, const Vec& y) const {
    Vec r(right->dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        Gauss cx = x[i].conj();
        for (std::size_t j = 0; j < dim; ++j)
            if (!y[j].is_zero()) axpy(r, cx * y[j], ip_right[i * dim + j]);
    }
    return r;
}

Vec CovariantBimodule::lip(const Vec& x, const Vec& y) const {
    if (!ip_left) throw std::invalid_argument("bimodule has no left inner product");
    Vec r(left->dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            if (!y[j].is_zero()) axpy(r, x[i] * y[j].conj(), (*ip_left)[i * dim + j]);
    }
    return r;
}

Vec CovariantBimodule::act(std::size_t g, const Vec& x) const {
    if (!h_act) throw std::invalid_argument("bimodule has no H-action");
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i)
        if (!x[i].is_zero()) axpy(r, x[i], (*h_act)[g * dim + i]);
    return r;
}

Vec CovariantBimodule::act(const Vec& g, const Vec& x) const {
    Vec r(dim);
    for (std::size_t k = 0; k < g.size(); ++k)
        if (!g[k].is_zero()) axpy(r, g[k], act(k, x));
    return r;
}

Matrix CovariantBimodule::lmul_matrix(const Vec& b) const {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.set_col(i, lmul(b, basis(i)));
    return m;
}

Matrix CovariantBimodule::rmul_matrix(const Vec& a) const {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.set_col(i, rmul(basis(i), a));
    return m;
}

Matrix CovariantBimodule::act_matrix(const Vec& g) const {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.set_col(i, act(g, basis(i)));
    return m;
}

void CovariantBimodule::validate() const {
    if (!left || !right) throw std::invalid_argument("bimodule needs both algebras");
    const std::size_t db = left->dim, da = right->dim, m = dim;
    auto check = [](const std::vector<Vec>& t, std::size_t count, std::size_t len, const char* what) {
        if (t.size() != count) throw std::invalid_argument(std::string(what) + ": wrong number of entries");
        for (const auto& v : t)
            if (v.size() != len) throw std::invalid_argument(std::string(what) + ": entry of wrong length");
    };
    check(left_act, db * m, m, "left_act");
    check(right_act, m * da, m, "right_act");
    check(ip_right, m * m, da, "ip_right");
    if (ip_left) check(*ip_left, m * m, db, "ip_left");
    if (h_act) {
        if (!rho_left || !rho_right) throw std::invalid_argument("h_act needs actions on both algebras");
        if (!rho_left->alg->same_structure(*left) || !rho_right->alg->same_structure(*right))
            throw std::invalid_argument("h_act: actions are on different algebras");
        if (rho_left->hopf->dim() != rho_right->hopf->dim())
            throw std::invalid_argument("h_act: actions of different Hopf algebras");
        check(*h_act, rho_right->hopf->dim() * m, m, "h_act");
    }
}

BimodPtr make_bimodule(CovariantBimodule e) {
    e.validate();
    return std::make_shared<const CovariantBimodule>(std::move(e));
}

Report check_covariant_module(const CovariantBimodule& e) {
    e.validate();
    const StarAlgebra& B = *e.left;
    const StarAlgebra& A = *e.right;
    const std::size_t db = B.dim, da = A.dim, m = e.dim;
    auto x = [&](std::size_t i) { return e.basis(i); };
    Report r;

    add(r, "left module", first_bad(db, db, m, [&](std::size_t p, std::size_t q, std::size_t i) {
            return e.lmul(B.mult[p * db + q], x(i)) == e.lmul(B.basis(p), e.lmul(B.basis(q), x(i)));
        }));
    add(r, "left unit", first_bad(m, 1, [&](std::size_t i, std::size_t) { return e.lmul(B.unit, x(i)) == x(i); }));
    add(r, "right module", first_bad(m, da, da, [&](std::size_t i, std::size_t p, std::size_t q) {
            return e.rmul(x(i), A.mult[p * da + q]) == e.rmul(e.rmul(x(i), A.basis(p)), A.basis(q));
        }));
    add(r, "right unit", first_bad(m, 1, [&](std::size_t i, std::size_t) { return e.rmul(x(i), A.unit) == x(i); }));
    add(r, "bimodule associativity", first_bad(db, m, da, [&](std::size_t p, std::size_t i, std::size_t q) {
            return e.rmul(e.lmul(B.basis(p), x(i)), A.basis(q)) == e.lmul(B.basis(p), e.rmul(x(i), A.basis(q)));
        }));
    add(r, "inner product hermitian", first_bad(m, m, [&](std::size_t i, std::size_t j) {
            return A.star(e.ip_right[i * m + j]) == e.ip_right[j * m + i];
        }));
    add(r, "inner product right linear", first_bad(m, m, da, [&](std::size_t i, std::size_t j, std::size_t p) {
            return e.ip(x(i), e.rmul(x(j), A.basis(p))) == A.mul(e.ip_right[i * m + j], A.basis(p));
        }));
    add(r, "left action adjointable", first_bad(db, m, m, [&](std::size_t p, std::size_t i, std::size_t j) {
            return e.ip(e.lmul(B.basis(p), x(i)), x(j)) == e.ip(x(i), e.lmul(B.star(B.basis(p)), x(j)));
        }));

    if (e.ip_left) {
        const auto& L = *e.ip_left;
        add(r, "left inner product hermitian",
            first_bad(m, m, [&](std::size_t i, std::size_t j) { return B.star(L[i * m + j]) == L[j * m + i]; }));
        add(r, "left inner product left linear", first_bad(db, m, m, [&](std::size_t p, std::size_t i, std::size_t j) {
                return e.lip(e.lmul(B.basis(p), x(i)), x(j)) == B.mul(B.basis(p), L[i * m + j]);
            }));
        add(r, "right action adjointable", first_bad(m, da, m, [&](std::size_t i, std::size_t p, std::size_t j) {
                return e.lip(e.rmul(x(i), A.basis(p)), x(j)) == e.lip(x(i), e.rmul(x(j), A.star(A.basis(p))));
            }));
        add(r, "compatibility", first_bad(m, m, m, [&](std::size_t i, std::size_t j, std::size_t k) {
                return e.lmul(L[i * m + j], x(k)) == e.rmul(x(i), e.ip_right[j * m + k]);
            }));
    }

    if (e.h_act) {
        const HopfStarAlgebra& H = e.hopf();
        const StarAction& rb = *e.rho_left;
        const StarAction& ra = *e.rho_right;
        const std::size_t dh = H.dim();
        r.merge("action on left algebra: ", check_star_action(rb));
        r.merge("action on right algebra: ", check_star_action(ra));
        add(r, "H unit acts as identity",
            first_bad(m, 1, [&](std::size_t i, std::size_t) { return e.act(H.alg->unit, x(i)) == x(i); }));
        add(r, "H-module law", first_bad(dh, dh, m, [&](std::size_t g, std::size_t h, std::size_t i) {
                return e.act(H.alg->mult[g * dh + h], x(i)) == e.act(g, e.act(h, x(i)));
            }));
        add(r, "right module covariance", first_bad(dh, m, da, [&](std::size_t g, std::size_t i, std::size_t p) {
                Vec rhs(m);
                for (const auto& t : H.co(g))
                    axpy(rhs, t.weight, e.rmul(e.act(t.left, x(i)), ra.apply(t.right, A.basis(p))));
                return e.act(g, e.rmul(x(i), A.basis(p))) == rhs;
            }));
        add(r, "left module covariance", first_bad(dh, db, m, [&](std::size_t g, std::size_t p, std::size_t i) {
                Vec rhs(m);
                for (const auto& t : H.co(g))
                    axpy(rhs, t.weight, e.lmul(rb.apply(t.left, B.basis(p)), e.act(t.right, x(i))));
                return e.act(g, e.lmul(B.basis(p), x(i))) == rhs;
            }));
        add(r, "inner product covariance", first_bad(dh, m, m, [&](std::size_t g, std::size_t i, std::size_t j) {
                Vec rhs(da);
                for (const auto& t : H.co(g))
                    axpy(rhs, t.weight, e.ip(e.act(H.star(H.S(H.basis(t.left))), x(i)), e.act(t.right, x(j))));
                return ra.apply(g, e.ip_right[i * m + j]) == rhs;
            }));
        add(r, "inner product covariance (adjoint form)",
            first_bad(dh, m, m, [&](std::size_t g, std::size_t i, std::size_t j) {
                Vec rhs(da);
                for (const auto& t : H.co(g))
                    axpy(rhs, t.weight, ra.apply(t.right, e.ip(e.act(H.star(H.basis(t.left)), x(i)), x(j))));
                return e.ip(x(i), e.act(g, x(j))) == rhs;
            }));
        if (e.ip_left)
            add(r, "left inner product covariance", first_bad(dh, m, m, [&](std::size_t g, std::size_t i, std::size_t j) {
                    Vec rhs(db);
                    for (const auto& t : H.co(g))
                        axpy(rhs, t.weight, e.lip(e.act(t.left, x(i)), e.act(H.star(H.S(H.basis(t.right))), x(j))));
                    return rb.apply(g, (*e.ip_left)[i * m + j]) == rhs;
                }));
    }
    return r;
}

Subspace degeneracy_space(const CovariantBimodule& e) {
    const std::size_t m = e.dim, da = e.right->dim;
    Matrix M(m * da, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < da; ++k) M(j * da + k, i) = e.ip_right[i * m + j][k].conj();
    return kernel(M);
}

Subspace left_degeneracy_space(const CovariantBimodule& e) {
    if (!e.ip_left) throw std::invalid_argument("bimodule has no left inner product");
    const std::size_t m = e.dim, db = e.left->dim;
    Matrix M(m * db, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < db; ++k) M(j * db + k, i) = (*e.ip_left)[i * m + j][k];
    return kernel(M);
}

QuotientModule quotient_module(const CovariantBimodule& e) {
    e.validate();
    Subspace n = degeneracy_space(e);
    if (e.ip_left && left_degeneracy_space(e) != n)
        throw std::domain_error("left and right degeneracy spaces differ");
    for (const auto& v : n.basis()) {
        for (std::size_t p = 0; p < e.left->dim; ++p)
            if (!n.contains(e.lmul(e.left->basis(p), v)))
                throw std::domain_error("degeneracy space not stable under the left action");
        for (std::size_t p = 0; p < e.right->dim; ++p)
            if (!n.contains(e.rmul(v, e.right->basis(p))))
                throw std::domain_error("degeneracy space not stable under the right action");
        if (e.h_act)
            for (std::size_t g = 0; g < e.hopf().dim(); ++g)
                if (!n.contains(e.act(g, v))) throw std::domain_error("degeneracy space not stable under H");
    }
    Quotient q(n);
    const std::size_t k = q.dim();
    Matrix lift = q.lift_matrix();
    Matrix proj = q.projection_matrix();
    std::vector<Vec> lifts;
    for (std::size_t s = 0; s < k; ++s) lifts.push_back(lift.col(s));

    CovariantBimodule out;
    out.left = e.left;
    out.right = e.right;
    out.dim = k;
    out.rho_left = e.rho_left;
    out.rho_right = e.rho_right;
    out.rep_left = e.rep_left;
    out.rep_right = e.rep_right;
    for (std::size_t p = 0; p < e.left->dim; ++p)
        for (std::size_t s = 0; s < k; ++s) out.left_act.push_back(proj * e.lmul(e.left->basis(p), lifts[s]));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t p = 0; p < e.right->dim; ++p)
            out.right_act.push_back(proj * e.rmul(lifts[s], e.right->basis(p)));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) out.ip_right.push_back(e.ip(lifts[s], lifts[t]));
    if (e.ip_left) {
        out.ip_left.emplace();
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = 0; t < k; ++t) out.ip_left->push_back(e.lip(lifts[s], lifts[t]));
    }
    if (e.h_act) {
        out.h_act.emplace();
        for (std::size_t g = 0; g < e.hopf().dim(); ++g)
            for (std::size_t s = 0; s < k; ++s) out.h_act->push_back(proj * e.act(g, lifts[s]));
    }
    return {make_bimodule(std::move(out)), std::move(q)};
}

namespace {

bool gram_positive(const StarAlgebra& a, const std::vector<Vec>& ip, std::size_t m,
                   const std::optional<FaithfulRep>& override_rep) {
    auto rep = override_rep ? override_rep : positivity_rep(a);
    if (!rep) throw std::invalid_argument("no positivity representation for the coefficient algebra");
    std::vector<std::vector<Vec>> g(m, std::vector<Vec>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g[i][j] = ip[i * m + j];
    return matrix_over_algebra_is_positive(a, g, *rep);
}

}  // namespace

bool complete_positivity_check(const CovariantBimodule& e) {
    return gram_positive(*e.right, e.ip_right, e.dim, e.rep_right);
}

bool complete_positivity_left(const CovariantBimodule& e) {
    if (!e.ip_left) throw std::invalid_argument("bimodule has no left inner product");
    return gram_positive(*e.left, *e.ip_left, e.dim, e.rep_left);
}

BimodPtr conjugate_bimodule(const CovariantBimodule& e) {
    if (!e.ip_left) throw std::invalid_argument("conjugate needs the left inner product");
    const StarAlgebra& B = *e.left;
    const StarAlgebra& A = *e.right;
    const std::size_t m = e.dim;
    CovariantBimodule c;
    c.left = e.right;
    c.right = e.left;
    c.dim = m;
    // coordinates of conj(x) are the conjugated coordinates of x
    for (std::size_t p = 0; p < A.dim; ++p)
        for (std::size_t i = 0; i < m; ++i) c.left_act.push_back(conj(e.rmul(e.basis(i), A.star(A.basis(p)))));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t p = 0; p < B.dim; ++p) c.right_act.push_back(conj(e.lmul(B.star(B.basis(p)), e.basis(i))));
    c.ip_right = *e.ip_left;
    c.ip_left = e.ip_right;
    c.rep_left = e.rep_right;
    c.rep_right = e.rep_left;
    c.rho_left = e.rho_right;
    c.rho_right = e.rho_left;
    if (e.h_act) {
        const HopfStarAlgebra& H = e.hopf();
        c.h_act.emplace();
        for (std::size_t g = 0; g < H.dim(); ++g) {
            Vec sg = H.star(H.S(H.basis(g)));
            for (std::size_t i = 0; i < m; ++i) c.h_act->push_back(conj(e.act(sg, e.basis(i))));
        }
    }
    return make_bimodule(std::move(c));
}

TensorProduct internal_tensor(const CovariantBimodule& f, const CovariantBimodule& e) {
    f.validate();
    e.validate();
    if (!f.right->same_structure(*e.left)) throw std::invalid_argument("internal_tensor: middle algebras differ");
    const std::size_t mf = f.dim, me = e.dim, n = mf * me;
    const StarAlgebra& C = *f.left;
    const StarAlgebra& Bm = *f.right;
    const StarAlgebra& A = *e.right;

    CovariantBimodule raw;
    raw.left = f.left;
    raw.right = e.right;
    raw.dim = n;
    raw.rep_left = f.rep_left;
    raw.rep_right = e.rep_right;
    for (std::size_t c = 0; c < C.dim; ++c)
        for (std::size_t i = 0; i < mf; ++i)
            for (std::size_t j = 0; j < me; ++j) raw.left_act.push_back(kron(f.left_act[c * mf + i], e.basis(j)));
    for (std::size_t i = 0; i < mf; ++i)
        for (std::size_t j = 0; j < me; ++j)
            for (std::size_t a = 0; a < A.dim; ++a) raw.right_act.push_back(kron(f.basis(i), e.right_act[j * A.dim + a]));

    // <y_i (x) x_j, y_k (x) x_l> = <x_j, <y_i, y_k> . x_l>
    raw.ip_right.assign(n * n, Vec(A.dim));
    for (std::size_t i = 0; i < mf; ++i)
        for (std::size_t k = 0; k < mf; ++k) {
            Matrix lb = e.lmul_matrix(f.ip_right[i * mf + k]);
            for (std::size_t j = 0; j < me; ++j)
                for (std::size_t l = 0; l < me; ++l)
                    raw.ip_right[(i * me + j) * n + (k * me + l)] = e.ip(e.basis(j), lb.col(l));
        }
    if (f.ip_left && e.ip_left) {
        // C<y_i (x) x_j, y_k (x) x_l> = C<y_i . B<x_j, x_l>, y_k>
        raw.ip_left.emplace(n * n, Vec(C.dim));
        for (std::size_t j = 0; j < me; ++j)
            for (std::size_t l = 0; l < me; ++l) {
                Matrix rb = f.rmul_matrix((*e.ip_left)[j * me + l]);
                for (std::size_t i = 0; i < mf; ++i)
                    for (std::size_t k = 0; k < mf; ++k)
                        (*raw.ip_left)[(i * me + j) * n + (k * me + l)] = f.lip(rb.col(i), f.basis(k));
            }
    }
    if (f.h_act && e.h_act) {
        if (f.hopf().dim() != e.hopf().dim()) throw std::invalid_argument("internal_tensor: different Hopf algebras");
        const HopfStarAlgebra& H = e.hopf();
        raw.rho_left = f.rho_left;
        raw.rho_right = e.rho_right;
        raw.h_act.emplace();
        for (std::size_t g = 0; g < H.dim(); ++g)
            for (std::size_t i = 0; i < mf; ++i)
                for (std::size_t j = 0; j < me; ++j) {
                    Vec v(n);
                    for (const auto& t : H.co(g))
                        axpy(v, t.weight, kron(f.act(t.left, f.basis(i)), e.act(t.right, e.basis(j))));
                    raw.h_act->push_back(std::move(v));
                }
    }
    raw.validate();

    Subspace null = degeneracy_space(raw);
    for (std::size_t i = 0; i < mf; ++i)
        for (std::size_t b = 0; b < Bm.dim; ++b) {
            Vec yb = f.rmul(f.basis(i), Bm.basis(b));
            for (std::size_t j = 0; j < me; ++j) {
                Vec rel = kron(yb, e.basis(j)) - kron(f.basis(i), e.lmul(Bm.basis(b), e.basis(j)));
                if (!null.contains(rel)) throw std::domain_error("internal_tensor: balancing relation is not null");
            }
        }
    auto qm = quotient_module(raw);
    return {qm.module, qm.q, mf, me};
}

bool is_adjoint_pair(const CovariantBimodule& e, const Matrix& t, const Matrix& ts) {
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t j = 0; j < e.dim; ++j)
            if (e.ip(t.col(i), e.basis(j)) != e.ip(e.basis(i), ts.col(j))) return false;
    return true;
}

bool is_right_linear(const CovariantBimodule& e, const Matrix& t) {
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t p = 0; p < e.right->dim; ++p)
            if (t * e.rmul(e.basis(i), e.right->basis(p)) != e.rmul(t.col(i), e.right->basis(p))) return false;
    return true;
}

std::vector<Operator> adjointable_operators(const CovariantBimodule& e) {
    if (degeneracy_space(e).dim() != 0) throw std::domain_error("adjointable_operators: degenerate inner product");
    const std::size_t m = e.dim, da = e.right->dim, mm = m * m;
    // unknowns: conj(T_ki) at k*m+i, then (T*)_kj at mm + k*m+j
    Matrix sys(mm * da, 2 * mm);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t c = 0; c < da; ++c) {
                const std::size_t row = (i * m + j) * da + c;
                for (std::size_t k = 0; k < m; ++k) {
                    sys(row, k * m + i) += e.ip_right[k * m + j][c];
                    sys(row, mm + k * m + j) -= e.ip_right[i * m + k][c];
                }
            }
    std::vector<Operator> out;
    const Subspace sol = kernel(sys);
    for (const auto& v : sol.basis()) {
        Matrix t(m, m), ts(m, m);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < m; ++i) {
                t(k, i) = v[k * m + i].conj();
                ts(k, i) = v[mm + k * m + i];
            }
        out.push_back({std::move(t), std::move(ts)});
    }
    return out;
}

Operator rank_one(const CovariantBimodule& e, const Vec& x, const Vec& y) {
    Matrix t(e.dim, e.dim), ts(e.dim, e.dim);
    for (std::size_t k = 0; k < e.dim; ++k) {
        t.set_col(k, e.rmul(x, e.ip(y, e.basis(k))));
        ts.set_col(k, e.rmul(y, e.ip(x, e.basis(k))));
    }
    return {std::move(t), std::move(ts)};
}

namespace {

Matrix act_on_operator(const CovariantBimodule& e, const Vec& g, const Matrix& t) {
    const HopfStarAlgebra& H = e.hopf();
    Matrix r(e.dim, e.dim);
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k].is_zero()) continue;
        for (const auto& c : H.co(k))
            r += (g[k] * c.weight) * (e.act_matrix(H.basis(c.left)) * t * e.act_matrix(H.S(H.basis(c.right))));
    }
    return r;
}

}  // namespace

Operator adjoint_on_operators(const CovariantBimodule& e, const Vec& g, const Operator& t) {
    if (!e.h_act) throw std::invalid_argument("adjoint_on_operators: no H-action");
    Operator out{act_on_operator(e, g, t.matrix), std::nullopt};
    if (t.adjoint) out.adjoint = act_on_operator(e, e.hopf().star(e.hopf().S(g)), *t.adjoint);
    return out;
}

namespace {

CovariantBimodule identity_data(const AlgPtr& a) {
    const StarAlgebra& A = *a;
    const std::size_t d = A.dim;
    CovariantBimodule e;
    e.left = a;
    e.right = a;
    e.dim = d;
    e.left_act = A.mult;
    e.right_act = A.mult;
    e.ip_left.emplace();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            e.ip_right.push_back(A.mul(A.star(A.basis(i)), A.basis(j)));
            e.ip_left->push_back(A.mul(A.basis(i), A.star(A.basis(j))));
        }
    return e;
}

}  // namespace

BimodPtr identity_bimodule(const AlgPtr& a) { return make_bimodule(identity_data(a)); }

BimodPtr identity_bimodule(const ActionPtr& rho) {
    CovariantBimodule e = identity_data(rho->alg);
    e.h_act = rho->act;
    e.rho_left = rho;
    e.rho_right = rho;
    return make_bimodule(std::move(e));
}

BimodPtr standard_equivalence(const ActionPtr& rho, std::size_t n) {
    if (n == 0) throw std::invalid_argument("standard_equivalence: n must be positive");
    const StarAlgebra& A = *rho->alg;
    const std::size_t d = A.dim, m = n * d;
    auto lifted = lift_to_matrices(*rho, n);
    const std::size_t db = lifted->alg->dim;
    CovariantBimodule e;
    e.left = lifted->alg;
    e.right = rho->alg;
    e.dim = m;
    e.rho_left = lifted;
    e.rho_right = rho;
    auto place = [&](std::size_t block, std::size_t len, std::size_t stride, const Vec& v) {
        Vec out(len);
        for (std::size_t k = 0; k < d; ++k) out[block * stride + k] = v[k];
        return out;
    };
    for (std::size_t bi = 0; bi < db; ++bi) {
        const std::size_t rc = bi / d, p = bi % d, r = rc / n, c = rc % n;
        for (std::size_t idx = 0; idx < m; ++idx) {
            const std::size_t i = idx / d, k = idx % d;
            e.left_act.push_back(c == i ? place(r, m, d, A.mult[p * d + k]) : Vec(m));
        }
    }
    for (std::size_t idx = 0; idx < m; ++idx)
        for (std::size_t a = 0; a < d; ++a) e.right_act.push_back(place(idx / d, m, d, A.mult[(idx % d) * d + a]));
    e.ip_left.emplace();
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const std::size_t i = x / d, k = x % d, j = y / d, l = y % d;
            e.ip_right.push_back(i == j ? A.mul(A.star(A.basis(k)), A.basis(l)) : Vec(d));
            Vec v(db);
            Vec kl = A.mul(A.basis(k), A.star(A.basis(l)));
            for (std::size_t q = 0; q < d; ++q) v[(i * n + j) * d + q] = kl[q];
            e.ip_left->push_back(std::move(v));
        }
    e.h_act.emplace();
    for (std::size_t g = 0; g < rho->dim_h(); ++g)
        for (std::size_t idx = 0; idx < m; ++idx) e.h_act->push_back(place(idx / d, m, d, rho->act[g * d + idx % d]));
    return make_bimodule(std::move(e));
}

Report check_equivalence_bimodule(const CovariantBimodule& e, bool strong) {
    Report r = check_covariant_module(e);
    if (!e.ip_left) {
        r.add("left inner product present", false);
        return r;
    }
    const StarAlgebra& B = *e.left;
    const StarAlgebra& A = *e.right;
    const std::size_t m = e.dim;
    r.add("right inner product nondegenerate", degeneracy_space(e).dim() == 0);
    r.add("left inner product nondegenerate", left_degeneracy_space(e).dim() == 0);
    r.add("right inner product full", spans(A.dim, e.ip_right));
    r.add("left inner product full", spans(B.dim, *e.ip_left));
    r.add("left action nondegenerate", spans(m, e.left_act));
    r.add("right action nondegenerate", spans(m, e.right_act));

    Matrix lm(m * m, B.dim), rm(m * m, A.dim);
    for (std::size_t p = 0; p < B.dim; ++p)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) lm(i * m + k, p) = e.left_act[p * m + i][k];
    for (std::size_t p = 0; p < A.dim; ++p)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) rm(i * m + k, p) = e.right_act[i * A.dim + p][k];
    r.add("left action injective", rank(lm) == B.dim);
    r.add("right action injective", rank(rm) == A.dim);

    if (strong) {
        auto positivity = [&](const std::string& name, auto check) {
            try {
                r.add(name, check(e));
            } catch (const std::invalid_argument& ex) {
                r.add(name, false, ex.what());
            }
        };
        positivity("right inner product completely positive",
                   [](const CovariantBimodule& x) { return complete_positivity_check(x); });
        positivity("left inner product completely positive",
                   [](const CovariantBimodule& x) { return complete_positivity_left(x); });
    }
    return r;
}

Report check_module_map(const CovariantBimodule& e, const CovariantBimodule& f, const Matrix& u) {
    if (u.rows() != f.dim || u.cols() != e.dim) throw std::invalid_argument("check_module_map: wrong matrix shape");
    if (!e.left->same_structure(*f.left) || !e.right->same_structure(*f.right))
        throw std::invalid_argument("check_module_map: algebra mismatch");
    const StarAlgebra& B = *e.left;
    const StarAlgebra& A = *e.right;
    const std::size_t m = e.dim;
    Report r;
    add(r, "left linear", first_bad(B.dim, m, [&](std::size_t p, std::size_t i) {
            return u * e.lmul(B.basis(p), e.basis(i)) == f.lmul(B.basis(p), u.col(i));
        }));
    add(r, "right linear", first_bad(m, A.dim, [&](std::size_t i, std::size_t p) {
            return u * e.rmul(e.basis(i), A.basis(p)) == f.rmul(u.col(i), A.basis(p));
        }));
    if (e.h_act && f.h_act)
        add(r, "equivariant", first_bad(e.hopf().dim(), m, [&](std::size_t g, std::size_t i) {
                return u * e.act(g, e.basis(i)) == f.act(g, u.col(i));
            }));
    add(r, "isometric", first_bad(m, m, [&](std::size_t i, std::size_t j) {
            return f.ip(u.col(i), u.col(j)) == e.ip_right[i * m + j];
        }));
    if (e.ip_left && f.ip_left)
        add(r, "left isometric", first_bad(m, m, [&](std::size_t i, std::size_t j) {
                return f.lip(u.col(i), u.col(j)) == (*e.ip_left)[i * m + j];
            }));
    r.add("bijective", u.square() && rank(u) == m);
    return r;
}

std::optional<Matrix> descend(const TensorProduct& t, const Matrix& raw) {
    for (const auto& v : t.q.subspace().basis())
        if (!is_zero(raw * v)) return std::nullopt;
    return raw * t.q.lift_matrix();
}

namespace {

void check_descended(Report& r, const std::string& name, const TensorProduct& t, const Matrix& raw,
                     const CovariantBimodule& target) {
    auto u = descend(t, raw);
    r.add(name + ": well-defined", u.has_value());
    if (u) r.merge(name + ": ", check_module_map(*t.module, target, *u));
}

BimodPtr identity_like(const AlgPtr& alg, const ActionPtr& rho) {
    return rho ? identity_bimodule(rho) : identity_bimodule(alg);
}

void unit_and_inverse(Report& r, const std::string& tag, const CovariantBimodule& e) {
    const StarAlgebra& B = *e.left;
    const StarAlgebra& A = *e.right;
    const std::size_t m = e.dim;
    const bool h = e.has_h();
    auto idb = identity_like(e.left, h ? e.rho_left : nullptr);
    auto ida = identity_like(e.right, h ? e.rho_right : nullptr);

    auto tl = internal_tensor(*idb, e);
    Matrix raw(m, B.dim * m);
    for (std::size_t p = 0; p < B.dim; ++p)
        for (std::size_t j = 0; j < m; ++j) raw.set_col(p * m + j, e.lmul(B.basis(p), e.basis(j)));
    check_descended(r, tag + "unit left", tl, raw, e);

    auto tr = internal_tensor(e, *ida);
    Matrix raw2(m, m * A.dim);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t a = 0; a < A.dim; ++a) raw2.set_col(j * A.dim + a, e.rmul(e.basis(j), A.basis(a)));
    check_descended(r, tag + "unit right", tr, raw2, e);

    if (!e.ip_left) return;
    auto ce = conjugate_bimodule(e);
    auto ti = internal_tensor(*ce, e);
    Matrix raw3(A.dim, m * m);
    for (std::size_t i = 0; i < m * m; ++i) raw3.set_col(i, e.ip_right[i]);
    check_descended(r, tag + "inverse right", ti, raw3, *ida);

    auto tj = internal_tensor(e, *ce);
    Matrix raw4(B.dim, m * m);
    for (std::size_t i = 0; i < m * m; ++i) raw4.set_col(i, (*e.ip_left)[i]);
    check_descended(r, tag + "inverse left", tj, raw4, *idb);
}

}  // namespace

Report verify_canonical_isos(const CovariantBimodule& f, const CovariantBimodule& e, const CovariantBimodule* g) {
    Report r;
    unit_and_inverse(r, "E ", e);
    unit_and_inverse(r, "F ", f);
    auto fe = internal_tensor(f, e);
    r.add("F tensor E constructed", true, std::to_string(fe.module->dim));
    if (!g) return r;

    auto gf = internal_tensor(*g, f);
    auto lhs = internal_tensor(*gf.module, e);
    auto rhs = internal_tensor(*g, *fe.module);
    const std::size_t mg = g->dim, mf = f.dim, me = e.dim;
    Matrix raw(rhs.module->dim, gf.module->dim * me);
    for (std::size_t p = 0; p < gf.module->dim; ++p) {
        Vec lifted = gf.q.lift(unit_vector(gf.module->dim, p));
        for (std::size_t j = 0; j < me; ++j) {
            Vec col(rhs.module->dim);
            for (std::size_t k = 0; k < mg; ++k)
                for (std::size_t i = 0; i < mf; ++i) {
                    const Gauss& c = lifted[k * mf + i];
                    if (c.is_zero()) continue;
                    axpy(col, c, rhs.element(g->basis(k), fe.element(f.basis(i), e.basis(j))));
                }
            raw.set_col(p * me + j, col);
        }
    }
    check_descended(r, "associativity", lhs, raw, *rhs.module);
    return r;
}

BimodPtr pad_with_null(const CovariantBimodule& e) {
    const std::size_t m = e.dim, n = 2 * m;
    auto both = [&](const Vec& v, std::size_t half) {
        Vec out(n);
        for (std::size_t k = 0; k < m; ++k) out[half * m + k] = v[k];
        return out;
    };
    CovariantBimodule p;
    p.left = e.left;
    p.right = e.right;
    p.dim = n;
    p.rho_left = e.rho_left;
    p.rho_right = e.rho_right;
    p.rep_left = e.rep_left;
    p.rep_right = e.rep_right;
    for (std::size_t b = 0; b < e.left->dim; ++b)
        for (std::size_t i = 0; i < n; ++i) p.left_act.push_back(both(e.left_act[b * m + i % m], i / m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < e.right->dim; ++a)
            p.right_act.push_back(both(e.right_act[(i % m) * e.right->dim + a], i / m));
    auto pad_ip = [&](const std::vector<Vec>& ip, std::size_t d) {
        std::vector<Vec> out;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.push_back(i < m && j < m ? ip[i * m + j] : Vec(d));
        return out;
    };
    p.ip_right = pad_ip(e.ip_right, e.right->dim);
    if (e.ip_left) p.ip_left = pad_ip(*e.ip_left, e.left->dim);
    if (e.h_act) {
        p.h_act.emplace();
        for (std::size_t g = 0; g < e.hopf().dim(); ++g)
            for (std::size_t i = 0; i < n; ++i) p.h_act->push_back(both((*e.h_act)[g * m + i % m], i / m));
    }
    return make_bimodule(std::move(p));
}

}  // namespace hm
