#include "hopfmorita/morita.hpp"

#include <stdexcept>
#include <string>

namespace hm {

namespace {

void require_star_iso(const AlgebraMorphism& phi, const char* what) {
    const auto f = morphism_flags(phi);
    if (!f.multiplicative || !f.unital || !f.star || !f.injective || !f.surjective)
        throw std::invalid_argument(std::string(what) + ": not a *-isomorphism");
}

void require_same_algebras(const CovariantBimodule& e, const CovariantBimodule& f, const char* what) {
    if (!e.left->same_structure(*f.left) || !e.right->same_structure(*f.right))
        throw std::invalid_argument(std::string(what) + ": algebra mismatch");
}

// Columns b_p . x_i stacked over i: the linear map b -> (b x_0, ..., b x_{m-1}).
Matrix left_action_stack(const CovariantBimodule& e) {
    const std::size_t m = e.dim, db = e.left->dim;
    Matrix s(m * m, db);
    for (std::size_t p = 0; p < db; ++p)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) s(i * m + k, p) = e.left_act[p * m + i][k];
    return s;
}

Vec stack(const std::vector<Vec>& parts) {
    Vec out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Unique solution of a x = b, or std::domain_error naming the problem.
Vec unique_solution(const Matrix& a, const Vec& b, const char* what) {
    auto sol = solve(a, b);
    if (!sol) throw std::domain_error(std::string(what) + ": no solution");
    if (sol->kernel.dim() != 0) throw std::domain_error(std::string(what) + ": solution not unique");
    return sol->particular;
}

ActionPtr pick_action(const ActionPtr& given, const AlgPtr& alg, const ActionPtr& fallback, bool needed,
                      const char* what) {
    if (given) {
        if (!given->alg->same_structure(*alg)) throw std::invalid_argument(std::string(what) + ": action on wrong algebra");
        return given;
    }
    if (!needed) return nullptr;
    if (fallback && fallback->alg->same_structure(*alg)) return fallback;
    throw std::invalid_argument(std::string(what) + ": an H-action on the new algebra is required");
}

// Rescales u by s with |s|^2 = 1 / lambda when gram(u) = lambda * reference
// for a positive rational lambda; empty otherwise.
std::optional<Gauss> isometry_scale(const std::vector<Vec>& got, const std::vector<Vec>& want) {
    std::optional<Gauss> lambda;
    for (std::size_t i = 0; i < got.size() && !lambda; ++i)
        for (std::size_t k = 0; k < want[i].size(); ++k)
            if (!want[i][k].is_zero()) {
                lambda = got[i][k] / want[i][k];
                break;
            }
    if (!lambda || !lambda->is_real() || sgn(lambda->re()) <= 0) return std::nullopt;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i] != *lambda * want[i]) return std::nullopt;
    return norm_root(1 / lambda->re());
}

}  // namespace

BimodPtr twist_right(const CovariantBimodule& f, const AlgebraMorphism& phi, ActionPtr rho_a) {
    require_star_iso(phi, "twist_right");
    if (!phi.target->same_structure(*f.right)) throw std::invalid_argument("twist_right: target is not the right algebra");
    const AlgebraMorphism pinv = inverse(phi);
    const StarAlgebra& A = *phi.source;
    CovariantBimodule t = f;
    t.right = phi.source;
    t.rho_right = pick_action(rho_a, phi.source, f.rho_right, f.has_h(), "twist_right");
    t.rep_right.reset();
    t.right_act.clear();
    for (std::size_t i = 0; i < f.dim; ++i)
        for (std::size_t a = 0; a < A.dim; ++a) t.right_act.push_back(f.rmul(f.basis(i), phi(A.basis(a))));
    for (auto& v : t.ip_right) v = pinv(v);
    return make_bimodule(std::move(t));
}

BimodPtr twist_left(const CovariantBimodule& e, const AlgebraMorphism& psi, ActionPtr rho_c) {
    require_star_iso(psi, "twist_left");
    if (!psi.source->same_structure(*e.left)) throw std::invalid_argument("twist_left: source is not the left algebra");
    const AlgebraMorphism pinv = inverse(psi);
    const StarAlgebra& C = *psi.target;
    CovariantBimodule t = e;
    t.left = psi.target;
    t.rho_left = pick_action(rho_c, psi.target, e.rho_left, e.has_h(), "twist_left");
    t.rep_left.reset();
    t.left_act.clear();
    for (std::size_t c = 0; c < C.dim; ++c)
        for (std::size_t i = 0; i < e.dim; ++i) t.left_act.push_back(e.lmul(pinv(C.basis(c)), e.basis(i)));
    if (t.ip_left)
        for (auto& v : *t.ip_left) v = psi(v);
    return make_bimodule(std::move(t));
}

BimodPtr ell(const AlgebraMorphism& phi, const ActionPtr& rho_b, const ActionPtr& rho_a) {
    require_star_iso(phi, "ell");
    if (!phi.source->same_structure(*rho_a->alg) || !phi.target->same_structure(*rho_b->alg))
        throw std::invalid_argument("ell: morphism does not match the actions");
    for (std::size_t g = 0; g < rho_a->dim_h(); ++g)
        if (phi.matrix * rho_a->matrix(g) != rho_b->matrix(g) * phi.matrix)
            throw std::invalid_argument("ell: morphism is not H-equivariant");
    return twist_right(*identity_bimodule(rho_b), phi, rho_a);
}

IsoSearch find_bimodule_isomorphism(const CovariantBimodule& e, const CovariantBimodule& f, std::uint64_t seed) {
    require_same_algebras(e, f, "find_bimodule_isomorphism");
    const std::size_t m = e.dim, n = f.dim;
    IsoSearch out;

    // U M_e = M_f U for every structure map, U stored row-major
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (std::size_t p = 0; p < e.left->dim; ++p)
        pairs.emplace_back(e.lmul_matrix(e.left->basis(p)), f.lmul_matrix(f.left->basis(p)));
    for (std::size_t p = 0; p < e.right->dim; ++p)
        pairs.emplace_back(e.rmul_matrix(e.right->basis(p)), f.rmul_matrix(f.right->basis(p)));
    if (e.has_h() && f.has_h())
        for (std::size_t g = 0; g < e.hopf().dim(); ++g)
            pairs.emplace_back(e.act_matrix(e.hopf().basis(g)), f.act_matrix(f.hopf().basis(g)));
    std::vector<Matrix> blocks;
    for (const auto& [me, mf] : pairs) {
        Matrix b(n * m, n * m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t k = 0; k < m; ++k) b(r * m + c, r * m + k) += me(k, c);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t k = 0; k < n; ++k) b(r * m + c, k * m + c) -= mf(r, k);
        blocks.push_back(std::move(b));
    }
    const Subspace sol = blocks.empty() ? Subspace::full(n * m) : kernel(stack_rows(blocks));
    out.solution_dim = sol.dim();
    if (m != n || sol.dim() == 0) {
        out.outcome = SearchOutcome::none;
        return out;
    }

    for (const auto& v : unit_root_combinations(sol.basis(), seed)) {
        Matrix u(n, m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) u(r, c) = v[r * m + c];
        if (rank(u) != m) continue;
        std::vector<Vec> got;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) got.push_back(f.ip(u.col(i), u.col(j)));
        auto s = isometry_scale(got, e.ip_right);
        if (!s) continue;
        u = *s * u;
        if (check_module_map(e, f, u).passed()) {
            out.outcome = SearchOutcome::found;
            out.witness = std::move(u);
            return out;
        }
    }
    return out;
}

InnerSearch detect_inner(const AlgebraMorphism& phi, const StarAction* rho, std::uint64_t seed) {
    if (!phi.source->same_structure(*phi.target)) throw std::invalid_argument("detect_inner: not an endomorphism");
    const StarAlgebra& A = *phi.source;
    if (rho && !rho->alg->same_structure(A)) throw std::invalid_argument("detect_inner: action on another algebra");
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < A.dim; ++k) blocks.push_back(A.left_mult(phi(A.basis(k))) - A.right_mult(A.basis(k)));
    if (rho)
        for (std::size_t g = 0; g < rho->dim_h(); ++g)
            blocks.push_back(rho->matrix(g) - rho->hopf->counit[g] * Matrix::identity(A.dim));
    const Subspace sol = kernel(stack_rows(blocks));
    if (sol.dim() == 0) return {SearchOutcome::none, std::nullopt};

    for (auto u : unit_root_combinations(sol.basis(), seed)) {
        auto s = isometry_scale({A.mul(A.star(u), u)}, {A.unit});
        if (!s) continue;
        u = *s * u;
        if (is_unitary(A, u) && conjugation_by(phi.source, u).matrix == phi.matrix)
            return {SearchOutcome::found, std::move(u)};
    }
    return {SearchOutcome::undetermined, std::nullopt};
}

Twist action_difference(const CovariantBimodule& e, const CovariantBimodule& e_prime) {
    require_same_algebras(e, e_prime, "action_difference");
    if (!e.has_h() || !e_prime.has_h()) throw std::invalid_argument("action_difference: both modules need an H-action");
    if (e.dim != e_prime.dim || e.left_act != e_prime.left_act || e.right_act != e_prime.right_act ||
        e.ip_right != e_prime.ip_right)
        throw std::invalid_argument("action_difference: modules differ outside the H-action");
    const HopfStarAlgebra& H = e.hopf();
    const std::size_t m = e.dim;
    const Matrix ls = left_action_stack(e);
    Matrix b(e.left->dim, H.dim());
    for (std::size_t g = 0; g < H.dim(); ++g) {
        std::vector<Vec> ug;
        for (std::size_t i = 0; i < m; ++i) {
            Vec v(m);
            for (const auto& t : H.co(g))
                axpy(v, t.weight, e.act(t.left, e_prime.act(H.S(H.basis(t.right)), e.basis(i))));
            ug.push_back(std::move(v));
        }
        b.set_col(g, unique_solution(ls, stack(ug), "action_difference"));
    }
    Twist out{e.rho_left->hopf, e.left, std::move(b)};
    for (std::size_t g = 0; g < H.dim(); ++g)
        for (std::size_t i = 0; i < m; ++i) {
            Vec v(m);
            for (const auto& t : H.co(g)) axpy(v, t.weight, e.lmul(out.at(t.left), e_prime.act(t.right, e.basis(i))));
            if (v != e.act(g, e.basis(i))) throw std::domain_error("action_difference: reconstruction fails");
        }
    return out;
}

BimodPtr twisted_action_left(const CovariantBimodule& e, const Twist& b) {
    if (!e.has_h()) throw std::invalid_argument("twisted_action_left: module has no H-action");
    if (auto f = is_U_member(b, *e.rho_left).first_failure())
        throw std::invalid_argument("twisted_action_left: " + f->name + " fails " + f->detail);
    const HopfStarAlgebra& H = e.hopf();
    CovariantBimodule t = e;
    t.h_act.emplace();
    for (std::size_t g = 0; g < H.dim(); ++g)
        for (std::size_t i = 0; i < e.dim; ++i) {
            Vec v(e.dim);
            for (const auto& c : H.co(g)) axpy(v, c.weight, e.lmul(b.at(c.left), e.act(c.right, e.basis(i))));
            t.h_act->push_back(std::move(v));
        }
    return make_bimodule(std::move(t));
}

BimodPtr twisted_action_right(const CovariantBimodule& e, const Twist& a) {
    if (!e.has_h()) throw std::invalid_argument("twisted_action_right: module has no H-action");
    if (auto f = is_U_member(a, *e.rho_right).first_failure())
        throw std::invalid_argument("twisted_action_right: " + f->name + " fails " + f->detail);
    const HopfStarAlgebra& H = e.hopf();
    CovariantBimodule t = e;
    t.h_act.emplace();
    for (std::size_t g = 0; g < H.dim(); ++g)
        for (std::size_t i = 0; i < e.dim; ++i) {
            Vec v(e.dim);
            for (const auto& c : H.co(g)) axpy(v, c.weight, e.rmul(e.act(c.left, e.basis(i)), a.at(c.right)));
            t.h_act->push_back(std::move(v));
        }
    return make_bimodule(std::move(t));
}

Vec h_center(const CovariantBimodule& e, const Vec& z) {
    if (z.size() != e.right->dim || !center(*e.right).contains(z))
        throw std::invalid_argument("h_center: element is not central");
    std::vector<Vec> rhs;
    for (std::size_t i = 0; i < e.dim; ++i) rhs.push_back(e.rmul(e.basis(i), z));
    return unique_solution(left_action_stack(e), stack(rhs), "h_center");
}

Twist h_twist(const CovariantBimodule& e, const Twist& a) {
    if (!e.has_h()) throw std::invalid_argument("h_twist: module has no H-action");
    if (auto f = is_U_member(a, *e.rho_right).first_failure())
        throw std::invalid_argument("h_twist: " + f->name + " fails " + f->detail);
    const HopfStarAlgebra& H = e.hopf();
    const std::size_t m = e.dim, dh = H.dim(), db = e.left->dim;
    // unknown h(b_l) = sum_p x[p * dh + l] b_p
    Matrix sys(dh * m * m, db * dh);
    std::vector<Vec> rhs;
    for (std::size_t g = 0; g < dh; ++g)
        for (std::size_t i = 0; i < m; ++i) {
            Vec r(m);
            for (const auto& t : H.co(g)) {
                axpy(r, t.weight, e.rmul(e.act(t.left, e.basis(i)), a.at(t.right)));
                const Vec gx = e.act(t.right, e.basis(i));
                for (std::size_t p = 0; p < db; ++p) {
                    const Vec bx = e.lmul(e.left->basis(p), gx);
                    for (std::size_t k = 0; k < m; ++k) sys((g * m + i) * m + k, p * dh + t.left) += t.weight * bx[k];
                }
            }
            rhs.push_back(std::move(r));
        }
    const Vec x = unique_solution(sys, stack(rhs), "h_twist");
    Matrix hmat(db, dh);
    for (std::size_t p = 0; p < db; ++p)
        for (std::size_t l = 0; l < dh; ++l) hmat(p, l) = x[p * dh + l];
    Twist out{e.rho_left->hopf, e.left, std::move(hmat)};
    if (auto f = is_U_member(out, *e.rho_left).first_failure())
        throw std::domain_error("h_twist: result fails " + f->name);
    return out;
}

bool is_hermitian_dual_basis(const CovariantBimodule& p, const DualBasis& d) {
    if (d.xs.size() != d.ys.size()) return false;
    for (std::size_t j = 0; j < p.dim; ++j) {
        Vec sum(p.dim);
        for (std::size_t i = 0; i < d.xs.size(); ++i) sum = sum + p.rmul(d.xs[i], p.ip(d.ys[i], p.basis(j)));
        if (sum != p.basis(j)) return false;
    }
    return true;
}

std::optional<DualBasis> hermitian_dual_basis(const CovariantBimodule& p) {
    const std::size_t m = p.dim;
    // y_i = basis vector i; unknown x_i = sum_k X[i * m + k] e_k
    Matrix sys(m * m, m * m);
    Vec rhs(m * m);
    for (std::size_t j = 0; j < m; ++j) {
        rhs[j * m + j] = 1;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                const Vec v = p.rmul(p.basis(k), p.ip_right[i * m + j]);
                for (std::size_t r = 0; r < m; ++r) sys(j * m + r, i * m + k) = v[r];
            }
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    DualBasis d;
    for (std::size_t i = 0; i < m; ++i) {
        Vec x(sol->particular.begin() + static_cast<std::ptrdiff_t>(i * m),
              sol->particular.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
        if (is_zero(x)) continue;
        d.xs.push_back(std::move(x));
        d.ys.push_back(p.basis(i));
    }
    return d;
}

Report check_ideal(const IdealSubspace& j, const StarAction* rho) {
    const StarAlgebra& A = *j.algebra;
    Report r;
    std::string left, right, star, inv;
    for (const auto& v : j.space.basis()) {
        for (std::size_t k = 0; k < A.dim; ++k) {
            if (left.empty() && !j.space.contains(A.mul(A.basis(k), v))) left = A.names[k];
            if (right.empty() && !j.space.contains(A.mul(v, A.basis(k)))) right = A.names[k];
        }
        if (star.empty() && !j.space.contains(A.star(v))) star = "basis vector";
        if (rho)
            for (std::size_t g = 0; g < rho->dim_h() && inv.empty(); ++g)
                if (!j.space.contains(rho->apply(g, v))) inv = rho->hopf->alg->names[g];
    }
    r.add("left ideal", left.empty(), left);
    r.add("right ideal", right.empty(), right);
    r.add("star closed", star.empty(), star);
    if (rho) r.add("H-invariant", inv.empty(), inv);
    return r;
}

IdealSubspace ideal_transfer(const CovariantBimodule& e, const IdealSubspace& j) {
    if (!j.algebra->same_structure(*e.right)) throw std::invalid_argument("ideal_transfer: ideal of another algebra");
    if (auto f = check_ideal(j).first_failure()) throw std::invalid_argument("ideal_transfer: " + f->name + " fails");
    const Quotient q(j.space);
    const std::size_t db = e.left->dim, m = e.dim;
    if (q.dim() == 0) return {e.left, Subspace::full(db)};
    const Matrix proj = q.projection_matrix();
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            Matrix mik(e.right->dim, db);
            for (std::size_t p = 0; p < db; ++p) mik.set_col(p, e.ip(e.basis(i), e.lmul(e.left->basis(p), e.basis(k))));
            blocks.push_back(proj * mik);
        }
    return {e.left, kernel(stack_rows(blocks))};
}

}  // namespace hm
