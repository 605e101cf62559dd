#include "hopfmorita/action.hpp"

#include <stdexcept>

namespace hm {

Vec StarAction::apply(std::size_t g, const Vec& a) const {
    const std::size_t d = dim_a();
    if (a.size() != d) throw std::invalid_argument("action: element size mismatch");
    Vec r(d);
    for (std::size_t k = 0; k < d; ++k)
        if (!a[k].is_zero()) axpy(r, a[k], act[g * d + k]);
    return r;
}

Vec StarAction::apply(const Vec& g, const Vec& a) const {
    if (g.size() != dim_h()) throw std::invalid_argument("action: Hopf element size mismatch");
    Vec r(dim_a());
    for (std::size_t k = 0; k < g.size(); ++k)
        if (!g[k].is_zero()) axpy(r, g[k], apply(k, a));
    return r;
}

Matrix StarAction::matrix(std::size_t g) const {
    const std::size_t d = dim_a();
    Matrix m(d, d);
    for (std::size_t k = 0; k < d; ++k) m.set_col(k, act[g * d + k]);
    return m;
}

Matrix StarAction::matrix(const Vec& g) const {
    Matrix m(dim_a(), dim_a());
    for (std::size_t k = 0; k < g.size(); ++k)
        if (!g[k].is_zero()) m += g[k] * matrix(k);
    return m;
}

ActionPtr make_action_unchecked(HopfPtr h, AlgPtr a, std::vector<Vec> act) {
    if (!h || !a) throw std::invalid_argument("action needs a Hopf algebra and an algebra");
    if (act.size() != h->dim() * a->dim) throw std::invalid_argument("action tensor must have dim(H)*dim(A) entries");
    for (const auto& v : act)
        if (v.size() != a->dim) throw std::invalid_argument("action entry has wrong length");
    StarAction r{std::move(h), std::move(a), std::move(act), true};
    return std::make_shared<const StarAction>(std::move(r));
}

ActionPtr make_action(HopfPtr h, AlgPtr a, std::vector<Vec> act) {
    auto r = make_action_unchecked(std::move(h), std::move(a), std::move(act));
    auto rep = check_star_action(*r);
    if (auto f = rep.first_failure()) throw std::invalid_argument("not a *-action: " + f->name + " " + f->detail);
    StarAction checked = *r;
    checked.unchecked = false;
    return std::make_shared<const StarAction>(std::move(checked));
}

Report check_star_action(const StarAction& rho) {
    const HopfStarAlgebra& H = *rho.hopf;
    const StarAlgebra& A = *rho.alg;
    const std::size_t dh = H.dim(), da = A.dim;
    const auto& hn = H.alg->names;
    const auto& an = A.names;
    Report rep;

    std::string bad;
    for (std::size_t a = 0; a < da && bad.empty(); ++a)
        if (rho.apply(H.alg->unit, A.basis(a)) != A.basis(a)) bad = an[a];
    rep.add("unit acts as identity", bad.empty(), bad);

    bad.clear();
    for (std::size_t g = 0; g < dh && bad.empty(); ++g)
        for (std::size_t h = 0; h < dh && bad.empty(); ++h) {
            Vec gh = H.alg->mult[g * dh + h];
            for (std::size_t a = 0; a < da; ++a)
                if (rho.apply(gh, A.basis(a)) != rho.apply(g, rho.apply(h, A.basis(a)))) {
                    bad = hn[g] + "," + hn[h] + "," + an[a];
                    break;
                }
        }
    rep.add("module law", bad.empty(), bad);

    bad.clear();
    for (std::size_t g = 0; g < dh && bad.empty(); ++g)
        for (std::size_t a = 0; a < da && bad.empty(); ++a)
            for (std::size_t b = 0; b < da; ++b) {
                Vec rhs(da);
                for (const auto& t : H.co(g))
                    axpy(rhs, t.weight, A.mul(rho.apply(t.left, A.basis(a)), rho.apply(t.right, A.basis(b))));
                if (rho.apply(g, A.mult[a * da + b]) != rhs) {
                    bad = hn[g] + "," + an[a] + "," + an[b];
                    break;
                }
            }
    rep.add("leibniz rule", bad.empty(), bad);

    bad.clear();
    for (std::size_t g = 0; g < dh && bad.empty(); ++g) {
        Vec sg = H.star(H.S(H.basis(g)));
        for (std::size_t a = 0; a < da; ++a)
            if (A.star(rho.apply(g, A.basis(a))) != rho.apply(sg, A.star(A.basis(a)))) {
                bad = hn[g] + "," + an[a];
                break;
            }
    }
    rep.add("star compatibility", bad.empty(), bad);

    bad.clear();
    for (std::size_t g = 0; g < dh && bad.empty(); ++g)
        if (rho.apply(g, A.unit) != H.counit[g] * A.unit) bad = hn[g];
    rep.add("unit fixed", bad.empty(), bad);
    return rep;
}

ActionPtr trivial_action(const HopfPtr& h, const AlgPtr& a) {
    std::vector<Vec> act;
    act.reserve(h->dim() * a->dim);
    for (std::size_t g = 0; g < h->dim(); ++g)
        for (std::size_t k = 0; k < a->dim; ++k) act.push_back(h->counit[g] * a->basis(k));
    return make_action(h, a, std::move(act));
}

ActionPtr adjoint_action(const HopfPtr& h) {
    const std::size_t d = h->dim();
    std::vector<Vec> act;
    act.reserve(d * d);
    for (std::size_t g = 0; g < d; ++g)
        for (std::size_t k = 0; k < d; ++k) {
            Vec r(d);
            for (const auto& t : h->co(g))
                axpy(r, t.weight, h->mul(h->mul(h->basis(t.left), h->basis(k)), h->S(h->basis(t.right))));
            act.push_back(std::move(r));
        }
    return make_action(h, h->alg, std::move(act));
}

ActionPtr lift_to_matrices(const StarAction& rho, std::size_t n) {
    auto mn = matrix_algebra_over(rho.alg, n);
    const std::size_t da = rho.dim_a(), dm = mn->dim;
    std::vector<Vec> act;
    act.reserve(rho.dim_h() * dm);
    for (std::size_t g = 0; g < rho.dim_h(); ++g)
        for (std::size_t idx = 0; idx < dm; ++idx) {
            const std::size_t block = idx / da, k = idx % da;
            Vec r(dm);
            const Vec& v = rho.act[g * da + k];
            for (std::size_t j = 0; j < da; ++j) r[block * da + j] = v[j];
            act.push_back(std::move(r));
        }
    return make_action(rho.hopf, mn, std::move(act));
}

std::optional<std::size_t> grouplike_index(const HopfStarAlgebra& h, const Vec& g) {
    std::optional<std::size_t> idx;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k].is_zero()) continue;
        if (idx || !g[k].is_one()) return std::nullopt;
        idx = k;
    }
    if (!idx || h.delta(g) != kron(g, g)) return std::nullopt;
    return idx;
}

ActionPtr permutation_action(const HopfPtr& h, const std::vector<std::vector<std::size_t>>& perm) {
    const std::size_t dh = h->dim();
    if (perm.size() != dh) throw std::invalid_argument("permutation_action: one permutation per group element");
    const std::size_t nx = perm.empty() ? 0 : perm[0].size();
    for (std::size_t g = 0; g < dh; ++g) {
        if (!grouplike_index(*h, h->basis(g))) throw std::invalid_argument("permutation_action: H is not a group algebra");
        if (perm[g].size() != nx) throw std::invalid_argument("permutation_action: permutations of different sizes");
        std::vector<bool> seen(nx);
        for (auto x : perm[g]) {
            if (x >= nx || seen[x]) throw std::invalid_argument("permutation_action: not a permutation");
            seen[x] = true;
        }
    }
    for (std::size_t g = 0; g < dh; ++g)
        for (std::size_t k = 0; k < dh; ++k) {
            auto gk = grouplike_index(*h, h->alg->mult[g * dh + k]);
            if (!gk) throw std::invalid_argument("permutation_action: H is not a group algebra");
            for (std::size_t x = 0; x < nx; ++x)
                if (perm[*gk][x] != perm[g][perm[k][x]])
                    throw std::invalid_argument("permutation_action: not a homomorphism");
        }
    auto a = make_function_algebra(nx);
    std::vector<Vec> act;
    act.reserve(dh * nx);
    for (std::size_t g = 0; g < dh; ++g)
        for (std::size_t x = 0; x < nx; ++x) act.push_back(a->basis(perm[g][x]));
    return make_action(h, a, std::move(act));
}

ActionPtr swap_action() { return permutation_action(cyclic_group_hopf(2), {{0, 1}, {1, 0}}); }

Subspace invariants(const StarAction& rho) {
    const std::size_t da = rho.dim_a();
    std::vector<Matrix> blocks;
    for (std::size_t g = 0; g < rho.dim_h(); ++g)
        blocks.push_back(rho.matrix(g) - rho.hopf->counit[g] * Matrix::identity(da));
    if (blocks.empty()) return Subspace::full(da);
    return kernel(stack_rows(blocks));
}

bool is_invariant(const StarAction& rho, const Vec& a) {
    for (std::size_t g = 0; g < rho.dim_h(); ++g)
        if (rho.apply(g, a) != rho.hopf->counit[g] * a) return false;
    return true;
}

}  // namespace hm
