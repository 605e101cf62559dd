#include "hopfmorita/groups.hpp"

#include "hopfmorita/search.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hm {

namespace {

void require_compatible(const Twist& a, const StarAction& rho) {
    if (a.m.rows() != rho.dim_a() || a.m.cols() != rho.dim_h())
        throw std::invalid_argument("twist shape does not match the action");
}

void require_member(const Twist& a, const StarAction& rho, bool unitary, const char* what) {
    auto r = unitary ? is_U_member(a, rho) : is_GL_member(a, rho);
    if (auto f = r.first_failure())
        throw std::invalid_argument(std::string(what) + ": " + f->name + " fails " + f->detail);
}

bool contains(const std::vector<Twist>& xs, const Twist& t) {
    return std::find(xs.begin(), xs.end(), t) != xs.end();
}

}  // namespace

Twist twist_unit(const HopfPtr& h, const AlgPtr& a) {
    return {h, a, convolution_unit(*h, *a).m};
}

Twist convolve(const Twist& a, const Twist& b) {
    if (a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols())
        throw std::invalid_argument("convolve: twists of different shapes");
    return {a.hopf, a.alg, convolution(LinMap{a.m}, LinMap{b.m}, *a.hopf, *a.alg).m};
}

Twist character_twist(const HopfPtr& h, const AlgPtr& a, const std::vector<Gauss>& chi) {
    if (chi.size() != h->dim()) throw std::invalid_argument("character_twist: one value per basis element");
    Matrix m(a->dim, h->dim());
    for (std::size_t g = 0; g < h->dim(); ++g) m.set_col(g, chi[g] * a->unit);
    return {h, a, std::move(m)};
}

Report is_GL_member(const Twist& a, const StarAction& rho) {
    require_compatible(a, rho);
    const HopfStarAlgebra& H = *rho.hopf;
    const StarAlgebra& A = *rho.alg;
    const std::size_t dh = H.dim(), da = A.dim;
    const auto& hn = H.alg->names;
    Report rep;

    rep.add("normalization", a(H.alg->unit) == A.unit);

    std::string bad;
    for (std::size_t g = 0; g < dh && bad.empty(); ++g)
        for (std::size_t h = 0; h < dh; ++h) {
            Vec rhs(da);
            for (const auto& t : H.co(g)) axpy(rhs, t.weight, A.mul(a.at(t.left), rho.apply(t.right, a.at(h))));
            if (a(H.alg->mult[g * dh + h]) != rhs) {
                bad = hn[g] + "," + hn[h];
                break;
            }
        }
    rep.add("action condition", bad.empty(), bad);

    bad.clear();
    for (std::size_t g = 0; g < dh && bad.empty(); ++g)
        for (std::size_t x = 0; x < da; ++x) {
            Vec lhs(da), rhs(da);
            for (const auto& t : H.co(g)) {
                axpy(lhs, t.weight, A.mul(rho.apply(t.left, A.basis(x)), a.at(t.right)));
                axpy(rhs, t.weight, A.mul(a.at(t.left), rho.apply(t.right, A.basis(x))));
            }
            if (lhs != rhs) {
                bad = hn[g] + "," + A.names[x];
                break;
            }
        }
    rep.add("module condition", bad.empty(), bad);
    return rep;
}

Report is_U_member(const Twist& a, const StarAction& rho) {
    Report rep = is_GL_member(a, rho);
    const HopfStarAlgebra& H = *rho.hopf;
    const StarAlgebra& A = *rho.alg;
    std::string bad;
    for (std::size_t g = 0; g < H.dim() && bad.empty(); ++g) {
        Vec lhs(A.dim);
        for (const auto& t : H.co(g))
            axpy(lhs, t.weight, A.mul(a.at(t.left), A.star(a(H.star(H.S(H.basis(t.right)))))));
        if (lhs != H.counit[g] * A.unit) bad = H.alg->names[g];
    }
    rep.add("unitarity condition", bad.empty(), bad);
    return rep;
}

Twist twist_inverse(const Twist& a, const StarAction& rho) {
    require_member(a, rho, false, "twist_inverse");
    const HopfStarAlgebra& H = *rho.hopf;
    Matrix m(rho.dim_a(), H.dim());
    for (std::size_t g = 0; g < H.dim(); ++g) {
        Vec v(rho.dim_a());
        for (const auto& t : H.co(g)) axpy(v, t.weight, rho.apply(t.right, a(H.S_inv(H.basis(t.left)))));
        m.set_col(g, v);
    }
    return {a.hopf, a.alg, std::move(m)};
}

Twist hat(const Vec& c, const StarAction& rho) {
    const StarAlgebra& A = *rho.alg;
    if (c.size() != A.dim) throw std::invalid_argument("hat: element size mismatch");
    if (!center(A).contains(c)) throw std::invalid_argument("hat: element is not central");
    auto ci = invert(A, c);
    if (!ci) throw std::invalid_argument("hat: element is not invertible");
    Matrix m(A.dim, rho.dim_h());
    for (std::size_t g = 0; g < rho.dim_h(); ++g) m.set_col(g, A.mul(c, rho.apply(g, *ci)));
    return {rho.hopf, rho.alg, std::move(m)};
}

const char* to_string(U0Outcome o) {
    switch (o) {
        case U0Outcome::equal: return "equal";
        case U0Outcome::not_equal: return "not_equal";
        case U0Outcome::undetermined: return "undetermined";
    }
    return "?";
}

U0Result u0_equal(const Twist& a, const Twist& b, const StarAction& rho, std::uint64_t seed) {
    require_member(a, rho, true, "u0_equal");
    require_member(b, rho, true, "u0_equal");
    const StarAlgebra& A = *rho.alg;
    const Twist t = convolve(a, twist_inverse(b, rho));

    // d = c^{-1} ranges over the center: d t(g) = g |> d for all g.
    const Subspace z = center(A);
    const Matrix zm = z.basis_matrix().transpose();
    std::vector<Matrix> blocks;
    for (std::size_t g = 0; g < rho.dim_h(); ++g) blocks.push_back((A.right_mult(t.at(g)) - rho.matrix(g)) * zm);
    const Subspace sol = kernel(stack_rows(blocks));
    if (sol.dim() == 0) return {U0Outcome::not_equal, std::nullopt};

    for (const auto& y : unit_root_combinations(sol.basis(), seed)) {
        Vec d = zm * y;
        const Vec dd = A.mul(A.star(d), d);
        // d* d must be a positive multiple of 1 for a rescaling to be unitary
        std::optional<Gauss> scale;
        for (std::size_t k = 0; k < A.dim; ++k)
            if (!A.unit[k].is_zero()) {
                scale = dd[k] / A.unit[k];
                break;
            }
        if (!scale || dd != *scale * A.unit || !scale->is_real() || sgn(scale->re()) <= 0) continue;
        auto s = norm_root(1 / scale->re());
        if (!s) continue;
        d = *s * d;
        if (!is_unitary(A, d)) continue;
        Vec c = A.star(d);
        if (hat(c, rho) == t) return {U0Outcome::equal, c};
    }
    return {U0Outcome::undetermined, std::nullopt};
}

std::vector<Twist> enumerate_characters(const StarAction& rho) {
    const HopfStarAlgebra& H = *rho.hopf;
    const std::size_t n = H.dim();
    // product table on group elements
    std::vector<std::size_t> prod(n * n);
    for (std::size_t g = 0; g < n; ++g) {
        if (!grouplike_index(H, H.basis(g))) throw std::invalid_argument("enumerate_characters: H is not a group algebra");
        for (std::size_t h = 0; h < n; ++h) {
            auto gh = grouplike_index(H, H.alg->mult[g * n + h]);
            if (!gh) throw std::invalid_argument("enumerate_characters: H is not a group algebra");
            prod[g * n + h] = *gh;
        }
    }
    const std::vector<Gauss> roots = {Gauss(1), Gauss::i(), Gauss(-1), -Gauss::i()};
    std::vector<int> val(n, -1);
    std::vector<Twist> out;

    // backtracking over values in Z/4 (exponents of i), checking each
    // product relation as soon as all three entries are assigned
    auto consistent = [&](std::size_t upto) {
        for (std::size_t g = 0; g <= upto; ++g)
            for (std::size_t h = 0; h <= upto; ++h) {
                const std::size_t p = prod[g * n + h];
                if (p <= upto && val[p] != (val[g] + val[h]) % 4) return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            std::vector<Gauss> chi(n);
            for (std::size_t g = 0; g < n; ++g) chi[g] = roots[static_cast<std::size_t>(val[g])];
            Twist t = character_twist(rho.hopf, rho.alg, chi);
            if (is_U_member(t, rho).passed()) out.push_back(std::move(t));
            return;
        }
        for (int v = 0; v < 4; ++v) {
            val[k] = v;
            if (consistent(k)) self(self, k + 1);
        }
        val[k] = -1;
    };
    rec(rec, 0);
    return out;
}

AlgebraMorphism char_automorphism(const Twist& chi) {
    if (chi.alg->dim != 1) throw std::invalid_argument("char_automorphism: twist must take scalar values");
    const auto triv = trivial_action(chi.hopf, chi.alg);
    require_member(chi, *triv, false, "char_automorphism");
    const HopfStarAlgebra& H = *chi.hopf;
    Matrix m(H.dim(), H.dim());
    for (std::size_t g = 0; g < H.dim(); ++g) {
        Vec v(H.dim());
        for (const auto& t : H.co(g)) axpy(v, t.weight * chi(H.S(H.basis(t.left)))[0], H.basis(t.right));
        m.set_col(g, v);
    }
    return AlgebraMorphism(H.alg, H.alg, std::move(m));
}

Twist pushforward(const AlgebraMorphism& phi, const StarAction& rho_a, const StarAction& rho_b, const Twist& a) {
    require_compatible(a, rho_a);
    if (!phi.source->same_structure(*rho_a.alg) || !phi.target->same_structure(*rho_b.alg))
        throw std::invalid_argument("pushforward: morphism does not match the actions");
    const auto f = morphism_flags(phi);
    if (!f.multiplicative || !f.unital || !f.star) throw std::invalid_argument("pushforward: not a unital *-homomorphism");
    if (!f.surjective) throw std::invalid_argument("pushforward: morphism is not surjective");
    for (std::size_t g = 0; g < rho_a.dim_h(); ++g)
        if (phi.matrix * rho_a.matrix(g) != rho_b.matrix(g) * phi.matrix)
            throw std::invalid_argument("pushforward: morphism is not H-equivariant");
    return {a.hopf, rho_b.alg, phi.matrix * a.m};
}

Report cocommutative_facts(const StarAction& rho, const std::vector<Twist>& twists) {
    const HopfStarAlgebra& H = *rho.hopf;
    const StarAlgebra& A = *rho.alg;
    if (!is_cocommutative(H)) throw std::invalid_argument("cocommutative_facts: H is not cocommutative");
    for (const auto& t : twists) require_compatible(t, rho);
    Report rep;

    const Subspace z = center(A);
    std::string bad;
    for (std::size_t k = 0; k < twists.size() && bad.empty(); ++k)
        for (std::size_t g = 0; g < H.dim(); ++g)
            if (!z.contains(twists[k].at(g))) {
                bad = "twist " + std::to_string(k) + " at " + H.alg->names[g];
                break;
            }
    rep.add("values central", bad.empty(), bad);

    bad.clear();
    for (std::size_t i = 0; i < twists.size() && bad.empty(); ++i)
        for (std::size_t j = i + 1; j < twists.size(); ++j)
            if (convolve(twists[i], twists[j]) != convolve(twists[j], twists[i])) {
                bad = std::to_string(i) + "," + std::to_string(j);
                break;
            }
    rep.add("convolution commutes", bad.empty(), bad);

    // homomorphisms H -> Z(A)^H
    const Subspace zinv = z.intersect(invariants(rho));
    auto is_hom = [&](const Twist& t) {
        if (t(H.alg->unit) != A.unit) return false;
        for (std::size_t g = 0; g < H.dim(); ++g) {
            if (!zinv.contains(t.at(g))) return false;
            for (std::size_t h = 0; h < H.dim(); ++h)
                if (t(H.alg->mult[g * H.dim() + h]) != A.mul(t.at(g), t.at(h))) return false;
        }
        return true;
    };
    std::vector<const Twist*> homs;
    for (const auto& t : twists)
        if (is_hom(t) && is_GL_member(t, rho).passed()) homs.push_back(&t);

    bad.clear();
    std::string bad_inv;
    for (std::size_t i = 0; i < homs.size(); ++i) {
        const Twist inv = twist_inverse(*homs[i], rho);
        if (bad.empty() && !is_hom(inv)) bad = "inverse of " + std::to_string(i);
        for (std::size_t j = 0; j < homs.size() && bad.empty(); ++j)
            if (!is_hom(convolve(*homs[i], *homs[j]))) bad = std::to_string(i) + "*" + std::to_string(j);
        const Twist via_s{homs[i]->hopf, homs[i]->alg, homs[i]->m * H.antipode};
        if (bad_inv.empty() && via_s != inv) bad_inv = std::to_string(i);
    }
    const std::string count = std::to_string(homs.size()) + " homomorphisms";
    rep.add("invariant-center homomorphisms closed", bad.empty(), bad.empty() ? count : bad);
    rep.add("inverse formula", bad_inv.empty(), bad_inv.empty() ? count : bad_inv);
    return rep;
}

std::vector<Vec> unitary_central_samples(const StarAlgebra& a, std::uint64_t seed) {
    const auto zb = center(a).basis();
    const std::vector<Gauss> w = {Gauss(0), Gauss(1), Gauss::i(), Gauss(-1), -Gauss::i()};
    std::vector<Vec> out{a.unit};
    auto consider = [&](const std::vector<std::size_t>& pick) {
        Vec v(a.dim);
        for (std::size_t k = 0; k < zb.size(); ++k) axpy(v, w[pick[k]], zb[k]);
        if (is_unitary(a, v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    };
    std::vector<std::size_t> pick(zb.size(), 0);
    if (zb.size() <= 4) {
        for (;;) {
            consider(pick);
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == w.size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
    } else {
        std::mt19937_64 gen(seed);
        std::uniform_int_distribution<std::size_t> d(0, w.size() - 1);
        for (int t = 0; t < 256; ++t) {
            for (auto& p : pick) p = d(gen);
            consider(pick);
        }
    }
    return out;
}

std::vector<Twist> convolution_closure(const std::vector<Twist>& gens, std::size_t cap) {
    if (gens.empty()) return {};
    std::vector<Twist> out{twist_unit(gens.front().hopf, gens.front().alg)};
    for (const auto& g : gens)
        if (!contains(out, g)) out.push_back(g);
    for (std::size_t i = 0; i < out.size() && out.size() < cap; ++i)
        for (const auto& g : gens) {
            Twist p = convolve(out[i], g);
            if (!contains(out, p)) out.push_back(std::move(p));
            if (out.size() >= cap) break;
        }
    return out;
}

Report check_group_axioms(const std::vector<Twist>& elems, const StarAction& rho) {
    Report rep;
    std::string bad;
    for (std::size_t k = 0; k < elems.size() && bad.empty(); ++k)
        if (auto f = is_GL_member(elems[k], rho).first_failure()) bad = std::to_string(k) + ": " + f->name;
    rep.add("membership", bad.empty(), bad);
    if (!bad.empty()) return rep;

    const Twist e = twist_unit(rho.hopf, rho.alg);
    rep.add("identity", contains(elems, e));

    bad.clear();
    for (std::size_t i = 0; i < elems.size() && bad.empty(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (!contains(elems, convolve(elems[i], elems[j]))) {
                bad = std::to_string(i) + "*" + std::to_string(j);
                break;
            }
    rep.add("closure", bad.empty(), bad);

    bad.clear();
    for (std::size_t i = 0; i < elems.size() && bad.empty(); ++i) {
        const Twist inv = twist_inverse(elems[i], rho);
        if (!contains(elems, inv) || convolve(elems[i], inv) != e || convolve(inv, elems[i]) != e)
            bad = std::to_string(i);
    }
    rep.add("inverses", bad.empty(), bad);

    bad.clear();
    const std::size_t n = std::min<std::size_t>(elems.size(), 12);
    for (std::size_t i = 0; i < n && bad.empty(); ++i)
        for (std::size_t j = 0; j < n && bad.empty(); ++j) {
            const Twist ij = convolve(elems[i], elems[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (convolve(ij, elems[k]) != convolve(elems[i], convolve(elems[j], elems[k]))) {
                    bad = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
                    break;
                }
        }
    rep.add("associativity", bad.empty(), bad.empty() ? std::to_string(n * n * n) + " triples" : bad);
    return rep;
}

}  // namespace hm
