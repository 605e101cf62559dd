#include "hopfmorita/hopf.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hm {

namespace {

// Product in H (x) H of two coefficient vectors of length d^2.
Vec tensor_mul(const StarAlgebra& a, const Vec& x, const Vec& y) {
    const std::size_t d = a.dim;
    Vec r(d * d);
    for (std::size_t p = 0; p < d * d; ++p) {
        if (x[p].is_zero()) continue;
        for (std::size_t q = 0; q < d * d; ++q) {
            if (y[q].is_zero()) continue;
            Vec l = a.mult[(p / d) * d + q / d];
            Vec rr = a.mult[(p % d) * d + q % d];
            axpy(r, x[p] * y[q], kron(l, rr));
        }
    }
    return r;
}

// Apply f (x) g to a vector of length d^2 where f, g are d'xd matrices.
Vec tensor_apply(const Matrix& f, const Matrix& g, const Vec& x) {
    const std::size_t d = f.cols();
    Vec r(f.rows() * g.rows());
    for (std::size_t p = 0; p < x.size(); ++p)
        if (!x[p].is_zero()) axpy(r, x[p], kron(f.col(p / d), g.col(p % d)));
    return r;
}

}  // namespace

Vec HopfStarAlgebra::delta(const Vec& x) const {
    const std::size_t d = dim();
    if (x.size() != d) throw std::invalid_argument("delta: size mismatch");
    Vec r(d * d);
    for (std::size_t i = 0; i < d; ++i)
        if (!x[i].is_zero()) axpy(r, x[i], comult[i]);
    return r;
}

void HopfStarAlgebra::index() {
    if (!alg) throw std::invalid_argument("Hopf algebra without an algebra");
    validate_shape(*alg);
    const std::size_t d = dim();
    if (comult.size() != d) throw std::invalid_argument("comult needs one entry per basis element");
    for (const auto& v : comult)
        if (v.size() != d * d) throw std::invalid_argument("comult entry must have length dim^2");
    if (counit.size() != d) throw std::invalid_argument("counit has wrong length");
    if (antipode.rows() != d || antipode.cols() != d) throw std::invalid_argument("antipode must be dim x dim");
    co_.assign(d, {});
    for (std::size_t g = 0; g < d; ++g)
        for (std::size_t p = 0; p < d * d; ++p)
            if (!comult[g][p].is_zero()) co_[g].push_back({p / d, p % d, comult[g][p]});
    co3_.assign(d, {});
    for (std::size_t g = 0; g < d; ++g)
        for (const auto& t : co_[g])
            for (const auto& u : co_[t.left]) co3_[g].push_back({u.left, u.right, t.right, t.weight * u.weight});
}

HopfPtr make_hopf(AlgPtr alg, std::vector<Vec> comult, Vec counit, Matrix antipode) {
    HopfStarAlgebra h;
    h.alg = std::move(alg);
    h.comult = std::move(comult);
    h.counit = std::move(counit);
    h.antipode = std::move(antipode);
    h.index();
    return std::make_shared<const HopfStarAlgebra>(std::move(h));
}

Report check_hopf(const HopfStarAlgebra& h) {
    const StarAlgebra& A = *h.alg;
    const std::size_t d = h.dim();
    Report rep;
    rep.merge("algebra: ", check_star_algebra(A));
    const Matrix I = Matrix::identity(d);
    Matrix delta_m(d * d, d);
    for (std::size_t g = 0; g < d; ++g) delta_m.set_col(g, h.comult[g]);
    Matrix eps_m(1, d);
    eps_m.set_row(0, h.counit);

    auto first_bad = [&](auto pred) -> std::string {
        for (std::size_t g = 0; g < d; ++g)
            if (!pred(g)) return A.names[g];
        return {};
    };
    auto add = [&](const std::string& name, const std::string& bad) { rep.add(name, bad.empty(), bad); };

    add("coassociativity", first_bad([&](std::size_t g) {
            Vec lhs = tensor_apply(delta_m, I, h.comult[g]);
            Vec rhs = tensor_apply(I, delta_m, h.comult[g]);
            return lhs == rhs;
        }));
    add("left counit", first_bad([&](std::size_t g) { return tensor_apply(eps_m, I, h.comult[g]) == h.basis(g); }));
    add("right counit", first_bad([&](std::size_t g) { return tensor_apply(I, eps_m, h.comult[g]) == h.basis(g); }));

    std::string mul_bad;
    for (std::size_t i = 0; i < d && mul_bad.empty(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (h.delta(A.mult[i * d + j]) != tensor_mul(A, h.comult[i], h.comult[j])) {
                mul_bad = A.names[i] + "," + A.names[j];
                break;
            }
    add("comultiplication multiplicative", mul_bad);
    rep.add("comultiplication unital", h.delta(A.unit) == kron(A.unit, A.unit));

    std::string eps_bad;
    for (std::size_t i = 0; i < d && eps_bad.empty(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (h.eps(A.mult[i * d + j]) != h.counit[i] * h.counit[j]) {
                eps_bad = A.names[i] + "," + A.names[j];
                break;
            }
    add("counit multiplicative", eps_bad);
    rep.add("counit unital", h.eps(A.unit) == Gauss(1));

    auto antipode_side = [&](bool left) {
        return first_bad([&](std::size_t g) {
            Vec s(d);
            for (const auto& t : h.co(g)) {
                Vec term = left ? A.mul(h.S(h.basis(t.left)), h.basis(t.right))
                                : A.mul(h.basis(t.left), h.S(h.basis(t.right)));
                axpy(s, t.weight, term);
            }
            return s == h.counit[g] * A.unit;
        });
    };
    add("left antipode", antipode_side(true));
    add("right antipode", antipode_side(false));

    add("comultiplication star", first_bad([&](std::size_t g) {
            Vec rhs(d * d);
            for (const auto& t : h.co(g))
                axpy(rhs, t.weight.conj(), kron(A.star(h.basis(t.left)), A.star(h.basis(t.right))));
            return h.delta(A.star(h.basis(g))) == rhs;
        }));
    add("counit star",
        first_bad([&](std::size_t g) { return h.eps(A.star(h.basis(g))) == h.counit[g].conj(); }));
    add("antipode star involution",
        first_bad([&](std::size_t g) { return A.star(h.S(A.star(h.S(h.basis(g))))) == h.basis(g); }));
    add("antipode inverse", first_bad([&](std::size_t g) {
            return h.S(h.S_inv(h.basis(g))) == h.basis(g) && h.S_inv(h.S(h.basis(g))) == h.basis(g);
        }));
    return rep;
}

bool is_cocommutative(const HopfStarAlgebra& h) {
    const std::size_t d = h.dim();
    for (std::size_t g = 0; g < d; ++g)
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q)
                if (h.comult[g][p * d + q] != h.comult[g][q * d + p]) return false;
    return true;
}

HopfPtr group_hopf(const std::vector<std::vector<std::size_t>>& cayley, const std::vector<std::size_t>& inv_in,
                   bool star_is_inverse, std::vector<std::string> names) {
    const std::size_t n = cayley.size();
    auto reject = [](const std::string& why) { throw std::invalid_argument("table is not a group: " + why); };
    if (n == 0) reject("empty table");
    for (const auto& row : cayley) {
        if (row.size() != n) reject("table is not square");
        for (auto x : row)
            if (x >= n) reject("entry out of range");
    }
    for (std::size_t g = 0; g < n; ++g)
        if (cayley[0][g] != g || cayley[g][0] != g) reject("index 0 is not the identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]) reject("not associative");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (cayley[g][h] == 0 && cayley[h][g] == 0) inv[g] = h;
    for (std::size_t g = 0; g < n; ++g)
        if (inv[g] == n) reject("element without inverse");
    if (!inv_in.empty() && inv_in != inv) reject("supplied inverse list disagrees with the table");
    if (names.empty()) {
        names.push_back("e");
        for (std::size_t g = 1; g < n; ++g) names.push_back("g" + std::to_string(g));
    }
    if (names.size() != n) throw std::invalid_argument("one name per group element required");

    StarAlgebra a;
    a.dim = n;
    a.names = std::move(names);
    a.mult.assign(n * n, Vec(n));
    a.unit = unit_vector(n, 0);
    a.invol = Matrix(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) a.mult[g * n + h][cayley[g][h]] = 1;
        a.invol(star_is_inverse ? inv[g] : g, g) = 1;
    }
    auto alg = std::make_shared<const StarAlgebra>(std::move(a));
    std::vector<Vec> comult;
    Matrix s(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        comult.push_back(unit_vector(n * n, g * n + g));
        s(inv[g], g) = 1;
    }
    return make_hopf(alg, std::move(comult), Vec(n, Gauss(1)), s);
}

HopfPtr cyclic_group_hopf(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> names{"e"};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    for (std::size_t k = 1; k < n; ++k) names.push_back(k == 1 ? "t" : "t" + std::to_string(k));
    return group_hopf(t, {}, true, names);
}

HopfPtr symmetric_group_s3_hopf() {
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back("p" + std::to_string(perms[a][0] + 1) + std::to_string(perms[a][1] + 1) +
                        std::to_string(perms[a][2] + 1));
        for (std::size_t b = 0; b < n; ++b) {
            std::array<std::size_t, 3> c{};
            for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return group_hopf(t, {}, true, names);
}

std::vector<SweedlerTerm> sweedler(const HopfStarAlgebra& h, const Vec& x) {
    const std::size_t d = h.dim();
    Vec dx = h.delta(x);
    std::vector<SweedlerTerm> out;
    for (std::size_t p = 0; p < d * d; ++p)
        if (!dx[p].is_zero()) out.push_back({h.basis(p / d), h.basis(p % d), dx[p]});
    return out;
}

LinMap convolution(const LinMap& f, const LinMap& g, const HopfStarAlgebra& h, const StarAlgebra& a) {
    const std::size_t d = h.dim();
    if (f.m.cols() != d || g.m.cols() != d || f.m.rows() != a.dim || g.m.rows() != a.dim)
        throw std::invalid_argument("convolution: dimension mismatch");
    Matrix out(a.dim, d);
    for (std::size_t k = 0; k < d; ++k) {
        Vec v(a.dim);
        for (const auto& t : h.co(k)) axpy(v, t.weight, a.mul(f.at(t.left), g.at(t.right)));
        out.set_col(k, v);
    }
    return {out};
}

LinMap convolution_unit(const HopfStarAlgebra& h, const StarAlgebra& a) {
    Matrix m(a.dim, h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k) m.set_col(k, h.counit[k] * a.unit);
    return {m};
}

}  // namespace hm
