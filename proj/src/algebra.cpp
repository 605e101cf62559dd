#include "hopfmorita/algebra.hpp"

#include <stdexcept>

namespace hm {

Matrix FaithfulRep::image(const Vec& a) const {
    if (a.size() != images.size()) throw std::invalid_argument("rep image: size mismatch");
    Matrix m(dim, dim);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero()) m += a[k] * images[k];
    return m;
}

Vec StarAlgebra::mul(const Vec& a, const Vec& b) const {
    if (a.size() != dim || b.size() != dim) throw std::invalid_argument("mul: size mismatch");
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            axpy(r, a[i] * b[j], mult[i * dim + j]);
        }
    }
    return r;
}

Vec StarAlgebra::star(const Vec& a) const {
    if (a.size() != dim) throw std::invalid_argument("star: size mismatch");
    return invol_conjugates ? invol * conj(a) : invol * a;
}

Matrix StarAlgebra::left_mult(const Vec& a) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_col(j, mul(a, basis(j)));
    return m;
}

Matrix StarAlgebra::right_mult(const Vec& a) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_col(j, mul(basis(j), a));
    return m;
}

bool StarAlgebra::same_structure(const StarAlgebra& o) const {
    return dim == o.dim && mult == o.mult && unit == o.unit && invol == o.invol &&
           invol_conjugates == o.invol_conjugates;
}

void validate_shape(const StarAlgebra& a) {
    if (a.dim == 0) throw std::invalid_argument("algebra of dimension 0");
    if (a.names.size() != a.dim) throw std::invalid_argument("basis_names length differs from dim");
    if (a.mult.size() != a.dim * a.dim) throw std::invalid_argument("mult must be dim x dim");
    for (const auto& v : a.mult)
        if (v.size() != a.dim) throw std::invalid_argument("mult entry has wrong length");
    if (a.unit.size() != a.dim) throw std::invalid_argument("unit has wrong length");
    if (a.invol.rows() != a.dim || a.invol.cols() != a.dim) throw std::invalid_argument("invol must be dim x dim");
    if (a.rep) {
        if (a.rep->images.size() != a.dim) throw std::invalid_argument("rep needs one image per basis element");
        for (const auto& m : a.rep->images)
            if (m.rows() != a.rep->dim || m.cols() != a.rep->dim)
                throw std::invalid_argument("rep image has wrong size");
        if (a.rep->gram.rows() != a.rep->dim || !a.rep->gram.square())
            throw std::invalid_argument("rep gram has wrong size");
    }
}

Report check_star_algebra(const StarAlgebra& a) {
    validate_shape(a);
    Report rep;
    const std::size_t d = a.dim;

    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
        for (std::size_t j = 0; j < d && bad.empty(); ++j) {
            Vec ij = a.mult[i * d + j];
            for (std::size_t k = 0; k < d; ++k) {
                Vec jk = a.mult[j * d + k];
                if (a.mul(ij, a.basis(k)) != a.mul(a.basis(i), jk)) {
                    bad = a.names[i] + "," + a.names[j] + "," + a.names[k];
                    break;
                }
            }
        }
    rep.add("associativity", bad.empty(), bad.empty() ? "" : "fails on (" + bad + ")");

    std::string left_bad, right_bad;
    for (std::size_t i = 0; i < d; ++i) {
        if (left_bad.empty() && a.mul(a.unit, a.basis(i)) != a.basis(i)) left_bad = a.names[i];
        if (right_bad.empty() && a.mul(a.basis(i), a.unit) != a.basis(i)) right_bad = a.names[i];
    }
    rep.add("left unit", left_bad.empty(), left_bad);
    rep.add("right unit", right_bad.empty(), right_bad);

    std::string anti_bad;
    for (std::size_t i = 0; i < d && anti_bad.empty(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (a.star(a.mult[i * d + j]) != a.mul(a.star(a.basis(j)), a.star(a.basis(i)))) {
                anti_bad = a.names[i] + "," + a.names[j];
                break;
            }
    rep.add("involution antimultiplicative", anti_bad.empty(), anti_bad);

    std::string inv_bad;
    for (std::size_t i = 0; i < d; ++i)
        if (a.star(a.star(a.basis(i))) != a.basis(i)) {
            inv_bad = a.names[i];
            break;
        }
    rep.add("involution involutive", inv_bad.empty(), inv_bad);

    // (i x)* must equal -i x*; checked on i * b_k
    std::string lin_bad;
    for (std::size_t i = 0; i < d; ++i)
        if (a.star(Gauss::i() * a.basis(i)) != -Gauss::i() * a.star(a.basis(i))) {
            lin_bad = "i*" + a.names[i];
            break;
        }
    rep.add("involution antilinear", lin_bad.empty(), lin_bad);

    if (a.rep) rep.merge("rep: ", check_rep(a, *a.rep));
    return rep;
}

namespace {

AlgPtr finish(StarAlgebra a) {
    validate_shape(a);
    return std::make_shared<const StarAlgebra>(std::move(a));
}

}  // namespace

AlgPtr make_matrix_algebra(std::size_t n) {
    if (n == 0) throw std::invalid_argument("matrix algebra needs n >= 1");
    StarAlgebra a;
    a.dim = n * n;
    a.mult.assign(a.dim * a.dim, Vec(a.dim));
    a.unit = Vec(a.dim);
    a.invol = Matrix(a.dim, a.dim);
    FaithfulRep rep{n, {}, Matrix::identity(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a.names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            a.invol(j * n + i, i * n + j) = 1;
            Matrix e(n, n);
            e(i, j) = 1;
            rep.images.push_back(e);
            for (std::size_t l = 0; l < n; ++l) a.mult[(i * n + j) * a.dim + (j * n + l)][i * n + l] = 1;
        }
    for (std::size_t i = 0; i < n; ++i) a.unit[i * n + i] = 1;
    a.rep = std::move(rep);
    return finish(std::move(a));
}

AlgPtr make_function_algebra(std::size_t k) {
    if (k == 0) throw std::invalid_argument("function algebra needs k >= 1");
    StarAlgebra a;
    a.dim = k;
    a.mult.assign(k * k, Vec(k));
    a.unit = Vec(k, Gauss(1));
    a.invol = Matrix::identity(k);
    FaithfulRep rep{k, {}, Matrix::identity(k)};
    for (std::size_t x = 0; x < k; ++x) {
        a.names.push_back("e" + std::to_string(x + 1));
        a.mult[x * k + x][x] = 1;
        Matrix m(k, k);
        m(x, x) = 1;
        rep.images.push_back(m);
    }
    a.rep = std::move(rep);
    return finish(std::move(a));
}

AlgPtr make_scalar_algebra() {
    StarAlgebra a;
    a.dim = 1;
    a.names = {"1"};
    a.mult = {Vec{1}};
    a.unit = Vec{1};
    a.invol = Matrix::identity(1);
    a.rep = FaithfulRep{1, {Matrix::identity(1)}, Matrix::identity(1)};
    return finish(std::move(a));
}

AlgPtr matrix_algebra_over(const AlgPtr& base, std::size_t n) {
    if (n == 0) throw std::invalid_argument("matrix algebra needs n >= 1");
    const StarAlgebra& A = *base;
    const std::size_t d = A.dim, D = n * n * d;
    auto idx = [&](std::size_t r, std::size_t c, std::size_t k) { return (r * n + c) * d + k; };
    StarAlgebra M;
    M.dim = D;
    M.mult.assign(D * D, Vec(D));
    M.unit = Vec(D);
    M.invol = Matrix(D, D);
    M.invol_conjugates = A.invol_conjugates;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < d; ++k) {
                M.names.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1) + "*" + A.names[k]);
                // (E_rc a)* = E_cr a*
                Vec sk = A.invol.col(k);
                for (std::size_t k2 = 0; k2 < d; ++k2) M.invol(idx(c, r, k2), idx(r, c, k)) = sk[k2];
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t k2 = 0; k2 < d; ++k2) {
                        const Vec& prod = A.mult[k * d + k2];
                        Vec& out = M.mult[idx(r, c, k) * D + idx(c, l, k2)];
                        for (std::size_t k3 = 0; k3 < d; ++k3) out[idx(r, l, k3)] = prod[k3];
                    }
            }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < d; ++k) M.unit[idx(r, r, k)] = A.unit[k];
    if (A.rep) {
        const FaithfulRep& ar = *A.rep;
        FaithfulRep rep{n * ar.dim, {}, kron(Matrix::identity(n), ar.gram)};
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t k = 0; k < d; ++k) {
                    Matrix e(n, n);
                    e(r, c) = 1;
                    rep.images.push_back(kron(e, ar.images[k]));
                }
        M.rep = std::move(rep);
    }
    return finish(std::move(M));
}

Report check_rep(const StarAlgebra& a, const FaithfulRep& rep) {
    Report r;
    const std::size_t d = a.dim;
    if (rep.images.size() != d) throw std::invalid_argument("rep needs one image per basis element");
    bool mult_ok = true, star_ok = true;
    for (std::size_t i = 0; i < d && mult_ok; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (rep.image(a.mult[i * d + j]) != rep.images[i] * rep.images[j]) {
                mult_ok = false;
                break;
            }
    r.add("multiplicative", mult_ok);
    r.add("unital", rep.image(a.unit) == Matrix::identity(rep.dim));
    // adjoint with respect to gram: G pi(x*) = pi(x)^H G
    for (std::size_t i = 0; i < d; ++i)
        if (rep.gram * rep.image(a.star(a.basis(i))) != rep.images[i].adjoint() * rep.gram) {
            star_ok = false;
            break;
        }
    r.add("star preserving", star_ok);
    std::vector<Vec> flat;
    for (const auto& m : rep.images) flat.push_back(m.data());
    r.add("injective", Subspace::span(rep.dim * rep.dim, flat).dim() == d);
    r.add("gram positive definite", psd_check(rep.gram) && inverse(rep.gram).has_value());
    return r;
}

std::optional<FaithfulRep> regular_trace_rep(const StarAlgebra& a) {
    FaithfulRep rep{a.dim, {}, Matrix(a.dim, a.dim)};
    for (std::size_t i = 0; i < a.dim; ++i) rep.images.push_back(a.left_mult(a.basis(i)));
    auto trace = [&](const Vec& x) {
        Gauss t;
        Matrix l = a.left_mult(x);
        for (std::size_t k = 0; k < a.dim; ++k) t += l(k, k);
        return t;
    };
    for (std::size_t i = 0; i < a.dim; ++i) {
        Vec si = a.star(a.basis(i));
        for (std::size_t j = 0; j < a.dim; ++j) rep.gram(i, j) = trace(a.mul(si, a.basis(j)));
    }
    if (!check_rep(a, rep).passed()) return std::nullopt;
    return rep;
}

std::optional<FaithfulRep> positivity_rep(const StarAlgebra& a) {
    if (a.rep) return a.rep;
    return regular_trace_rep(a);
}

bool element_is_positive(const StarAlgebra& a, const Vec& x, const FaithfulRep& rep) {
    if (x.size() != a.dim || rep.images.size() != a.dim)
        throw std::invalid_argument("element_is_positive: representation belongs to another algebra");
    return psd_check(rep.gram * rep.image(x));
}

bool element_is_positive(const StarAlgebra& a, const Vec& x) {
    auto rep = positivity_rep(a);
    if (!rep) throw std::invalid_argument("algebra has no faithful positivity representation");
    return element_is_positive(a, x, *rep);
}

Subspace center(const StarAlgebra& a) {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < a.dim; ++i) blocks.push_back(a.right_mult(a.basis(i)) - a.left_mult(a.basis(i)));
    return kernel(stack_rows(blocks));
}

bool matrix_over_algebra_is_positive(const StarAlgebra& a, const std::vector<std::vector<Vec>>& m,
                                     const FaithfulRep& rep) {
    const std::size_t n = m.size(), r = rep.dim;
    Matrix big(n * r, n * r);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("matrix over algebra must be square");
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j].size() != a.dim) throw std::invalid_argument("matrix entry has wrong length");
            if (is_zero(m[i][j])) continue;
            Matrix b = rep.gram * rep.image(m[i][j]);
            for (std::size_t p = 0; p < r; ++p)
                for (std::size_t q = 0; q < r; ++q) big(i * r + p, j * r + q) = b(p, q);
        }
    }
    return psd_check(big);
}

AlgebraMorphism::AlgebraMorphism(AlgPtr s, AlgPtr t, Matrix m)
    : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
    if (!source || !target) throw std::invalid_argument("morphism needs source and target");
    if (matrix.rows() != target->dim || matrix.cols() != source->dim)
        throw std::invalid_argument("morphism matrix has wrong dimensions");
}

MorphismFlags morphism_flags(const AlgebraMorphism& f) {
    const StarAlgebra& S = *f.source;
    const StarAlgebra& T = *f.target;
    MorphismFlags fl;
    fl.multiplicative = true;
    for (std::size_t i = 0; i < S.dim && fl.multiplicative; ++i)
        for (std::size_t j = 0; j < S.dim; ++j)
            if (f(S.mult[i * S.dim + j]) != T.mul(f.matrix.col(i), f.matrix.col(j))) {
                fl.multiplicative = false;
                break;
            }
    fl.unital = f(S.unit) == T.unit;
    fl.star = true;
    for (std::size_t i = 0; i < S.dim; ++i)
        if (f(S.star(S.basis(i))) != T.star(f.matrix.col(i))) {
            fl.star = false;
            break;
        }
    std::size_t rk = rank(f.matrix);
    fl.injective = rk == S.dim;
    fl.surjective = rk == T.dim;
    return fl;
}

Report check_morphism(const AlgebraMorphism& f) {
    auto fl = morphism_flags(f);
    Report r;
    r.add("multiplicative", fl.multiplicative);
    r.add("unital", fl.unital);
    r.add("star", fl.star);
    return r;
}

AlgebraMorphism identity_morphism(const AlgPtr& a) { return {a, a, Matrix::identity(a->dim)}; }

AlgebraMorphism compose(const AlgebraMorphism& outer, const AlgebraMorphism& inner) {
    if (!outer.source->same_structure(*inner.target)) throw std::invalid_argument("compose: algebras do not match");
    return {inner.source, outer.target, outer.matrix * inner.matrix};
}

AlgebraMorphism inverse(const AlgebraMorphism& f) {
    auto inv = inverse(f.matrix);
    if (!inv) throw std::domain_error("morphism is not bijective");
    return {f.target, f.source, *inv};
}

AlgebraMorphism conjugation_by(const AlgPtr& a, const Vec& u) {
    Vec us = a->star(u);
    Matrix m(a->dim, a->dim);
    for (std::size_t j = 0; j < a->dim; ++j) m.set_col(j, a->mul(a->mul(u, a->basis(j)), us));
    return {a, a, m};
}

}  // namespace hm

namespace hm {

std::optional<Vec> invert(const StarAlgebra& a, const Vec& x) {
    auto sol = solve(a.left_mult(x), a.unit);
    if (!sol) return std::nullopt;
    // in finite dimension a right inverse is two-sided; checked anyway
    if (a.mul(sol->particular, x) != a.unit) return std::nullopt;
    return sol->particular;
}

bool is_unitary(const StarAlgebra& a, const Vec& u) {
    const Vec us = a.star(u);
    return a.mul(us, u) == a.unit && a.mul(u, us) == a.unit;
}

}  // namespace hm
