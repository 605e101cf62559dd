// Small hand-built objects shared by the test binaries.
#pragma once

#include "hopfmorita/bimodule.hpp"

namespace fx {

using namespace hm;

// Four-dimensional Hopf algebra generated by g, x with g^2 = 1, x^2 = 0,
// xg = -gx; basis 1, g, x, gx; g* = g, x* = x. Not cocommutative.
inline HopfPtr sweedler_hopf() {
    StarAlgebra a;
    a.dim = 4;
    a.names = {"1", "g", "x", "gx"};
    a.mult.assign(16, Vec(4));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) { a.mult[i * 4 + j][k] = c; };
    for (std::size_t i = 0; i < 4; ++i) {
        set(0, i, i, 1);
        set(i, 0, i, 1);
    }
    set(1, 1, 0, 1);
    set(1, 2, 3, 1);
    set(1, 3, 2, 1);
    set(2, 1, 3, -1);
    set(3, 1, 2, -1);
    a.unit = unit_vector(4, 0);
    a.invol = Matrix::identity(4);
    a.invol(3, 3) = -1;
    auto alg = std::make_shared<const StarAlgebra>(a);
    std::vector<Vec> comult(4, Vec(16));
    comult[0][0 * 4 + 0] = 1;
    comult[1][1 * 4 + 1] = 1;
    comult[2][2 * 4 + 0] = 1;  // x (x) 1
    comult[2][1 * 4 + 2] = 1;  // g (x) x
    comult[3][3 * 4 + 1] = 1;  // gx (x) g
    comult[3][0 * 4 + 3] = 1;  // 1 (x) gx
    Matrix s(4, 4);
    s(0, 0) = 1;
    s(1, 1) = 1;
    s(3, 2) = -1;  // S(x) = -gx
    s(2, 3) = 1;   // S(gx) = x
    return make_hopf(alg, comult, Vec{1, 1, 0, 0}, s);
}

// E = A^k over A with <x, y> = sum_ij x_i* h_ij y_j for Hermitian h in M_k(A);
// scalars act on the left. Basis index i * dim(A) + l is e_i (x) a_l.
inline BimodPtr weighted_module(const AlgPtr& a, const std::vector<std::vector<Vec>>& h) {
    const StarAlgebra& A = *a;
    const std::size_t k = h.size(), d = A.dim, m = k * d;
    CovariantBimodule e;
    e.left = make_scalar_algebra();
    e.right = a;
    e.dim = m;
    for (std::size_t x = 0; x < m; ++x) e.left_act.push_back(unit_vector(m, x));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t p = 0; p < d; ++p) {
            Vec v(m);
            Vec prod = A.mult[(x % d) * d + p];
            for (std::size_t q = 0; q < d; ++q) v[(x / d) * d + q] = prod[q];
            e.right_act.push_back(v);
        }
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            e.ip_right.push_back(A.mul(A.mul(A.star(A.basis(x % d)), h[x / d][y / d]), A.basis(y % d)));
    return make_bimodule(std::move(e));
}

}  // namespace fx
