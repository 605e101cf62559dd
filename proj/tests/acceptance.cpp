// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include "hopfmorita/crossed.hpp"
#include "hopfmorita/io.hpp"
#include "hopfmorita/suites.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hm;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

Outcome suite_outcome(const std::string& name, const std::string& prefix = "") {
    Outcome o;
    Report r = run_suite(name, 0);
    std::size_t n = 0;
    for (const auto& it : r.items()) {
        if (it.name.rfind(prefix, 0) != 0) continue;
        ++n;
        o.require(it.ok, name + ": " + it.name);
    }
    o.require(n > 0, name + ": no items");
    if (o.ok) o.detail = name + " " + std::to_string(n) + " items";
    return o;
}

Outcome hopf_axioms() {
    Outcome o;
    const std::vector<std::pair<std::string, HopfPtr>> groups = {{"Z2", cyclic_group_hopf(2)},
                                                                 {"Z3", cyclic_group_hopf(3)},
                                                                 {"Z4", cyclic_group_hopf(4)},
                                                                 {"S3", symmetric_group_s3_hopf()}};
    for (const auto& [name, h] : groups) o.require(check_hopf(*h).passed(), name + " fails check_hopf");
    const std::vector<std::pair<std::string, std::string>> corrupt = {
        {"corrupt_antipode.json", "Z3_bad_antipode: left antipode"},
        {"corrupt_counit.json", "Z3_bad_counit: left counit"},
        {"corrupt_comult.json", "Z3_bad_comult: comultiplication multiplicative"},
        {"corrupt_unit.json", "Z3_bad_unit: algebra: left unit"},
    };
    for (const auto& [file, axiom] : corrupt) {
        Report r = io::check_workspace(io::load_manifest(std::string(FIXTURE_DIR) + "/" + file));
        o.require(r.has_failure(axiom), file + " does not fail " + axiom);
    }
    if (o.ok) o.detail = "4 groups pass, 4 corruptions named";
    return o;
}

Outcome gns_criterion() {
    Outcome o;
    auto sw = swap_action();
    Functional omega{sw->alg, Vec{1, 1}};
    GnsSpace g = gns(omega, sw);
    o.require(g.dim() == 2, "GNS dimension " + std::to_string(g.dim()));
    o.require(check_covariant_rep(g.rep).passed(), "GNS representation not covariant");
    const HopfStarAlgebra& H = *sw->hopf;
    for (std::size_t k = 0; k < H.dim(); ++k)
        o.require(g.rep.h[k] * g.vacuum == H.counit[k] * g.vacuum, "vacuum not invariant");
    std::vector<Vec> orbit;
    for (std::size_t a = 0; a < sw->dim_a(); ++a) orbit.push_back(g.rep.pi[a] * g.vacuum);
    o.require(rank(Matrix::from_cols(orbit, g.dim())) == g.dim(), "vacuum not cyclic");

    Intertwiner u = gns_crossed_intertwiner(omega, sw);
    o.require(u.checks.passed(), "intertwiner checks fail");
    auto c = crossed_algebra(sw);
    Functional eps{H.alg, H.counit};
    GnsSpace gc = gns(functional_product(omega, eps, c), c.canonical_action);
    o.require(u.u.square() && rank(u.u) == u.u.rows(), "intertwiner not invertible");
    o.require(u.u.adjoint() * gc.rep.gram * u.u == g.rep.gram, "intertwiner not isometric");

    Functional chi{H.alg, Vec{1, -1}};
    for (const auto& mu : {eps, chi}) {
        Matrix gram = functional_gram(functional_product(omega, mu, c));
        o.require(psd_check(gram), "omega (x) mu Gram not psd");
        o.require(oracle::psd_by_elimination(gram), "oracle disagrees on omega (x) mu");
    }
    if (o.ok) o.detail = "dim 2, invariant cyclic vacuum, unitary intertwiner";
    return o;
}

// Regular representation read off the structure constants; a *-representation
// for bases orthonormal under the trace (diagonal idempotents, matrix units).
Matrix regular(const StarAlgebra& a, const Vec& x) {
    Matrix m(a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) m(k, j) += x[i] * a.mult[i * a.dim + j][k];
    return m;
}

// Positivity of every tuple Gram matrix (<x_i, x_j>) in M_n(A), n <= 3, with
// entries drawn from a candidate set containing the module basis and e_i (x) 1.
bool all_tuples_positive(const CovariantBimodule& e, const std::vector<Vec>& candidates) {
    const StarAlgebra& A = *e.right;
    const std::size_t c = candidates.size(), d = A.dim;
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            Matrix big(n * d, n * d);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Matrix blk = regular(A, e.ip(candidates[idx[i]], candidates[idx[j]]));
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t s = 0; s < d; ++s) big(i * d + r, j * d + s) = blk(r, s);
                }
            if (!oracle::psd_by_elimination(big)) return false;
            std::size_t p = 0;
            while (p < n && ++idx[p] == c) idx[p++] = 0;
            if (p == n) break;
        }
    }
    return true;
}

Outcome positivity_oracle() {
    Outcome o;
    std::size_t positive = 0, total = 0;
    const std::vector<AlgPtr> algebras = {swap_action()->alg, make_matrix_algebra(2)};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const AlgPtr& a = algebras[seed % 2];
        const StarAlgebra& A = *a;
        oracle::Sampler s(seed);
        auto rnd = [&] { return s.vec(A.dim, 2); };
        std::vector<std::vector<Vec>> h(2, std::vector<Vec>(2, A.zero()));
        if (seed % 4 < 2) {
            // B* B for random B in M_2(A)
            std::vector<std::vector<Vec>> b = {{rnd(), rnd()}, {rnd(), rnd()}};
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t l = 0; l < 2; ++l) axpy(h[i][j], 1, A.mul(A.star(b[l][i]), b[l][j]));
        } else {
            Vec p = rnd(), q = rnd(), r = rnd();
            h[0][0] = p + A.star(p);
            h[1][1] = q + A.star(q);
            h[0][1] = r;
            h[1][0] = A.star(r);
        }
        auto e = fx::weighted_module(a, h);
        std::vector<Vec> cand;
        for (std::size_t k = 0; k < e->dim; ++k) cand.push_back(e->basis(k));
        for (std::size_t i = 0; i < 2; ++i) {
            Vec x(e->dim);
            for (std::size_t l = 0; l < A.dim; ++l) x[i * A.dim + l] = A.unit[l];
            cand.push_back(x);
        }
        const bool brute = all_tuples_positive(*e, cand);
        const bool fast = complete_positivity_check(*e);
        ++total;
        positive += brute ? 1 : 0;
        o.require(brute == fast, "disagreement at seed " + std::to_string(seed));
    }
    if (o.ok)
        o.detail = std::to_string(total) + " inner products agree (" + std::to_string(positive) + " positive, " +
                   std::to_string(total - positive) + " not)";
    o.require(positive > 0 && positive < total, "sample does not exercise both outcomes");
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
};

Outcome both(Outcome a, const Outcome& b) {
    a.require(b.ok, b.detail);
    if (a.ok) a.detail += "; " + b.detail;
    return a;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Hopf axiom suite", 1.0, hopf_axioms},
        {2, "convolution group suite", 5.0, [] { return suite_outcome("appendix-groups"); }},
        {3, "equivalence-relation suite", 10.0, [] { return suite_outcome("equivalence-relation"); }},
        {4, "kernel of forgetting the action", 0.0, [] { return suite_outcome("kernel-pic"); }},
        {5, "crossed-product suite", 10.0,
         [] { return both(suite_outcome("crossed-isos"), suite_outcome("crossed-morita")); }},
        {6, "GNS suite", 0.0, gns_criterion},
        {7, "characters of Z4 and the Picard bridge", 0.0,
         [] { return both(suite_outcome("crossed-morita", "chi"), suite_outcome("crossed-morita", "Z4")); }},
        {8, "complete positivity against all tuples", 0.0, positivity_oracle},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs >= c.budget_s) o.require(false, "over the time budget");
        all = all && o.ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << timing
                  << "; " << o.detail << ")\n";
    }
    return all ? 0 : 1;
}
