#include "hopfmorita/search.hpp"

#include <random>

namespace hm {

std::vector<Vec> sample_span(const std::vector<Vec>& basis, std::uint64_t seed, std::size_t draws) {
    std::vector<Vec> out(basis);
    if (basis.empty()) return out;
    const std::size_t n = basis.front().size();
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (std::size_t t = 0; t < draws; ++t) {
        Vec v(n);
        for (const auto& b : basis) axpy(v, Gauss(Rational(coef(gen)), Rational(coef(gen))), b);
        if (!is_zero(v)) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace hm

namespace hm {

const char* to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::found: return "found";
        case SearchOutcome::none: return "none";
        case SearchOutcome::undetermined: return "undetermined";
    }
    return "?";
}

std::vector<Vec> unit_root_combinations(const std::vector<Vec>& basis, std::uint64_t seed,
                                        std::size_t max_exhaustive) {
    std::vector<Vec> out;
    if (!basis.empty() && basis.size() <= max_exhaustive) {
        const std::vector<Gauss> w = {Gauss(0), Gauss(1), Gauss::i(), Gauss(-1), -Gauss::i()};
        std::vector<std::size_t> pick(basis.size(), 0);
        for (;;) {
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == w.size()) pick[k++] = 0;
            if (k == pick.size()) break;
            Vec v(basis.front().size());
            for (std::size_t j = 0; j < basis.size(); ++j) axpy(v, w[pick[j]], basis[j]);
            out.push_back(std::move(v));
        }
    }
    for (auto& v : sample_span(basis, seed)) out.push_back(std::move(v));
    return out;
}

}  // namespace hm
