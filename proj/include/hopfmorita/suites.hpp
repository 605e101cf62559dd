#pragma once

#include "hopfmorita/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hm {

// Named theorem checks on small shipped examples, one report item per
// identity. Deterministic for a given seed.
//   equivalence-relation  strong certification, conjugates, tensor witnesses
//   canonical-isos        unit, inverse and associativity isomorphisms
//   kernel-pic            twisted actions by U(H, B) and their differences
//   crossed-isos          I1, I2, I3 for crossed bimodules
//   appendix-groups       convolution groups, hat map and its kernel
//   crossed-morita        crossed products of equivalence bimodules
const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);
// Throws std::out_of_range for an unknown name.
Report run_suite(const std::string& name, std::uint64_t seed = 0);

}  // namespace hm
