#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2tilt/basep.hpp"
#include "sl2tilt/ffmod.hpp"

namespace sl2tilt::crosscheck {

struct GridReport {
  std::int64_t queries = 0;
  std::int64_t hom_mismatches = 0;
  std::int64_t ext_mismatches = 0;
  std::vector<std::string> counterexamples;  ///< at most a few, for reporting
  bool ok() const { return hom_mismatches == 0 && ext_mismatches == 0; }
};

/// homcount against the matrix oracle for all b, c in 0..q-2 and every twist j
/// (with jj = 0), for both stable Hom and Ext^1.
GridReport formula_vs_oracle(const ffmod::FieldPtr& field);

}  // namespace sl2tilt::crosscheck
