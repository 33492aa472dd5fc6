#include "sl2tilt/crosscheck.hpp"

#include "sl2tilt/homcount.hpp"

namespace sl2tilt::crosscheck {

GridReport formula_vs_oracle(const ffmod::FieldPtr& field) {
  const GroupParams& params = field->params();
  const std::int64_t top = params.steinberg();
  GridReport report;
  std::vector<ffmod::MatrixModule> simples;
  std::vector<ffmod::MatrixModule> hellers;
  for (std::int64_t b = 0; b < top; ++b) {
    simples.push_back(ffmod::build_M(b, field));
    hellers.push_back(ffmod::heller(simples.back()));
  }
  auto note = [&](const std::string& kind, const homcount::HomQuery& q, int formula, int oracle) {
    if (report.counterexamples.size() >= 5) return;
    report.counterexamples.push_back(kind + "(U_" + std::to_string(q.j) + " M_" + std::to_string(q.b) + ", U_" +
                                     std::to_string(q.jj) + " M_" + std::to_string(q.c) + "): formula " +
                                     std::to_string(formula) + ", oracle " + std::to_string(oracle));
  };
  for (std::int64_t c = 0; c < top; ++c) {
    const auto& target = simples[static_cast<std::size_t>(c)];
    const ffmod::ProjectiveCover cover = ffmod::projective_cover(target);
    for (std::int64_t b = 0; b < top; ++b) {
      for (std::int64_t j = 0; j < params.modulus(); ++j) {
        const homcount::HomQuery q{j, b, 0, c};
        const int hom = ffmod::stable_hom_dim_oracle(ffmod::twist(simples[static_cast<std::size_t>(b)], j), target, cover);
        const int ext = ffmod::stable_hom_dim_oracle(ffmod::twist(hellers[static_cast<std::size_t>(b)], j), target, cover);
        const int hom_formula = homcount::stable_hom_dim(q, params);
        const int ext_formula = homcount::ext1_dim(q, params);
        ++report.queries;
        if (hom != hom_formula) {
          ++report.hom_mismatches;
          note("PHom", q, hom_formula, hom);
        }
        if (ext != ext_formula) {
          ++report.ext_mismatches;
          note("Ext1", q, ext_formula, ext);
        }
      }
    }
  }
  return report;
}

}  // namespace sl2tilt::crosscheck
