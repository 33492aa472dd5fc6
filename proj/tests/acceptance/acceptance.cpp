// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// selected criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sl2tilt/crosscheck.hpp"
#include "sl2tilt/errors.hpp"
#include "sl2tilt/ffmod.hpp"
#include "sl2tilt/frob.hpp"
#include "sl2tilt/homcount.hpp"
#include "sl2tilt/tables.hpp"
#include "sl2tilt/tilt.hpp"

using namespace sl2tilt;

namespace {

// Pinned limits, in seconds. Every count comparison is exact.
constexpr double kTableSeconds = 1.0;
constexpr double kFinalLawSeconds = 10.0;
constexpr double kOracleGridSeconds = 300.0;
constexpr double kFrobeniusSeconds = 30.0;

const std::vector<std::pair<int, int>> kGrid{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};

struct Outcome {
  bool pass = true;
  std::string detail;
  double limit = 0;  // 0 means no runtime limit
};

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  int count() const { return count_; }
  std::string summary() const { return std::to_string(count_) + " failed: " + first_; }

 private:
  int count_ = 0;
  std::string first_;
};

std::string at(int p, int n) { return "(" + std::to_string(p) + "," + std::to_string(n) + ")"; }

Outcome c1_tables() {
  Outcome out;
  out.limit = kTableSeconds;
  Failures bad;
  std::ostringstream detail;
  for (const auto& name : tables::fixture_names()) {
    const auto start = std::chrono::steady_clock::now();
    const auto fixture = tables::load_fixture(name);
    const GroupParams params(fixture.p, fixture.n);
    const auto result = tilt::run(params, fixture.block);
    const auto cmp = tables::compare(fixture, result, params);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!cmp.ok()) {
      const auto& mm = cmp.mismatches.front();
      bad.add(name + " m=" + std::to_string(mm.m) + " S_" + std::to_string(mm.column) + " expected '" + mm.expected +
              "' got '" + mm.actual + "'");
    }
    if (seconds >= kTableSeconds) bad.add(name + " took " + std::to_string(seconds) + " s");
    detail << name << " " << cmp.state_rows << " rows/" << cmp.cells_checked << " cells; ";
  }
  // Both blocks of SL_2(5^2) from a single unfiltered run.
  const GroupParams g52(5, 2);
  const auto all = tilt::run(g52, tilt::BlockFilter::All);
  for (const char* name : {"sl2_25_even", "sl2_25_odd"}) {
    if (!tables::compare(tables::load_fixture(name), all, g52).ok()) bad.add(std::string(name) + " against --block all");
  }
  out.pass = bad.count() == 0;
  out.detail = out.pass ? detail.str() + "0 mismatches" : bad.summary();
  return out;
}

Outcome c2_final_law() {
  Outcome out;
  out.limit = kFinalLawSeconds;
  Failures bad;
  for (auto [p, n] : kGrid) {
    const GroupParams g(p, n);
    if (!tilt::verify_final(tilt::run(g, tilt::BlockFilter::All).final_state, g)) bad.add(at(p, n));
  }
  out.pass = bad.count() == 0;
  out.detail = out.pass ? std::to_string(kGrid.size()) + " parameter sets" : bad.summary();
  return out;
}

Outcome c3_closed_form() {
  Outcome out;
  Failures bad;
  std::int64_t checked = 0;
  for (auto [p, n] : kGrid) {
    const GroupParams g(p, n);
    const auto result = tilt::run(g, tilt::BlockFilter::All, {true, false});
    for (const auto& s : result.states) {
      const auto expected = tilt::closed_form(g, s.m, tilt::BlockFilter::All);
      for (const auto& [a, symbol] : s.assignment) {
        ++checked;
        if (!symbols_equal(symbol, expected.assignment.at(a), g)) {
          bad.add(at(p, n) + " m=" + std::to_string(s.m) + " S_" + std::to_string(a));
        }
      }
    }
  }
  out.pass = bad.count() == 0;
  out.detail = out.pass ? std::to_string(checked) + " symbols, 0 mismatches" : bad.summary();
  return out;
}

Outcome c4_oracle_grid() {
  Outcome out;
  out.limit = kOracleGridSeconds;
  Failures bad;
  std::int64_t queries = 0;
  for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto report = crosscheck::formula_vs_oracle(ffmod::FiniteField::create(p, n));
    queries += report.queries;
    if (!report.ok()) {
      bad.add(at(p, n) + " hom " + std::to_string(report.hom_mismatches) + ", ext " +
              std::to_string(report.ext_mismatches) + ": " + report.counterexamples.front());
    }
  }
  out.pass = bad.count() == 0;
  out.detail = out.pass ? std::to_string(queries) + " (b,c,twist) queries, Hom and Ext^1 equal" : bad.summary();
  return out;
}

Outcome c5_dichotomy() {
  Outcome out;
  Failures bad;
  std::int64_t cor1 = 0;
  std::int64_t cor2 = 0;
  int max_dim = 0;
  for (auto [p, n] : kGrid) {
    const GroupParams g(p, n);
    tilt::RunResult result;
    try {
      result = tilt::run(g, tilt::BlockFilter::All, {true, false});
    } catch (const Error& e) {
      bad.add(at(p, n) + " " + e.what());
      continue;
    }
    max_dim = std::max(max_dim, result.stats.max_dimension);
    for (std::int64_t m = 1; m <= g.steps(); ++m) {
      const auto view = tilt::rewrite_for_step(result.states[static_cast<std::size_t>(m - 1)], m, g);
      std::vector<std::int64_t> targets;
      for (const auto& [a, f] : view.forms) {
        if (f.label == tilt::Label::J) targets.push_back(f.y);
      }
      for (const auto& [a, f] : view.forms) {
        if (f.label == tilt::Label::J) continue;
        const int s = layer(f.y, g);
        const std::string where = at(p, n) + " m=" + std::to_string(m) + " S_" + std::to_string(a);
        if (f.label == tilt::Label::L) {
          int total = 0;
          std::int64_t hit = -1;
          for (std::int64_t c : targets) {
            const int d = homcount::stable_hom_dim({floor_at(m, s, g) * p, f.y, m * p, c}, g);
            max_dim = std::max(max_dim, d);
            total += d;
            if (d > 0) hit = c;
          }
          const auto verdict = homcount::ext_cor1(m, f.y, g);
          ++cor1;
          const bool unique = verdict.kind == homcount::ExtensionKind::Unique && verdict.partner_index != g.steinberg();
          if (total != (unique ? 1 : 0) || (unique && hit != verdict.partner_index)) bad.add(where + " cor1");
        }
        const bool ceiling = f.label == tilt::Label::K && !f.boundary;
        if (!ceiling) continue;
        for (std::int64_t c : targets) {
          ++cor2;
          const int raw = homcount::ext1_dim({ceil_at(m, s, g) * p, partner(f.y, g), m * p, c}, g);
          max_dim = std::max(max_dim, raw);
          if ((raw == 0) != homcount::ext_cor2_zero(m, f.y, c, g) || raw != 0) bad.add(where + " cor2 c=" + std::to_string(c));
        }
      }
    }
  }
  if (max_dim > 1) bad.add("dimension " + std::to_string(max_dim));
  out.pass = bad.count() == 0;
  out.detail = out.pass ? std::to_string(cor1) + " floor checks, " + std::to_string(cor2) +
                              " ceiling checks, max dimension " + std::to_string(max_dim)
                        : bad.summary();
  return out;
}

Outcome c6_shifts() {
  Outcome out;
  Failures bad;
  for (auto [p, n] : kGrid) {
    const GroupParams g(p, n);
    for (const auto& [a, count] : tilt::shift_ledger(tilt::run(g, tilt::BlockFilter::All).log, g)) {
      if (count != g.pow(n - 1 - layer(a, g))) bad.add(at(p, n) + " S_" + std::to_string(a));
    }
  }
  int rows = 0;
  for (const char* name : {"sl2_9_even", "sl2_4"}) {
    const auto fixture = tables::load_fixture(name);
    const GroupParams g(fixture.p, fixture.n);
    const auto shifts = tilt::cumulative_shifts(tilt::run(g, fixture.block), g);
    for (const auto& row : fixture.rows) {
      if (row.kind != tables::RowKind::Shift) continue;
      ++rows;
      for (std::size_t k = 0; k < row.cells.size(); ++k) {
        const std::int64_t a = fixture.columns[k];
        if (shifts.at(static_cast<std::size_t>(row.m)).at(a) != std::stoll(row.cells[k])) {
          bad.add(std::string(name) + " m=" + std::to_string(row.m) + " S_" + std::to_string(a));
        }
      }
    }
  }
  out.pass = bad.count() == 0;
  out.detail = out.pass ? "ledger equals p^{n-1-layer} on the grid; " + std::to_string(rows) + " tabulated shift rows"
                        : bad.summary();
  return out;
}

Outcome c7_block_exchange() {
  Outcome out;
  Failures bad;
  int sets = 0;
  for (auto [p, n] : kGrid) {
    if (p == 2) continue;
    ++sets;
    const GroupParams g(p, n);
    if (!tilt::block_exchange_check(tilt::run(g, tilt::BlockFilter::All).final_state, g)) bad.add(at(p, n));
  }
  out.pass = bad.count() == 0;
  out.detail = out.pass ? std::to_string(sets) + " odd-prime parameter sets" : bad.summary();
  return out;
}

Outcome c8_frobenius() {
  Outcome out;
  out.limit = kFrobeniusSeconds;
  Failures bad;
  const GroupParams g36(3, 6);
  const auto d = frob::partition_data(77, g36);
  if (d.z != std::vector<int>{5, 5, 3, 4, 5, 4}) bad.add("Z_77");
  if (frob::format_partition(d.lambda) != "(3,2,1)") bad.add("lambda_77 = " + frob::format_partition(d.lambda));
  if (frob::phi_prime(d.lambda, g36) != -18) bad.add("phi'(lambda_77)");

  for (auto [p, n] : {std::pair{3, 2}, {3, 3}, {2, 4}, {5, 2}, {3, 6}}) {
    const GroupParams g(p, n);
    for (std::int64_t a = 0; a < g.steinberg(); ++a) {
      if (frob::total_omega(a, g) != frob::phi_prime(frob::partition_of(a, g), g)) bad.add(at(p, n) + " a=" + std::to_string(a));
    }
  }
  std::string collisions;
  for (int p : {2, 3, 5, 7}) {
    for (int n = 1; n <= 12; ++n) {
      if (const auto c = frob::phi_collision(p, n)) {
        if (collisions.empty()) {
          collisions = frob::format_partition(c->first) + " and " + frob::format_partition(c->second) + " both " +
                       std::to_string(frob::phi_prime(c->first, GroupParams(p, n))) + " at " + at(p, n) + "; also";
        } else {
          collisions += " " + at(p, n);
        }
      }
    }
  }
  if (!collisions.empty()) bad.add("phi' not injective: " + collisions);
  for (auto [p, n] : kGrid) {
    const GroupParams g(p, n);
    for (std::int64_t a = 0; a < g.steinberg(); ++a) {
      if (!frob::layer_increment_holds(a, g)) bad.add("layer increment " + at(p, n) + " a=" + std::to_string(a));
    }
  }
  out.pass = bad.count() == 0;
  out.detail = out.pass ? "S_77 example, consistency, injectivity for p in {2,3,5,7}, n <= 12, layer increment"
                        : bad.summary();
  return out;
}

Outcome c9_oracle_self_tests() {
  Outcome out;
  Failures bad;
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}}) {
    const auto field = ffmod::FiniteField::create(p, n);
    const GroupParams& g = field->params();
    for (std::int64_t b = 0; b < g.q(); ++b) {
      const auto m = ffmod::build_M(b, field);
      int dim = 1;
      for (int digit : to_digits(b, g).digits) dim *= 1 + digit;
      if (m.dim() != dim) bad.add(at(p, n) + " dim M_" + std::to_string(b));
      if (b == g.steinberg()) {
        if (!ffmod::is_projective(m)) bad.add(at(p, n) + " M_{q-1} not projective");
        continue;
      }
      int head_total = 0;
      for (int w : ffmod::head_weights(m)) head_total += w;
      if (head_total != 1 || ffmod::head_weights(m)[static_cast<std::size_t>(b)] != 1) {
        bad.add(at(p, n) + " head M_" + std::to_string(b));
      }
      if (is_rim(b, g)) {
        const int i = rim_position(b, g);
        const auto expected = ffmod::twist(ffmod::build_M(flip_digit(b, i, g), field), -g.pow(i + 1));
        if (!ffmod::is_isomorphic(ffmod::heller(m), expected)) bad.add(at(p, n) + " Heller M_" + std::to_string(b));
      }
    }
    for (std::int64_t i = 0; i < g.modulus(); ++i) {
      if (!ffmod::is_isomorphic(ffmod::frobenius_twist(ffmod::build_U(i, field)), ffmod::build_U(p * i, field))) {
        bad.add(at(p, n) + " sigma(U_" + std::to_string(i) + ")");
      }
    }
  }
  const auto f32 = ffmod::FiniteField::create(3, 2);
  const GroupParams& g = f32->params();
  int sequences = 0;
  for (std::int64_t b = 0; b < g.steinberg(); ++b) {
    for (int i = 0; i < g.n(); ++i) {
      if (to_digits(b, g)[static_cast<std::size_t>(i)] > g.p() - 2) continue;
      ++sequences;
      if (!ffmod::verify_ses_ifill(b, i, f32)) bad.add("iFill b=" + std::to_string(b) + " i=" + std::to_string(i));
    }
  }
  out.pass = bad.count() == 0;
  out.detail = out.pass ? "heads, dimensions, Frobenius twists, projectivity, Heller law; " + std::to_string(sequences) +
                              " iFill sequences"
                        : bad.summary();
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "table reproduction", c1_tables},       {2, "final-state law", c2_final_law},
      {3, "closed form = simulation", c3_closed_form}, {4, "counting = matrix oracle", c4_oracle_grid},
      {5, "extension dichotomy", c5_dichotomy},   {6, "perversity ledger", c6_shifts},
      {7, "block exchange", c7_block_exchange},   {8, "Frobenius construction", c8_frobenius},
      {9, "oracle self-tests", c9_oracle_self_tests},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.limit > 0 && seconds >= o.limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    std::ostringstream timing;
    timing << std::fixed << std::setprecision(3) << " (" << seconds << " s";
    if (o.limit > 0) timing << ", limit " << std::setprecision(0) << o.limit << " s";
    timing << ")";
    std::cout << (o.pass ? "PASS" : "FAIL") << " c" << c.id << " " << c.name << ": " << o.detail << timing.str() << "\n";
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
