#include "commands.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "sl2tilt/basep.hpp"
#include "sl2tilt/crosscheck.hpp"
#include "sl2tilt/errors.hpp"
#include "sl2tilt/ffmod.hpp"
#include "sl2tilt/frob.hpp"
#include "sl2tilt/homcount.hpp"
#include "sl2tilt/tables.hpp"
#include "sl2tilt/tilt.hpp"

namespace sl2tilt::cli {

namespace {

constexpr std::int64_t kAutoOracleLimit = 16;

std::string digits_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

tables::RenderOptions render_options(const RunConfig& config) {
  tables::RenderOptions options;
  options.format = tables::parse_format(config.format);
  if (config.steps.empty()) return options;
  const auto colon = config.steps.find(':');
  try {
    if (colon == std::string::npos) {
      options.first_step = options.last_step = std::stoll(config.steps);
    } else {
      options.first_step = colon == 0 ? 0 : std::stoll(config.steps.substr(0, colon));
      options.last_step = colon + 1 == config.steps.size() ? -1 : std::stoll(config.steps.substr(colon + 1));
    }
  } catch (const std::logic_error&) {
    throw DomainError("--steps expects 'a:b', 'a:', ':b' or 'a'");
  }
  return options;
}

tilt::RunResult closed_form_run(const GroupParams& params, tilt::BlockFilter filter) {
  tilt::RunResult result;
  for (std::int64_t m = 0; m <= params.steps(); ++m) result.states.push_back(tilt::closed_form(params, m, filter));
  result.final_state = result.states.back();
  return result;
}

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++total_;
    if (ok) {
      out_ << "PASS " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    } else {
      ++failures_;
      out_ << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }
  void skip(const std::string& name, const std::string& why) { out_ << "SKIP " << name << ": " << why << "\n"; }
  int failures() const { return failures_; }
  int total() const { return total_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
  int total_ = 0;
};

bool same_events(const tilt::EventLog& a, const tilt::EventLog& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].m != b[i].m || a[i].a != b[i].a || a[i].kind != b[i].kind || a[i].extender != b[i].extender ||
        a[i].zero_partner != b[i].zero_partner) {
      return false;
    }
  }
  return true;
}

}  // namespace

int cmd_tilt(const RunConfig& config, std::ostream& out) {
  const GroupParams params(config.p, config.n);
  const tilt::BlockFilter filter = tilt::parse_block_filter(config.block);
  tilt::block_indices(params, filter);
  const tables::RenderOptions options = render_options(config);
  tilt::RunResult result;
  if (config.mode == "closed-form") {
    result = closed_form_run(params, filter);
  } else {
    result = tilt::run(params, filter, {!config.fast, config.mode == "both"});
  }
  out << tables::render_run(result, params, filter, options);
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const GroupParams params(config.p, config.n);
  Report report(out);
  out << "# verify SL_2(" << params.p() << "^" << params.n() << ")\n";

  tilt::RunResult result;
  try {
    result = tilt::run(params, tilt::BlockFilter::All, {true, false});
  } catch (const Error& e) {
    report.check("engine", false, e.what());
    return kViolation;
  }
  report.check("engine", true, std::to_string(params.steps()) + " steps, " + std::to_string(result.log.size()) + " events");

  std::string first;
  std::int64_t mismatches = 0;
  for (const tilt::TiltState& s : result.states) {
    const tilt::TiltState expected = tilt::closed_form(params, s.m, tilt::BlockFilter::All);
    for (const auto& [a, symbol] : s.assignment) {
      if (symbols_equal(symbol, expected.assignment.at(a), params) && s.labels.at(a) == expected.labels.at(a)) continue;
      if (mismatches++ == 0) {
        first = "m = " + std::to_string(s.m) + ", S_" + std::to_string(a) + ": " + render_full(symbol) + " vs " +
                render_full(expected.assignment.at(a));
      }
    }
  }
  report.check("simulation = closed form", mismatches == 0, mismatches == 0 ? "" : first);

  report.check("final images U_1 M_{a'}", tilt::verify_final(result.final_state, params));

  bool shifts_ok = true;
  std::string shift_detail;
  for (const auto& [a, count] : tilt::shift_ledger(result.log, params)) {
    const std::int64_t expected = params.pow(params.n() - 1 - layer(a, params));
    if (count != expected && shifts_ok) {
      shifts_ok = false;
      shift_detail = "S_" + std::to_string(a) + " shifted " + std::to_string(count) + " times, expected " +
                     std::to_string(expected);
    }
  }
  report.check("shift counts p^{n-1-layer}", shifts_ok, shift_detail);

  if (params.p() == 2) {
    report.skip("block exchange", "p = 2 has a single block");
  } else {
    report.check("block exchange", tilt::block_exchange_check(result.final_state, params));
  }
  report.check("extension order", tilt::extension_order_check(result.log, params));

  bool closed = tilt::block_closure_check(result.states, params);
  if (params.p() != 2) {
    for (auto filter : {tilt::BlockFilter::Even, tilt::BlockFilter::Odd}) {
      const auto block_run = tilt::run(params, filter, {true, false});
      closed = closed && tilt::block_closure_check(block_run.states, params);
      std::optional<BlockLabel> seen;
      for (const auto& s : block_run.states) {
        for (const auto& [a, symbol] : s.assignment) {
          if (seen && block_of(symbol, params) != *seen) closed = false;
          seen = block_of(symbol, params);
        }
      }
    }
  }
  report.check("block closure", closed);

  const auto fast = tilt::run(params, tilt::BlockFilter::All, {false, false});
  bool agree = same_events(fast.log, result.log);
  for (std::size_t m = 0; agree && m < fast.states.size(); ++m) {
    for (const auto& [a, symbol] : fast.states[m].assignment) {
      agree = agree && symbols_equal(symbol, result.states[m].assignment.at(a), params);
    }
  }
  report.check("fast mode = homcount mode", agree);
  report.check("extension dimensions in {0,1}", result.stats.max_dimension <= 1,
               std::to_string(result.stats.hom_queries) + " Hom counts, " + std::to_string(result.stats.cor2_checks) +
                   " Ext^1 checks");

  const bool want_oracle = config.oracle == "on" || (config.oracle == "auto" && params.q() <= kAutoOracleLimit);
  if (want_oracle) {
    const auto grid = crosscheck::formula_vs_oracle(ffmod::FiniteField::create(params.p(), params.n()));
    std::string detail = std::to_string(grid.queries) + " queries";
    if (!grid.ok()) detail += "; " + grid.counterexamples.front();
    report.check("formulas = matrix oracle", grid.ok(), detail);
  } else {
    report.skip("formulas = matrix oracle", "oracle " + config.oracle);
  }

  out << "# " << report.total() - report.failures() << "/" << report.total() << " properties pass\n";
  return report.failures() == 0 ? kOk : kViolation;
}

int cmd_homdim(const HomdimConfig& config, std::ostream& out) {
  const GroupParams params(config.p, config.n);
  for (std::int64_t idx : {config.b, config.c}) {
    if (idx < 0 || idx > params.steinberg()) throw DomainError("index " + std::to_string(idx) + " outside 0..q-1");
  }
  const bool ext = config.kind == "ext1";
  const homcount::HomQuery q{config.j, config.b, config.jj, config.c};
  const int formula = ext ? homcount::ext1_dim(q, params) : homcount::stable_hom_dim(q, params);
  out << (ext ? "Ext1" : "PHom") << "(U_" << params.reduce(config.j) << " M_" << config.b << ", U_"
      << params.reduce(config.jj) << " M_" << config.c << ") over SL_2(" << params.p() << "^" << params.n() << ")\n";
  if (config.trace) {
    const auto tuples = ext ? homcount::ext1_tuples(q, params) : homcount::stable_hom_tuples(q, params);
    for (const auto& t : tuples) out << "  tuple " << (ext ? "l=" + std::to_string(t.l) + " " : "") << "k=" << digits_text(t.k) << "\n";
  }
  if (!config.oracle) {
    out << "formula " << formula << "\n";
    return kOk;
  }
  const auto field = ffmod::FiniteField::create(params.p(), params.n());
  const auto x = ffmod::twist(ffmod::build_M(config.b, field), config.j);
  const auto y = ffmod::twist(ffmod::build_M(config.c, field), config.jj);
  int oracle = 0;
  if (!ext) {
    oracle = ffmod::stable_hom_dim_oracle(x, y);
  } else if (config.b != params.steinberg()) {
    oracle = ffmod::ext1_oracle(x, y);
  }
  if (config.dump) {
    out << nlohmann::json{{"source", ffmod::to_json(x)}, {"target", ffmod::to_json(y)}}.dump() << "\n";
  }
  const bool agree = formula == oracle;
  out << "formula " << formula << ", oracle " << oracle << ", " << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? kOk : kViolation;
}

int cmd_frobenius(const RunConfig& config, std::ostream& out) {
  const GroupParams params(config.p, config.n);
  const tables::Format format = tables::parse_format(config.format);
  std::vector<frob::PartitionData> rows;
  bool consistent = true;
  bool invariant = true;
  bool increment = true;
  for (std::int64_t a = 0; a < params.steinberg(); ++a) {
    rows.push_back(frob::partition_data(a, params));
    consistent = consistent && frob::phi_prime(rows.back().lambda, params) == frob::total_omega(a, params);
    invariant = invariant && frob::partition_of(frob::sigma(a, params), params) == rows.back().lambda;
    increment = increment && frob::layer_increment_holds(a, params);
  }
  const auto collision = frob::phi_collision(params.p(), params.n());
  std::string injective = "injective on partitions of " + std::to_string(params.n());
  if (collision) {
    injective = "collision " + frob::format_partition(collision->first) + " ~ " + frob::format_partition(collision->second);
  }

  if (format == tables::Format::Json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : rows) {
      list.push_back({{"a", r.a},
                      {"digits", to_digits(r.a, params).digits},
                      {"z", r.z},
                      {"lambda", r.lambda},
                      {"phi_prime", frob::phi_prime(r.lambda, params)},
                      {"total_omega", r.phi}});
    }
    out << nlohmann::json{{"params", {{"p", params.p()}, {"n", params.n()}}},
                          {"rows", list},
                          {"verdicts",
                           {{"total_omega_equals_phi_prime", consistent},
                            {"frobenius_invariant", invariant},
                            {"layer_increment", increment},
                            {"phi_prime_injective", !collision.has_value()}}}}
               .dump(2)
        << "\n";
  } else {
    const bool csv = format == tables::Format::Csv;
    out << (csv ? "a,digits,Z,lambda,phi_prime,total_omega\r\n" : "# a digits Z lambda phi' total_omega\n");
    for (const auto& r : rows) {
      const std::vector<std::string> fields{std::to_string(r.a),
                                            digits_text(to_digits(r.a, params).digits),
                                            digits_text(r.z),
                                            frob::format_partition(r.lambda),
                                            std::to_string(frob::phi_prime(r.lambda, params)),
                                            std::to_string(r.phi)};
      for (std::size_t k = 0; k < fields.size(); ++k) {
        out << (k ? (csv ? "," : " ") : "") << (csv ? tables::csv_escape(fields[k]) : fields[k]);
      }
      out << (csv ? "\r\n" : "\n");
    }
    if (!csv) {
      out << "# total_omega = phi'(lambda): " << (consistent ? "PASS" : "FAIL") << "\n";
      out << "# lambda Frobenius invariant: " << (invariant ? "PASS" : "FAIL") << "\n";
      out << "# layer increment: " << (increment ? "PASS" : "FAIL") << "\n";
      out << "# phi' " << injective << ": " << (collision ? "FAIL" : "PASS") << "\n";
    }
  }
  return consistent && invariant && increment && !collision ? kOk : kViolation;
}

int cmd_tables(const std::optional<std::string>& name, bool show, std::ostream& out) {
  int failures = 0;
  for (const auto& fixture_name : tables::fixture_names()) {
    if (name && *name != fixture_name) continue;
    const tables::Fixture fixture = tables::load_fixture(fixture_name);
    const GroupParams params(fixture.p, fixture.n);
    const auto start = std::chrono::steady_clock::now();
    const tilt::RunResult result = tilt::run(params, fixture.block);
    const tables::Comparison cmp = tables::compare(fixture, result, params);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream head;
    head << fixture_name << " (" << fixture.title << "): " << cmp.state_rows << " state rows, " << cmp.cells_checked
         << " cells, " << cmp.mismatches.size() << " mismatches, " << seconds << " s";
    out << (cmp.ok() ? "PASS " : "FAIL ") << head.str() << "\n";
    for (const auto& mm : cmp.mismatches) {
      out << "  line " << mm.line << ", m = " << mm.m << ", S_" << mm.column << ": expected '" << mm.expected
          << "', got '" << mm.actual << "'\n";
    }
    if (show) out << tables::render_run(result, params, fixture.block, {});
    failures += cmp.ok() ? 0 : 1;
  }
  return failures == 0 ? kOk : kViolation;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Perverse tilt engine and Hom/Ext oracle for SL_2(p^n)"};
  app.require_subcommand(1);

  RunConfig run;
  HomdimConfig hom;
  std::optional<std::string> table_name;
  bool show = false;

  auto add_params = [](CLI::App* sub, int& p, int& n) {
    sub->add_option("--p", p, "prime p")->required();
    sub->add_option("--n", n, "exponent n")->required();
  };

  CLI::App* tilt_cmd = app.add_subcommand("tilt", "Run the tilt and print the table of states and steps");
  add_params(tilt_cmd, run.p, run.n);
  tilt_cmd->add_option("--block", run.block, "all, even or odd")->check(CLI::IsMember({"all", "even", "odd"}));
  tilt_cmd->add_option("--format", run.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  tilt_cmd->add_option("--mode", run.mode, "simulate, closed-form or both")
      ->check(CLI::IsMember({"simulate", "closed-form", "both"}));
  tilt_cmd->add_option("--steps", run.steps, "state range a:b");
  tilt_cmd->add_flag("--fast", run.fast, "decide extensions by the closed-form predicate");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check every property at the given parameters");
  add_params(verify_cmd, run.p, run.n);
  verify_cmd->add_option("--oracle", run.oracle, "on, off or auto")->check(CLI::IsMember({"on", "off", "auto"}));

  CLI::App* hom_cmd = app.add_subcommand("homdim", "Stable Hom or Ext^1 dimension by counting");
  add_params(hom_cmd, hom.p, hom.n);
  hom_cmd->add_option("--j", hom.j, "source twist");
  hom_cmd->add_option("--b", hom.b, "source index")->required();
  hom_cmd->add_option("--jj", hom.jj, "target twist");
  hom_cmd->add_option("--c", hom.c, "target index")->required();
  hom_cmd->add_option("--kind", hom.kind, "hom or ext1")->check(CLI::IsMember({"hom", "ext1"}));
  hom_cmd->add_flag("--oracle", hom.oracle, "compare with the matrix oracle");
  hom_cmd->add_flag("--trace", hom.trace, "list the counted tuples");
  hom_cmd->add_flag("--dump", hom.dump, "print generator matrices as JSON (with --oracle)");

  CLI::App* frob_cmd = app.add_subcommand("frobenius", "Layer sequences, partitions and perversity values");
  add_params(frob_cmd, run.p, run.n);
  frob_cmd->add_option("--format", run.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* tables_cmd = app.add_subcommand("tables", "Compare runs against the bundled tables");
  tables_cmd->add_option("--name", table_name, "a single fixture");
  tables_cmd->add_flag("--show", show, "print the engine's rendering as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*tilt_cmd) return cmd_tilt(run, std::cout);
    if (*verify_cmd) return cmd_verify(run, std::cout);
    if (*hom_cmd) return cmd_homdim(hom, std::cout);
    if (*frob_cmd) return cmd_frobenius(run, std::cout);
    if (*tables_cmd) return cmd_tables(table_name, show, std::cout);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

}  // namespace sl2tilt::cli
