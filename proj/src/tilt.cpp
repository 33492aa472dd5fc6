#include "sl2tilt/tilt.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "sl2tilt/errors.hpp"
#include "sl2tilt/homcount.hpp"

namespace sl2tilt::tilt {

namespace {

struct Position {
  int s = 0;
  int r = 0;
  std::int64_t y = 0;
  int lead = 0;
  bool boundary = false;
};

Position locate(std::int64_t m, std::int64_t a, const GroupParams& params) {
  Position pos;
  pos.s = layer(a, params);
  pos.r = val_p(m, params);
  pos.y = k_parity(m, pos.s, params) == Parity::Even ? a : partner(a, params);
  if (pos.s > pos.r) {
    const auto md = to_digits(m, params);
    const auto yd = to_digits(pos.y, params);
    pos.lead = md[static_cast<std::size_t>(pos.s - 1)] + yd[static_cast<std::size_t>(pos.s)];
    bool lower_zero = true;
    for (int i = 0; i + 2 <= pos.s; ++i) lower_zero = lower_zero && md[static_cast<std::size_t>(i)] == 0;
    pos.boundary = pos.lead == params.p() - 1 && lower_zero;
  }
  return pos;
}

StableSymbol ceiling_form(std::int64_t m, const Position& pos, const GroupParams& params) {
  return StableSymbol::make(ceil_at(m, pos.s, params) * params.p(), 1, partner(pos.y, params), params);
}

StableSymbol floor_form(std::int64_t m, const Position& pos, const GroupParams& params) {
  return StableSymbol::make(floor_at(m, pos.s, params) * params.p(), 0, pos.y, params);
}

void check_step_index(const TiltState& state, std::int64_t m, const GroupParams& params) {
  if (m < 1 || m > params.steps()) throw DomainError("step m = " + std::to_string(m) + " outside 1..p^{n-1}");
  if (state.m != m - 1) {
    throw DomainError("state is at m = " + std::to_string(state.m) + ", cannot execute step " + std::to_string(m));
  }
}

void note_dimension(RunStats* stats, int dim) {
  if (stats == nullptr) return;
  ++stats->hom_queries;
  stats->max_dimension = std::max(stats->max_dimension, dim);
}

}  // namespace

BlockFilter parse_block_filter(const std::string& s) {
  if (s == "all") return BlockFilter::All;
  if (s == "even") return BlockFilter::Even;
  if (s == "odd") return BlockFilter::Odd;
  throw DomainError("unknown block filter '" + s + "' (expected all, even or odd)");
}

std::string to_string(BlockFilter b) {
  switch (b) {
    case BlockFilter::All: return "all";
    case BlockFilter::Even: return "even";
    case BlockFilter::Odd: return "odd";
  }
  return "?";
}

std::string to_string(Label l) {
  switch (l) {
    case Label::J: return "J";
    case Label::K: return "K";
    case Label::L: return "L";
  }
  return "?";
}

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::Shifted: return "Shifted";
    case EventKind::ExtendedBy: return "ExtendedBy";
    case EventKind::Unchanged: return "Unchanged";
  }
  return "?";
}

std::vector<std::int64_t> block_indices(const GroupParams& params, BlockFilter filter) {
  if (filter == BlockFilter::Odd && params.p() == 2) throw DomainError("p = 2 has a single block; no odd filter");
  std::vector<std::int64_t> out;
  for (std::int64_t a = 0; a < params.steinberg(); ++a) {
    if (params.p() != 2 && filter == BlockFilter::Even && a % 2 != 0) continue;
    if (filter == BlockFilter::Odd && a % 2 == 0) continue;
    out.push_back(a);
  }
  return out;
}

StepForm pre_step_form(std::int64_t m, std::int64_t a, const GroupParams& params) {
  const Position pos = locate(m, a, params);
  StepForm f;
  f.y = pos.y;
  f.boundary = pos.boundary;
  if (pos.s <= pos.r) {
    f.label = Label::J;
    f.form = StableSymbol::make(m * params.p(), 1, pos.y, params);
  } else if (pos.lead >= params.p() - 1 && !pos.boundary) {
    f.label = Label::K;
    f.form = ceiling_form(m, pos, params);
  } else {
    f.label = Label::L;
    f.form = floor_form(m, pos, params);
  }
  return f;
}

StepForm post_step_form(std::int64_t m, std::int64_t a, const GroupParams& params) {
  StepForm f;
  if (m == 0) {
    f.label = Label::J;
    f.y = a;
    f.form = StableSymbol::simple(a, params);
    return f;
  }
  const Position pos = locate(m, a, params);
  f.y = pos.y;
  f.boundary = pos.boundary;
  if (pos.s <= pos.r) {
    f.label = Label::J;
    f.form = StableSymbol::make(m * params.p(), 0, pos.y, params);
  } else if (pos.lead >= params.p() - 1) {
    f.label = Label::K;
    f.form = ceiling_form(m, pos, params);
  } else {
    f.label = Label::L;
    f.form = floor_form(m, pos, params);
  }
  return f;
}

TiltState initial_state(const GroupParams& params, BlockFilter filter) {
  TiltState s;
  for (std::int64_t a : block_indices(params, filter)) {
    s.assignment.emplace(a, StableSymbol::simple(a, params));
    s.labels.emplace(a, Label::J);
  }
  return s;
}

StepView rewrite_for_step(const TiltState& state, std::int64_t m, const GroupParams& params) {
  check_step_index(state, m, params);
  StepView view;
  view.m = m;
  view.r = val_p(m, params);
  for (const auto& [a, symbol] : state.assignment) {
    StepForm f = pre_step_form(m, a, params);
    if (!symbols_equal(symbol, f.form, params)) {
      throw EngineAssertion("step " + std::to_string(m) + ": S_" + std::to_string(a) + " is " + render_full(symbol) +
                            " but the rewrite predicts " + render_full(f.form));
    }
    view.forms.emplace(a, f);
  }
  return view;
}

StepResult execute_step(const TiltState& state, std::int64_t m, const GroupParams& params, bool use_homcount,
                        RunStats* stats) {
  const StepView view = rewrite_for_step(state, m, params);
  const std::int64_t mp = m * params.p();
  StepResult out;
  out.state.m = m;

  struct Target {
    std::int64_t a;
    std::int64_t c;
  };
  std::vector<Target> targets;
  for (const auto& [a, f] : view.forms) {
    if (f.label != Label::J) continue;
    const StableSymbol shifted = canonicalize(omega_inverse(state.assignment.at(a), params), params);
    const StableSymbol expected = StableSymbol::make(mp, 0, f.y, params);
    if (!symbols_equal(shifted, expected, params)) {
      throw EngineAssertion("step " + std::to_string(m) + ": Omega^{-1} of S_" + std::to_string(a) + " gives " +
                            render_full(shifted) + ", expected " + render_full(expected));
    }
    out.state.assignment.emplace(a, shifted);
    out.state.labels.emplace(a, Label::J);
    out.events.push_back({m, a, EventKind::Shifted, f.y, -1, -1, false, std::nullopt});
    targets.push_back({a, f.y});
  }

  for (const auto& [a, f] : view.forms) {
    if (f.label == Label::J) continue;
    const std::int64_t current_symbol_u = f.form.u();
    Event ev{m, a, EventKind::Unchanged, f.y, -1, -1, false, std::nullopt};
    Label label = f.label;
    StableSymbol symbol = state.assignment.at(a);

    if (f.label == Label::L) {
      const homcount::ExtensionVerdict verdict = homcount::ext_cor1(m, f.y, params);
      std::optional<std::int64_t> found;
      if (use_homcount) {
        int total = 0;
        for (const Target& t : targets) {
          const int d = homcount::stable_hom_dim({current_symbol_u, f.y, mp, t.c}, params);
          note_dimension(stats, d);
          if (d > 1) {
            throw ExtensionDimensionError("PHom(" + render_full(f.form) + ", U_" + std::to_string(mp) + " M_" +
                                          std::to_string(t.c) + ") has dimension " + std::to_string(d));
          }
          if (d == 1) found = t.c;
          total += d;
        }
        if (total > 1) {
          throw ExtensionDimensionError("S_" + std::to_string(a) + " admits " + std::to_string(total) +
                                        " independent extensions at step " + std::to_string(m));
        }
        if (stats != nullptr) ++stats->cor1_checks;
        const bool expects_one =
            verdict.kind == homcount::ExtensionKind::Unique && verdict.partner_index != params.steinberg();
        if (expects_one != found.has_value() || (found && *found != verdict.partner_index)) {
          throw EngineAssertion("step " + std::to_string(m) + ": stable Hom counts for S_" + std::to_string(a) +
                                " disagree with the extension predicate");
        }
      } else if (verdict.kind == homcount::ExtensionKind::Unique && verdict.partner_index != params.steinberg()) {
        found = verdict.partner_index;
      }

      if (verdict.kind == homcount::ExtensionKind::Unique) {
        label = Label::K;
        ev.completion_index = verdict.partner_index;
        ev.extender_form = StableSymbol::make(mp, 1, verdict.partner_index, params);
        if (found) {
          auto it = std::find_if(targets.begin(), targets.end(), [&](const Target& t) { return t.c == *found; });
          if (it == targets.end()) {
            throw EngineAssertion("extension by M_" + std::to_string(*found) + " has no shifted simple in the block");
          }
          ev.kind = EventKind::ExtendedBy;
          ev.extender = it->a;
          symbol = canonicalize(*verdict.result, params);
        } else {
          ev.zero_partner = true;
        }
      }
    }

    out.state.assignment.emplace(a, symbol);
    out.state.labels.emplace(a, label);
    out.events.push_back(ev);
  }

  for (const auto& [a, label] : out.state.labels) {
    if (label != Label::K) continue;
    const std::int64_t y = view.forms.at(a).y;
    for (const Target& t : targets) {
      if (stats != nullptr) ++stats->cor2_checks;
      if (!homcount::ext_cor2_zero(m, y, t.c, params)) {
        throw ExtensionDimensionError("ceiling form of S_" + std::to_string(a) + " still extends by U_" +
                                      std::to_string(mp) + " Omega M_" + std::to_string(t.c));
      }
    }
  }
  std::sort(out.events.begin(), out.events.end(), [](const Event& x, const Event& y) { return x.a < y.a; });
  return out;
}

TiltState closed_form(const GroupParams& params, std::int64_t m, BlockFilter filter) {
  if (m < 0 || m > params.steps()) throw DomainError("m outside 0..p^{n-1}");
  TiltState s;
  s.m = m;
  for (std::int64_t a : block_indices(params, filter)) {
    const StepForm f = post_step_form(m, a, params);
    s.assignment.emplace(a, canonicalize(f.form, params));
    s.labels.emplace(a, f.label);
  }
  return s;
}

RunResult run(const GroupParams& params, BlockFilter filter, const RunOptions& options) {
  RunResult result;
  TiltState state = initial_state(params, filter);
  result.states.push_back(state);
  for (std::int64_t m = 1; m <= params.steps(); ++m) {
    StepResult step = execute_step(state, m, params, options.use_homcount, &result.stats);
    if (options.check_closed_form) {
      const TiltState expected = closed_form(params, m, filter);
      for (const auto& [a, symbol] : step.state.assignment) {
        if (!symbols_equal(symbol, expected.assignment.at(a), params) || step.state.labels.at(a) != expected.labels.at(a)) {
          throw EngineAssertion("step " + std::to_string(m) + ": simulated S_" + std::to_string(a) + " = " +
                                render_full(symbol) + " differs from the closed form " +
                                render_full(expected.assignment.at(a)));
        }
      }
    }
    result.log.insert(result.log.end(), step.events.begin(), step.events.end());
    state = std::move(step.state);
    result.states.push_back(state);
  }
  result.final_state = state;
  return result;
}

bool verify_final(const TiltState& final_state, const GroupParams& params) {
  if (final_state.m != params.steps()) return false;
  for (const auto& [a, symbol] : final_state.assignment) {
    if (!symbols_equal(symbol, StableSymbol::make(1, 0, partner(a, params), params), params)) return false;
  }
  return true;
}

std::map<std::int64_t, std::int64_t> shift_ledger(const EventLog& log, const GroupParams& params) {
  std::map<std::int64_t, std::int64_t> counts;
  for (const Event& e : log) {
    if (e.a < 0 || e.a >= params.steinberg()) throw DomainError("event for an invalid simple index");
    counts[e.a] += e.kind == EventKind::Shifted ? 1 : 0;
  }
  return counts;
}

bool block_exchange_check(const TiltState& final_state, const GroupParams& params) {
  if (params.p() == 2) throw NotApplicable("p = 2 has a single block");
  for (const auto& [a, symbol] : final_state.assignment) {
    if (a % 2 == partner(a, params) % 2) return false;
    if (symbol.is_zero() || canonicalize(symbol, params).idx() % 2 == a % 2) return false;
  }
  return true;
}

bool extension_order_check(const EventLog& log, const GroupParams& params) {
  for (const Event& e : log) {
    if (e.kind != EventKind::ExtendedBy) continue;
    const int r = val_p(e.m, params);
    if (e.completion_index != completion(e.source_index, params)) return false;
    if (!(layer(e.extender, params) <= r && r < layer(e.a, params))) return false;
    if (!e.extender_form || e.extender_form->idx() != e.completion_index) return false;
  }
  return true;
}

bool block_closure_check(const std::vector<TiltState>& states, const GroupParams& params) {
  for (const TiltState& s : states) {
    for (const auto& [a, symbol] : s.assignment) {
      if (symbol.is_zero()) return false;
      if (block_of(symbol, params) != block_of(StableSymbol::simple(a, params), params)) return false;
    }
  }
  return true;
}

std::vector<std::map<std::int64_t, std::int64_t>> cumulative_shifts(const RunResult& result, const GroupParams& params) {
  std::vector<std::map<std::int64_t, std::int64_t>> out;
  std::map<std::int64_t, std::int64_t> running;
  for (const auto& [a, symbol] : result.states.front().assignment) running[a] = 0;
  out.push_back(running);
  for (std::int64_t m = 1; m <= params.steps(); ++m) {
    for (const Event& e : result.log) {
      if (e.m == m && e.kind == EventKind::Shifted) ++running[e.a];
    }
    out.push_back(running);
  }
  return out;
}

nlohmann::json trace_json(const RunResult& result, const GroupParams& params, BlockFilter filter) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TiltState& s : result.states) {
    nlohmann::json symbols = nlohmann::json::array();
    for (const auto& [a, symbol] : s.assignment) {
      nlohmann::json cell = to_json(symbol);
      cell["simple"] = a;
      cell["label"] = to_string(s.labels.at(a));
      cell["text"] = render_shorthand(symbol);
      symbols.push_back(cell);
    }
    rows.push_back({{"m", s.m}, {"symbols", symbols}});
  }
  nlohmann::json events = nlohmann::json::array();
  for (const Event& e : result.log) {
    nlohmann::json ev = {{"m", e.m}, {"simple", e.a}, {"kind", to_string(e.kind)}, {"source_index", e.source_index}};
    if (e.kind == EventKind::ExtendedBy) {
      ev["extender"] = e.extender;
      ev["completion"] = e.completion_index;
    }
    if (e.zero_partner) {
      ev["completion"] = e.completion_index;
      ev["zero_partner"] = true;
    }
    if (e.extender_form) ev["extender_form"] = to_json(*e.extender_form);
    events.push_back(ev);
  }
  return {{"params", {{"p", params.p()}, {"n", params.n()}, {"q", params.q()}}},
          {"block", to_string(filter)},
          {"rows", rows},
          {"events", events}};
}

}  // namespace sl2tilt::tilt
