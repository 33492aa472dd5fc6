#include "sl2tilt/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sl2tilt/errors.hpp"
#include "sl2tilt/ffmod.hpp"

#ifndef SL2TILT_FIXTURE_DIR
#define SL2TILT_FIXTURE_DIR "data/tables"
#endif

namespace sl2tilt::tables {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool is_shift_mark(const std::string& cell) { return cell == "Ω^-1" || cell == "Omega^-1"; }

struct Loewy {
  std::vector<std::int64_t> head;
  std::vector<std::int64_t> socle;
  int dim = 0;
};

Loewy parse_loewy(const std::string& cell) {
  if (cell.size() < 2 || cell.front() != '[' || cell.back() != ']') throw DomainError("bad Loewy cell '" + cell + "'");
  const auto halves = split(cell.substr(1, cell.size() - 2), '/');
  auto numbers = [](const std::string& s) {
    std::vector<std::int64_t> v;
    std::istringstream in(s);
    std::int64_t x = 0;
    while (in >> x) v.push_back(x);
    return v;
  };
  Loewy l;
  l.head = numbers(halves.at(0));
  if (halves.size() == 1) {
    l.socle = l.head;
    l.dim = static_cast<int>(l.head.size());
  } else {
    l.socle = numbers(halves.at(1));
    l.dim = static_cast<int>(l.head.size() + l.socle.size());
  }
  return l;
}

bool loewy_matches(const Loewy& expected, const StableSymbol& s, const ffmod::FieldPtr& field) {
  if (s.is_zero()) return false;
  const ffmod::MatrixModule m = ffmod::module_of_symbol(s, field);
  if (m.dim() != expected.dim) return false;
  const auto& params = field->params();
  auto weights = [&](const std::vector<std::int64_t>& xs) {
    std::vector<int> w(static_cast<std::size_t>(params.modulus()), 0);
    for (auto x : xs) ++w[static_cast<std::size_t>(params.reduce(x))];
    return w;
  };
  return ffmod::head_weights(m) == weights(expected.head) && ffmod::socle_weights(m) == weights(expected.socle);
}

const tilt::Event* find_event(const tilt::EventLog& log, std::int64_t m, std::int64_t a) {
  for (const auto& e : log) {
    if (e.m == m && e.a == a) return &e;
  }
  return nullptr;
}

std::string describe(const tilt::Event* e, const GroupParams& params) {
  if (e == nullptr) return "(no event)";
  const std::string cell = step_cell(*e, params);
  return cell.empty() ? "(unchanged)" : cell;
}

bool step_matches(const std::string& cell, const tilt::Event* e, const GroupParams& params) {
  if (e == nullptr) return false;
  if (cell.empty()) return e->kind == tilt::EventKind::Unchanged && !e->zero_partner;
  if (is_shift_mark(cell)) return e->kind == tilt::EventKind::Shifted;
  const auto parts = split(cell, '=');
  std::vector<StableSymbol> symbols;
  for (const auto& part : parts) symbols.push_back(parse_symbol(part, params));
  const bool zero = std::all_of(symbols.begin(), symbols.end(), [](const StableSymbol& s) { return s.is_zero(); });
  if (zero) return e->kind == tilt::EventKind::Unchanged && e->zero_partner;
  if (e->kind != tilt::EventKind::ExtendedBy || !e->extender_form) return false;
  return std::all_of(symbols.begin(), symbols.end(),
                     [&](const StableSymbol& s) { return symbols_equal(s, *e->extender_form, params); });
}

// Counts code points so that columns containing Ω line up.
std::size_t visible_width(const std::string& s) {
  std::size_t visible = 0;
  for (unsigned char c : s) visible += (c & 0xC0) != 0x80 ? 1 : 0;
  return visible;
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t visible = visible_width(s);
  return s + std::string(width > visible ? width - visible : 0, ' ');
}

}  // namespace

Fixture parse_fixture(std::istream& in, const std::string& name) {
  Fixture f;
  f.name = name;
  std::string raw;
  int line_no = 0;
  bool have_params = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw DomainError(name + ":" + std::to_string(line_no) + ": " + what);
    };
    if (line.rfind("title:", 0) == 0) {
      f.title = trim(line.substr(6));
      continue;
    }
    if (line.rfind("params:", 0) == 0) {
      std::istringstream ps(line.substr(7));
      std::string block;
      if (!(ps >> f.p >> f.n >> block)) fail("expected 'params: p n block'");
      f.block = tilt::parse_block_filter(block);
      have_params = true;
      continue;
    }
    if (line.rfind("columns:", 0) == 0) {
      std::istringstream cs(line.substr(8));
      std::int64_t a = 0;
      while (cs >> a) f.columns.push_back(a);
      continue;
    }
    const auto cells = split(line, '|');
    std::istringstream hs(cells.front());
    std::string kind;
    FixtureRow row;
    row.line = line_no;
    if (!(hs >> kind >> row.m)) fail("expected a row header such as 'state 0'");
    if (kind == "state") {
      row.kind = RowKind::State;
    } else if (kind == "step") {
      row.kind = RowKind::Step;
    } else if (kind == "shift") {
      row.kind = RowKind::Shift;
    } else {
      fail("unknown row kind '" + kind + "'");
    }
    row.cells.assign(cells.begin() + 1, cells.end());
    if (row.cells.size() != f.columns.size()) {
      fail("row has " + std::to_string(row.cells.size()) + " cells for " + std::to_string(f.columns.size()) + " columns");
    }
    f.rows.push_back(std::move(row));
  }
  if (!have_params) throw DomainError(name + ": missing 'params:' line");
  if (f.columns.empty()) throw DomainError(name + ": missing 'columns:' line");
  return f;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("SL2TILT_FIXTURES"); env != nullptr && *env != '\0') return env;
  return SL2TILT_FIXTURE_DIR;
}

Fixture load_fixture(const std::string& name) {
  const std::string path = fixture_dir() + "/" + name + ".txt";
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open fixture " + path);
  return parse_fixture(in, name);
}

std::vector<std::string> fixture_names() { return {"sl2_9_even", "sl2_25_even", "sl2_25_odd", "sl2_27_even", "sl2_4"}; }

Comparison compare(const Fixture& fixture, const tilt::RunResult& result, const GroupParams& params) {
  if (fixture.p != params.p() || fixture.n != params.n()) throw DomainError("fixture parameters differ from the run");
  Comparison cmp;
  cmp.name = fixture.name;
  ffmod::FieldPtr field;
  const auto shifts = tilt::cumulative_shifts(result, params);

  for (const FixtureRow& row : fixture.rows) {
    if (row.m < 0 || row.m >= static_cast<std::int64_t>(result.states.size())) {
      cmp.mismatches.push_back({row.line, row.m, -1, "row m = " + std::to_string(row.m), "no such step"});
      continue;
    }
    if (row.kind == RowKind::State) ++cmp.state_rows;
    for (std::size_t k = 0; k < fixture.columns.size(); ++k) {
      const std::int64_t a = fixture.columns[k];
      const std::string& cell = row.cells[k];
      ++cmp.cells_checked;
      bool ok = false;
      std::string actual;
      switch (row.kind) {
        case RowKind::State: {
          const auto it = result.states[static_cast<std::size_t>(row.m)].assignment.find(a);
          if (it == result.states[static_cast<std::size_t>(row.m)].assignment.end()) {
            actual = "(simple not in run)";
            break;
          }
          actual = render_shorthand(it->second);
          ok = true;
          for (const auto& part : split(cell, '=')) {
            if (!part.empty() && part.front() == '[') {
              if (!field) field = ffmod::FiniteField::create(params.p(), params.n());
              ok = ok && loewy_matches(parse_loewy(part), it->second, field);
            } else {
              ok = ok && symbols_equal(parse_symbol(part, params), it->second, params);
            }
          }
          break;
        }
        case RowKind::Step: {
          const tilt::Event* e = find_event(result.log, row.m, a);
          actual = describe(e, params);
          ok = row.m >= 1 && step_matches(cell, e, params);
          break;
        }
        case RowKind::Shift: {
          const auto& at = shifts[static_cast<std::size_t>(row.m)];
          const auto it = at.find(a);
          actual = it == at.end() ? "(simple not in run)" : std::to_string(it->second);
          ok = it != at.end() && std::to_string(it->second) == cell;
          break;
        }
      }
      if (!ok) cmp.mismatches.push_back({row.line, row.m, a, cell, actual});
    }
  }
  return cmp;
}

std::string step_cell(const tilt::Event& e, const GroupParams& params) {
  switch (e.kind) {
    case tilt::EventKind::Shifted: return "Ω^-1";
    case tilt::EventKind::ExtendedBy: return render_shorthand(*e.extender_form);
    case tilt::EventKind::Unchanged:
      if (e.zero_partner) return "M_" + std::to_string(params.steinberg()) + "=0";
      return "";
  }
  return "";
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw DomainError("unknown format '" + s + "' (expected text, csv or json)");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_run(const tilt::RunResult& result, const GroupParams& params, tilt::BlockFilter filter,
                       const RenderOptions& options) {
  const std::int64_t last = options.last_step < 0 ? params.steps() : std::min(options.last_step, params.steps());
  const std::int64_t first = std::max<std::int64_t>(0, options.first_step);
  if (first > last) throw DomainError("empty step range");

  if (options.format == Format::Json) {
    nlohmann::json j = tilt::trace_json(result, params, filter);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : j["rows"]) {
      if (row["m"] >= first && row["m"] <= last) rows.push_back(row);
    }
    nlohmann::json events = nlohmann::json::array();
    for (const auto& ev : j["events"]) {
      if (ev["m"] > first && ev["m"] <= last) events.push_back(ev);
    }
    j["rows"] = rows;
    j["events"] = events;
    return j.dump(2) + "\n";
  }

  std::vector<std::int64_t> columns;
  for (const auto& [a, s] : result.states.front().assignment) columns.push_back(a);
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{""};
  for (auto a : columns) header.push_back("S_" + std::to_string(a));
  table.push_back(header);
  for (std::int64_t m = first; m <= last; ++m) {
    if (m > first) {
      std::vector<std::string> step{"step " + std::to_string(m)};
      for (auto a : columns) {
        const tilt::Event* e = find_event(result.log, m, a);
        step.push_back(e == nullptr ? "" : step_cell(*e, params));
      }
      table.push_back(step);
    }
    std::vector<std::string> state{"A_" + std::to_string(m)};
    for (auto a : columns) state.push_back(render_shorthand(result.states[static_cast<std::size_t>(m)].assignment.at(a)));
    table.push_back(state);
  }

  std::ostringstream out;
  if (options.format == Format::Csv) {
    table.front().front() = "row";
    for (const auto& row : table) {
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_escape(row[k]);
      out << "\r\n";
    }
    return out.str();
  }

  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& row : table) {
    for (std::size_t k = 0; k < row.size(); ++k) widths[k] = std::max(widths[k], visible_width(row[k]));
  }
  out << "# SL_2(" << params.p() << "^" << params.n() << "), block " << tilt::to_string(filter) << "\n";
  for (const auto& row : table) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) line += (k ? " | " : "") + pad(row[k], widths[k]);
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  return out.str();
}

}  // namespace sl2tilt::tables
