#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sl2tilt/basep.hpp"
#include "sl2tilt/tilt.hpp"

namespace sl2tilt::tables {

enum class RowKind { State, Step, Shift };

struct FixtureRow {
  RowKind kind = RowKind::State;
  std::int64_t m = 0;
  std::vector<std::string> cells;
  int line = 0;
};

/// A transcribed table: one column per simple, rows of states, steps and cumulative shifts.
///
/// State cells are symbols ("U_3ΩM_7", "^1_5 M_(3,4)", "M_6=U_3ΩM_7") or Loewy
/// diagrams "[2 0 / 1]" (head / socle, checked through the matrix oracle). Step
/// cells are empty, "Ω^-1", the extending symbol, or a zero symbol such as
/// "M_8=0" for an extension by the projective M_{q-1}.
struct Fixture {
  std::string name;
  std::string title;
  int p = 0;
  int n = 0;
  tilt::BlockFilter block = tilt::BlockFilter::All;
  std::vector<std::int64_t> columns;
  std::vector<FixtureRow> rows;
};

Fixture parse_fixture(std::istream& in, const std::string& name);
/// $SL2TILT_FIXTURES if set, else the data/tables directory of the source tree.
std::string fixture_dir();
Fixture load_fixture(const std::string& name);
/// Names of the bundled fixtures.
std::vector<std::string> fixture_names();

struct Mismatch {
  int line = 0;
  std::int64_t m = 0;
  std::int64_t column = 0;
  std::string expected;
  std::string actual;
};

struct Comparison {
  std::string name;
  int state_rows = 0;
  int cells_checked = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Cell-by-cell comparison of a run against a fixture, up to canonicalization.
Comparison compare(const Fixture& fixture, const tilt::RunResult& result, const GroupParams& params);

/// The step-row cell the engine would print for one event.
std::string step_cell(const tilt::Event& e, const GroupParams& params);

enum class Format { Text, Csv, Json };
Format parse_format(const std::string& s);

struct RenderOptions {
  Format format = Format::Text;
  std::int64_t first_step = 0;
  std::int64_t last_step = -1;  ///< -1 means p^{n-1}
};

/// State rows A_m interleaved with step rows, one column per simple.
std::string render_run(const tilt::RunResult& result, const GroupParams& params, tilt::BlockFilter filter,
                       const RenderOptions& options);
/// RFC 4180 quoting.
std::string csv_escape(const std::string& field);

}  // namespace sl2tilt::tables
