#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sl2tilt/basep.hpp"
#include "sl2tilt/symbols.hpp"

namespace sl2tilt::tilt {

enum class BlockFilter { All, Even, Odd };
enum class Label { J, K, L };

BlockFilter parse_block_filter(const std::string& s);
std::string to_string(BlockFilter b);
std::string to_string(Label l);

/// Simple indices 0..q-2 selected by the filter. For p = 2 the even filter is the whole block.
std::vector<std::int64_t> block_indices(const GroupParams& params, BlockFilter filter);

/// Images of the simples of A_m in the stable category, keyed by simple index.
struct TiltState {
  std::int64_t m = 0;
  std::map<std::int64_t, StableSymbol> assignment;
  std::map<std::int64_t, Label> labels;
};

enum class EventKind { Shifted, ExtendedBy, Unchanged };
std::string to_string(EventKind k);

struct Event {
  std::int64_t m = 0;
  std::int64_t a = 0;
  EventKind kind = EventKind::Unchanged;
  /// M-index of the symbol before the step (the y of its floor/ceiling form).
  std::int64_t source_index = -1;
  /// ExtendedBy: the simple whose shifted symbol extends a. -1 otherwise.
  std::int64_t extender = -1;
  /// ExtendedBy, or a skipped extension: completion of source_index.
  std::int64_t completion_index = -1;
  /// The extension would be by M_{q-1}, which is zero in the stable category.
  bool zero_partner = false;
  /// U_{mp} Omega M_c, the extending symbol before Omega^{-1}.
  std::optional<StableSymbol> extender_form;
};
using EventLog = std::vector<Event>;

/// One simple seen from step m.
struct StepForm {
  Label label = Label::L;
  std::int64_t y = 0;      ///< a or partner(a), by the parity of k_s
  StableSymbol form = StableSymbol::zero();
  bool boundary = false;   ///< m_{s-1} + y_s = p-1 with m_0..m_{s-2} = 0
};

/// The state m-1 rewritten from the point of view of m.
struct StepView {
  std::int64_t m = 0;
  int r = 0;
  std::map<std::int64_t, StepForm> forms;
};

/// Classification before step m; the boundary case is in L.
StepForm pre_step_form(std::int64_t m, std::int64_t a, const GroupParams& params);
/// Classification after step m; the boundary case is in K.
StepForm post_step_form(std::int64_t m, std::int64_t a, const GroupParams& params);

struct RunStats {
  std::int64_t hom_queries = 0;
  std::int64_t cor1_checks = 0;
  std::int64_t cor2_checks = 0;
  int max_dimension = 0;
};

TiltState initial_state(const GroupParams& params, BlockFilter filter);
/// Throws EngineAssertion when a symbol does not equal its predicted form.
StepView rewrite_for_step(const TiltState& state, std::int64_t m, const GroupParams& params);

struct StepResult {
  TiltState state;
  std::vector<Event> events;
};
/// With use_homcount, extensions are found by stable Hom counts and checked
/// against ext_cor1; otherwise ext_cor1 decides directly.
StepResult execute_step(const TiltState& state, std::int64_t m, const GroupParams& params, bool use_homcount = true,
                        RunStats* stats = nullptr);

TiltState closed_form(const GroupParams& params, std::int64_t m, BlockFilter filter);

struct RunOptions {
  bool use_homcount = true;
  bool check_closed_form = true;
};

struct RunResult {
  TiltState final_state;
  EventLog log;
  std::vector<TiltState> states;  ///< m = 0..p^{n-1}
  RunStats stats;
};
RunResult run(const GroupParams& params, BlockFilter filter, const RunOptions& options = {});

bool verify_final(const TiltState& final_state, const GroupParams& params);
std::map<std::int64_t, std::int64_t> shift_ledger(const EventLog& log, const GroupParams& params);
/// Throws NotApplicable for p = 2.
bool block_exchange_check(const TiltState& final_state, const GroupParams& params);
bool extension_order_check(const EventLog& log, const GroupParams& params);
/// Every symbol stays in the block of its simple.
bool block_closure_check(const std::vector<TiltState>& states, const GroupParams& params);
/// Cumulative shift counts per simple after each step (index m = 0..p^{n-1}).
std::vector<std::map<std::int64_t, std::int64_t>> cumulative_shifts(const RunResult& result, const GroupParams& params);

/// {params, block, rows: [{m, symbols: [...]}], events: [...]}.
nlohmann::json trace_json(const RunResult& result, const GroupParams& params, BlockFilter filter);

}  // namespace sl2tilt::tilt
