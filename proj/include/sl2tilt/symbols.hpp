#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "sl2tilt/basep.hpp"

namespace sl2tilt {

/// A formal stable-category expression U_u Omega^e M_a, or the zero object.
///
/// u is kept reduced mod q-1 and e is 0 or 1; M_{q-1} is projective, so a
/// symbol with index q-1 is the zero symbol.
class StableSymbol {
 public:
  /// Throws DomainError for e outside {0,1} or an index outside 0..q-1.
  static StableSymbol make(std::int64_t u, int omega, std::int64_t idx, const GroupParams& params);
  static StableSymbol zero();
  /// U_0 M_a.
  static StableSymbol simple(std::int64_t a, const GroupParams& params) { return make(0, 0, a, params); }

  bool is_zero() const { return zero_; }
  std::int64_t u() const { return u_; }
  int omega() const { return omega_; }
  std::int64_t idx() const { return idx_; }

  friend bool operator==(const StableSymbol&, const StableSymbol&) = default;

 private:
  StableSymbol() = default;
  bool zero_ = true;
  std::int64_t u_ = 0;
  int omega_ = 0;
  std::int64_t idx_ = 0;
};

enum class BlockLabel { Even, Odd, Single };

StableSymbol tensor_u(const StableSymbol& s, std::int64_t j, const GroupParams& params);

/// Rewrites U_u Omega M_b with b a rim index (free digit i) to U_{u-p^{i+1}} M_{b(i')}.
StableSymbol canonicalize(const StableSymbol& s, const GroupParams& params);
bool symbols_equal(const StableSymbol& a, const StableSymbol& b, const GroupParams& params);

/// The formal Omega of an omega-free symbol (the result is not canonicalized).
StableSymbol apply_omega(const StableSymbol& s, const GroupParams& params);
/// Omega^{-1}: drops Omega, or inverts the rim rewrite on an omega-free rim symbol.
StableSymbol omega_inverse(const StableSymbol& s, const GroupParams& params);

BlockLabel block_of(const StableSymbol& s, const GroupParams& params);

/// "U_3 Ω M_7", "U_0 M_4", "0".
std::string render_full(const StableSymbol& s);
/// Table shorthand: "^1_3 M_7", "_1 M_7", "M_4", "0".
std::string render_shorthand(const StableSymbol& s);
std::string to_string(BlockLabel b);

nlohmann::json to_json(const StableSymbol& s);
StableSymbol symbol_from_json(const nlohmann::json& j, const GroupParams& params);

/// Parses one table cell in either notation, e.g. "U_3 Ω M_7", "U_6ΩM_6",
/// "^1_5 M_(3,4)", "_1M_15", "M_8", "0". Subscripts may be braced. Throws
/// DomainError on malformed input.
StableSymbol parse_symbol(std::string_view text, const GroupParams& params);

}  // namespace sl2tilt
