#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sl2tilt/basep.hpp"
#include "sl2tilt/symbols.hpp"

namespace sl2tilt::homcount {

/// Source U_j M_b and target U_jj M_c. Twists only matter mod q-1.
struct HomQuery {
  std::int64_t j = 0;
  std::int64_t b = 0;
  std::int64_t jj = 0;
  std::int64_t c = 0;
};

/// One enumerated tuple. For stable Hom, l is -1.
struct Tuple {
  int l = -1;
  std::vector<int> k;
};

/// Stable Hom dimension PHom(U_j M_b, U_jj M_c) by tuple counting.
///
/// Condition (2) is read as "k_l <= p-2-b_l for some l"; the strict form
/// rejects the identity of M_{(p-2,...,p-2)}.
int stable_hom_dim(const HomQuery& query, const GroupParams& params);
/// Ext^1(U_j M_b, U_jj M_c) = PHom(Omega U_j M_b, U_jj M_c) by tuple counting.
int ext1_dim(const HomQuery& query, const GroupParams& params);

/// The counted tuples in lexicographic (l, k_0, ..., k_{n-1}) order.
std::vector<Tuple> stable_hom_tuples(const HomQuery& query, const GroupParams& params);
std::vector<Tuple> ext1_tuples(const HomQuery& query, const GroupParams& params);

/// The digit inequalities behind both counts:
///   non-l digit: 0 <= |b-c| <= b-c+2k <= b+c <= 2p-2
///   l digit:     -p <= -b-c+2k-2 <= -2
bool digit_bounds_check(int b_i, int c_i, int k_i, bool l_digit, int p);

enum class ExtensionKind { None, Unique };

struct ExtensionVerdict {
  ExtensionKind kind = ExtensionKind::None;
  /// completion(b); may be q-1, in which case the extending object is zero.
  std::int64_t partner_index = 0;
  /// U_{ceil_at(m,s) p} Omega M_{b'}.
  std::optional<StableSymbol> result;
};

/// Extension of U_{floor_at(m,s) p} M_b by layer <= r_m symbols, b of layer s > r_m.
///
/// Unique iff m_{s-1} + b_s = p-1 and m_{s-2} = ... = m_0 = 0; None iff
/// m_{s-1} + b_s < p-1. Anything else throws InvalidCase.
ExtensionVerdict ext_cor1(std::int64_t m, std::int64_t b, const GroupParams& params);

/// Checks that U_{ceil_at(m,s) p} Omega M_{b'} has no extension by U_{mp} Omega M_c,
/// via ext1_dim(U_{ceil p} M_{b'}, U_{mp} M_c) = 0.
bool ext_cor2_zero(std::int64_t m, std::int64_t b, std::int64_t c, const GroupParams& params);

}  // namespace sl2tilt::homcount
