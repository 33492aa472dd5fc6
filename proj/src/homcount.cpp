#include "sl2tilt/homcount.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "sl2tilt/errors.hpp"

namespace sl2tilt::homcount {

namespace {

bool is_projective_index(std::int64_t a, const GroupParams& params) { return a == params.steinberg(); }

// Visits every integer tuple in the box lo <= k <= hi, lexicographically.
void for_each_tuple(const std::vector<int>& lo, const std::vector<int>& hi,
                    const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) return;
  }
  std::vector<int> k = lo;
  while (true) {
    visit(k);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (k[i] < hi[i]) {
        ++k[i];
        for (std::size_t t = i + 1; t < n; ++t) k[t] = lo[t];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

void assert_bounds(bool ok) {
  if (!ok) throw EngineAssertion("digit-bound inequality violated by an enumerated tuple");
}

}  // namespace

bool digit_bounds_check(int b_i, int c_i, int k_i, bool l_digit, int p) {
  if (l_digit) {
    const int v = -b_i - c_i + 2 * k_i - 2;
    return -p <= v && v <= -2;
  }
  const int v = b_i - c_i + 2 * k_i;
  return 0 <= std::abs(b_i - c_i) && std::abs(b_i - c_i) <= v && v <= b_i + c_i && b_i + c_i <= 2 * p - 2;
}

std::vector<Tuple> stable_hom_tuples(const HomQuery& query, const GroupParams& params) {
  std::vector<Tuple> out;
  if (is_projective_index(query.b, params) || is_projective_index(query.c, params)) return out;
  const int p = params.p();
  const int n = params.n();
  const auto b = to_digits(query.b, params);
  const auto c = to_digits(query.c, params);
  std::vector<int> lo(static_cast<std::size_t>(n));
  std::vector<int> hi(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::max(0, c[i] - b[i]);
    hi[i] = c[i];
  }
  const std::int64_t twist = params.reduce(query.j - query.jj);
  for_each_tuple(lo, hi, [&](const std::vector<int>& k) {
    bool escapes_hull = false;
    std::int64_t sum = twist;
    for (std::size_t i = 0; i < k.size(); ++i) {
      assert_bounds(digit_bounds_check(b[i], c[i], k[i], false, p));
      escapes_hull = escapes_hull || k[i] <= p - 2 - b[i];
      sum += params.pow(static_cast<int>(i)) * (b[i] - c[i] + 2 * k[i]);
    }
    if (escapes_hull && params.reduce(sum) == 0) out.push_back({-1, k});
  });
  return out;
}

std::vector<Tuple> ext1_tuples(const HomQuery& query, const GroupParams& params) {
  std::vector<Tuple> out;
  if (is_projective_index(query.b, params) || is_projective_index(query.c, params)) return out;
  const int p = params.p();
  const int n = params.n();
  const auto b = to_digits(query.b, params);
  const auto c = to_digits(query.c, params);
  const std::int64_t twist = params.reduce(query.j - query.jj);
  for (int l = 0; l < n; ++l) {
    const auto ul = static_cast<std::size_t>(l);
    if (b[ul] > p - 2 || c[ul] > p - 2) continue;
    std::vector<int> lo(static_cast<std::size_t>(n));
    std::vector<int> hi(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (i == ul) {
        lo[i] = std::max(0, b[i] + c[i] + 2 - p);
        hi[i] = std::min(b[i], c[i]);
      } else {
        lo[i] = std::max(0, c[i] - b[i]);
        hi[i] = c[i];
      }
    }
    for_each_tuple(lo, hi, [&](const std::vector<int>& k) {
      std::int64_t sum = twist;
      for (std::size_t i = 0; i < k.size(); ++i) {
        const bool at_l = i == ul;
        assert_bounds(digit_bounds_check(b[i], c[i], k[i], at_l, p));
        const int digit = at_l ? -b[i] - c[i] + 2 * k[i] - 2 : b[i] - c[i] + 2 * k[i];
        sum += params.pow(static_cast<int>(i)) * digit;
      }
      if (params.reduce(sum) == 0) out.push_back({l, k});
    });
  }
  return out;
}

int stable_hom_dim(const HomQuery& query, const GroupParams& params) {
  return static_cast<int>(stable_hom_tuples(query, params).size());
}

int ext1_dim(const HomQuery& query, const GroupParams& params) {
  return static_cast<int>(ext1_tuples(query, params).size());
}

ExtensionVerdict ext_cor1(std::int64_t m, std::int64_t b, const GroupParams& params) {
  const int r = val_p(m, params);
  const int s = layer(b, params);
  if (s <= r) {
    throw InvalidCase("ext_cor1 needs layer(b) > r_m (layer " + std::to_string(s) + ", r_m " + std::to_string(r) + ")");
  }
  const auto md = to_digits(m, params);
  const auto bd = to_digits(b, params);
  const int lead = md[static_cast<std::size_t>(s - 1)] + bd[static_cast<std::size_t>(s)];
  bool lower_zero = true;
  for (int i = 0; i + 2 <= s; ++i) lower_zero = lower_zero && md[static_cast<std::size_t>(i)] == 0;

  ExtensionVerdict verdict;
  if (lead < params.p() - 1) return verdict;
  if (lead > params.p() - 1 || !lower_zero) {
    throw InvalidCase("m = " + std::to_string(m) + ", b = " + std::to_string(b) +
                      " already has a ceiling form; no extension question arises");
  }
  verdict.kind = ExtensionKind::Unique;
  verdict.partner_index = completion(b, params);
  verdict.result = StableSymbol::make(ceil_at(m, s, params) * params.p(), 1, partner(b, params), params);
  return verdict;
}

bool ext_cor2_zero(std::int64_t m, std::int64_t b, std::int64_t c, const GroupParams& params) {
  const int r = val_p(m, params);
  const int s = layer(b, params);
  if (s <= r) throw DomainError("ext_cor2_zero needs layer(b) > r_m");
  if (layer(c, params) > r) throw DomainError("ext_cor2_zero needs layer(c) <= r_m");
  const auto md = to_digits(m, params);
  const auto bd = to_digits(b, params);
  if (md[static_cast<std::size_t>(s - 1)] + bd[static_cast<std::size_t>(s)] < params.p() - 1) {
    throw DomainError("ext_cor2_zero needs m_{s-1} + b_s >= p-1");
  }
  const HomQuery q{ceil_at(m, s, params) * params.p(), partner(b, params), m * params.p(), c};
  return ext1_dim(q, params) == 0;
}

}  // namespace sl2tilt::homcount
