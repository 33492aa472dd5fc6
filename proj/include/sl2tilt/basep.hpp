#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sl2tilt {

/// Parameters of SL_2(q), q = p^n, in defining characteristic.
///
/// The prime is checked on construction and q is computed exactly; parameter
/// sets with q > 2^31 are rejected rather than allowed to wrap.
class GroupParams {
 public:
  GroupParams(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  std::int64_t q() const { return q_; }
  /// q - 1, the modulus for U-subscripts.
  std::int64_t modulus() const { return q_ - 1; }
  /// p^e for 0 <= e <= n.
  std::int64_t pow(int e) const { return powers_.at(static_cast<std::size_t>(e)); }
  /// Index of the Steinberg module, q - 1.
  std::int64_t steinberg() const { return q_ - 1; }
  /// Number of tilt steps, p^{n-1}.
  std::int64_t steps() const { return powers_[static_cast<std::size_t>(n_ - 1)]; }
  /// Reduces x into [0, q-1).
  std::int64_t reduce(std::int64_t x) const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  int p_;
  int n_;
  std::int64_t q_;
  std::vector<std::int64_t> powers_;
};

bool is_prime(std::int64_t x);

/// Base-p digits of an index, least significant first.
struct DigitVector {
  std::vector<int> digits;
  std::int64_t value = 0;

  int operator[](std::size_t i) const { return digits[i]; }
  std::size_t size() const { return digits.size(); }
  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

DigitVector to_digits(std::int64_t a, const GroupParams& params);
std::int64_t from_digits(const std::vector<int>& digits, const GroupParams& params);
/// "(d0,d1,...)" with the least significant digit first, as in the tables.
std::string format_digits(const DigitVector& d);

/// True when a has exactly one digit different from p-1.
bool is_rim(std::int64_t a, const GroupParams& params);
/// Position of the unique non-(p-1) digit of a rim index.
int rim_position(std::int64_t a, const GroupParams& params);

/// The i with digits i+1..n-1 equal to p-1 and digit i not; throws NoLayerError on q-1.
int layer(std::int64_t a, const GroupParams& params);
/// Same, through the interval p^n - p^{i+1} <= a <= p^n - p^i - 1.
int layer_by_interval(std::int64_t a, const GroupParams& params);

/// a with digit i replaced by p-2-a_i (requires a_i <= p-2).
std::int64_t flip_digit(std::int64_t a, int i, const GroupParams& params);
/// a with digit i replaced by p-1.
std::int64_t fill_digit(std::int64_t a, int i, const GroupParams& params);

/// Partner a': the layer digit replaced by p-2-a_s. Involutive, layer-preserving.
std::int64_t partner(std::int64_t a, const GroupParams& params);
/// Completion: the layer digit replaced by p-1.
std::int64_t completion(std::int64_t a, const GroupParams& params);

/// r_m, the p-adic valuation of 1 <= m <= p^{n-1}.
int val_p(std::int64_t m, const GroupParams& params);
/// Largest multiple of p^s not exceeding m.
std::int64_t floor_at(std::int64_t m, int s, const GroupParams& params);
/// floor_at(m, s) + p^s.
std::int64_t ceil_at(std::int64_t m, int s, const GroupParams& params);

enum class Parity { Even, Odd };
/// Parity of k_s = floor_at(m, s) / p^s.
Parity k_parity(std::int64_t m, int s, const GroupParams& params);

}  // namespace sl2tilt
