#include "sl2tilt/basep.hpp"

#include <limits>
#include <sstream>

#include "sl2tilt/errors.hpp"

namespace sl2tilt {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 31;

void check_index(std::int64_t a, const GroupParams& params) {
  if (a < 0 || a > params.q() - 1) {
    throw DomainError("index " + std::to_string(a) + " outside 0.." + std::to_string(params.q() - 1));
  }
}

void check_layered(std::int64_t a, const GroupParams& params) {
  check_index(a, params);
  if (a == params.steinberg()) {
    throw NoLayerError("index " + std::to_string(a) + " is the Steinberg index and has no layer");
  }
}

void check_step(std::int64_t m, const GroupParams& params) {
  if (m < 1 || m > params.steps()) {
    throw DomainError("step " + std::to_string(m) + " outside 1.." + std::to_string(params.steps()));
  }
}

}  // namespace

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  for (std::int64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

GroupParams::GroupParams(int p, int n) : p_(p), n_(n), q_(1) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("n must be at least 1");
  powers_.push_back(1);
  for (int i = 0; i < n; ++i) {
    if (q_ > kMaxOrder / p) {
      throw DomainError("p^n exceeds 2^31 (p = " + std::to_string(p) + ", n = " + std::to_string(n) + ")");
    }
    q_ *= p;
    powers_.push_back(q_);
  }
}

std::int64_t GroupParams::reduce(std::int64_t x) const {
  const std::int64_t r = x % modulus();
  return r < 0 ? r + modulus() : r;
}

DigitVector to_digits(std::int64_t a, const GroupParams& params) {
  check_index(a, params);
  DigitVector d;
  d.value = a;
  d.digits.reserve(static_cast<std::size_t>(params.n()));
  for (int i = 0; i < params.n(); ++i) {
    d.digits.push_back(static_cast<int>(a % params.p()));
    a /= params.p();
  }
  return d;
}

std::int64_t from_digits(const std::vector<int>& digits, const GroupParams& params) {
  if (digits.size() != static_cast<std::size_t>(params.n())) {
    throw DomainError("expected " + std::to_string(params.n()) + " digits");
  }
  std::int64_t value = 0;
  for (int i = params.n() - 1; i >= 0; --i) {
    const int d = digits[static_cast<std::size_t>(i)];
    if (d < 0 || d >= params.p()) throw DomainError("digit " + std::to_string(d) + " outside 0..p-1");
    value = value * params.p() + d;
  }
  return value;
}

std::string format_digits(const DigitVector& d) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < d.digits.size(); ++i) {
    if (i) out << ',';
    out << d.digits[i];
  }
  out << ')';
  return out.str();
}

bool is_rim(std::int64_t a, const GroupParams& params) {
  const auto d = to_digits(a, params);
  int free = 0;
  for (int x : d.digits) free += (x != params.p() - 1);
  return free == 1;
}

int rim_position(std::int64_t a, const GroupParams& params) {
  if (!is_rim(a, params)) throw DomainError("index " + std::to_string(a) + " is not a rim index");
  const auto d = to_digits(a, params);
  for (int i = 0; i < params.n(); ++i) {
    if (d[static_cast<std::size_t>(i)] != params.p() - 1) return i;
  }
  return -1;  // unreachable
}

int layer(std::int64_t a, const GroupParams& params) {
  check_layered(a, params);
  const auto d = to_digits(a, params);
  for (int i = params.n() - 1; i >= 0; --i) {
    if (d[static_cast<std::size_t>(i)] != params.p() - 1) return i;
  }
  return -1;  // unreachable
}

int layer_by_interval(std::int64_t a, const GroupParams& params) {
  check_layered(a, params);
  for (int i = 0; i < params.n(); ++i) {
    if (params.q() - params.pow(i + 1) <= a && a <= params.q() - params.pow(i) - 1) return i;
  }
  return -1;  // unreachable
}

std::int64_t flip_digit(std::int64_t a, int i, const GroupParams& params) {
  auto d = to_digits(a, params);
  auto& digit = d.digits.at(static_cast<std::size_t>(i));
  if (digit > params.p() - 2) throw DomainError("digit " + std::to_string(i) + " is p-1 and has no flip");
  digit = params.p() - 2 - digit;
  return from_digits(d.digits, params);
}

std::int64_t fill_digit(std::int64_t a, int i, const GroupParams& params) {
  auto d = to_digits(a, params);
  d.digits.at(static_cast<std::size_t>(i)) = params.p() - 1;
  return from_digits(d.digits, params);
}

std::int64_t partner(std::int64_t a, const GroupParams& params) {
  return flip_digit(a, layer(a, params), params);
}

std::int64_t completion(std::int64_t a, const GroupParams& params) {
  return fill_digit(a, layer(a, params), params);
}

int val_p(std::int64_t m, const GroupParams& params) {
  check_step(m, params);
  int r = 0;
  while (m % params.p() == 0) {
    m /= params.p();
    ++r;
  }
  return r;
}

std::int64_t floor_at(std::int64_t m, int s, const GroupParams& params) {
  check_step(m, params);
  if (s < 0 || s > params.n() - 1) throw DomainError("digit position " + std::to_string(s) + " out of range");
  return m - m % params.pow(s);
}

std::int64_t ceil_at(std::int64_t m, int s, const GroupParams& params) {
  return floor_at(m, s, params) + params.pow(s);
}

Parity k_parity(std::int64_t m, int s, const GroupParams& params) {
  return (floor_at(m, s, params) / params.pow(s)) % 2 == 0 ? Parity::Even : Parity::Odd;
}

}  // namespace sl2tilt
