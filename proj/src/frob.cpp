#include "sl2tilt/frob.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sl2tilt/errors.hpp"

namespace sl2tilt::frob {

namespace {

void check_simple(std::int64_t a, const GroupParams& params) {
  if (a < 0 || a > params.steinberg() - 1) {
    throw DomainError("simple index " + std::to_string(a) + " outside 0.." + std::to_string(params.steinberg() - 1));
  }
}

std::int64_t phi_raw(const Partition& lambda, int p) {
  std::int64_t total = 0;
  std::int64_t w = 1;
  for (int part : lambda) {
    total -= part * w;
    w *= p;
  }
  return total;
}

}  // namespace

std::int64_t sigma(std::int64_t a, const GroupParams& params) {
  check_simple(a, params);
  return params.reduce(a * params.p());
}

std::vector<int> z_sequence(std::int64_t a, const GroupParams& params) {
  check_simple(a, params);
  std::vector<int> z;
  std::int64_t x = a;
  for (int i = 0; i < params.n(); ++i) {
    z.push_back(layer(x, params));
    x = sigma(x, params);
  }
  return z;
}

Partition partition_of(std::int64_t a, const GroupParams& params) {
  Partition lambda(static_cast<std::size_t>(params.n()), 0);
  for (int zi : z_sequence(a, params)) ++lambda[static_cast<std::size_t>(params.n() - 1 - zi)];
  return lambda;
}

std::int64_t phi_prime(const Partition& lambda, const GroupParams& params) {
  int sum = 0;
  for (int part : lambda) sum += part;
  if (sum != params.n() || !std::is_sorted(lambda.rbegin(), lambda.rend())) {
    throw DomainError("not a partition of n = " + std::to_string(params.n()));
  }
  return phi_raw(lambda, params.p());
}

std::int64_t total_omega(std::int64_t a, const GroupParams& params) {
  std::int64_t total = 0;
  for (int zi : z_sequence(a, params)) total -= params.pow(params.n() - 1 - zi);
  return total;
}

PartitionData partition_data(std::int64_t a, const GroupParams& params) {
  PartitionData d;
  d.a = a;
  d.z = z_sequence(a, params);
  d.lambda = partition_of(a, params);
  for (int zi : d.z) d.omega_values.push_back(-params.pow(params.n() - 1 - zi));
  for (auto w : d.omega_values) d.phi += w;
  return d;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> build = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition padded = current;
      padded.resize(static_cast<std::size_t>(n), 0);
      out.push_back(padded);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(n, n);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0;
  int sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::string format_partition(const Partition& lambda) {
  std::string s = "(";
  bool first = true;
  for (int part : lambda) {
    if (part == 0) break;
    if (!first) s += ",";
    s += std::to_string(part);
    first = false;
  }
  return s + ")";
}

std::vector<PartitionClass> lex_filtration(const GroupParams& params) {
  std::vector<PartitionClass> classes;
  std::map<Partition, std::size_t> slot;
  for (const Partition& lambda : partitions_of(params.n())) {
    slot.emplace(lambda, classes.size());
    classes.push_back({lambda, {}});
  }
  for (std::int64_t a = 0; a < params.steinberg(); ++a) classes[slot.at(partition_of(a, params))].members.push_back(a);
  return classes;
}

bool partial_order_B(std::int64_t a, std::int64_t b, const GroupParams& params) {
  const auto ad = to_digits(a, params);
  const auto bd = to_digits(b, params);
  const int top = params.p() - 1;
  int count_a = 0;
  int count_b = 0;
  for (std::size_t i = 0; i < ad.size(); ++i) {
    count_a += ad[i] == top ? 1 : 0;
    count_b += bd[i] == top ? 1 : 0;
    if (bd[i] == top && ad[i] != top) return false;
  }
  return count_a > count_b;
}

std::optional<std::pair<Partition, Partition>> phi_collision(int p, int n) {
  std::map<std::int64_t, Partition> seen;
  for (const Partition& lambda : partitions_of(n)) {
    const std::int64_t v = phi_raw(lambda, p);
    auto [it, inserted] = seen.emplace(v, lambda);
    if (!inserted) return std::make_pair(it->second, lambda);
  }
  return std::nullopt;
}

std::optional<std::pair<Partition, Partition>> phi_lex_violation(int p, int n) {
  const auto all = partitions_of(n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (phi_raw(all[i], p) >= phi_raw(all[j], p)) return std::make_pair(all[i], all[j]);
    }
  }
  return std::nullopt;
}

bool layer_increment_holds(std::int64_t a, const GroupParams& params) {
  std::int64_t x = a;
  for (int i = 0; i < params.n(); ++i) {
    const int l = layer(x, params);
    const std::int64_t next = sigma(x, params);
    if (l < params.n() - 1 && layer(next, params) != l + 1) return false;
    x = next;
  }
  return x == a;
}

}  // namespace sl2tilt::frob
