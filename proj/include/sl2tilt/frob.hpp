#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2tilt/basep.hpp"

namespace sl2tilt::frob {

/// A partition of n, weakly decreasing and zero-padded to length n.
using Partition = std::vector<int>;

struct PartitionData {
  std::int64_t a = 0;
  std::vector<int> z;
  Partition lambda;
  std::vector<std::int64_t> omega_values;  ///< -p^{n-1-Z_i}
  std::int64_t phi = 0;                    ///< sum of omega_values
};

/// p a mod q-1, a left rotation of the digits.
std::int64_t sigma(std::int64_t a, const GroupParams& params);
/// (Z_a)_i = layer(p^i a mod q-1).
std::vector<int> z_sequence(std::int64_t a, const GroupParams& params);
/// lambda_j = #{i : Z_i = n-1-j}.
Partition partition_of(std::int64_t a, const GroupParams& params);
/// sum_j -lambda_j p^j.
std::int64_t phi_prime(const Partition& lambda, const GroupParams& params);
std::int64_t total_omega(std::int64_t a, const GroupParams& params);
PartitionData partition_data(std::int64_t a, const GroupParams& params);

/// All partitions of n, padded, in lexicographic order from (1^n) to (n).
std::vector<Partition> partitions_of(int n);
bool lex_less(const Partition& a, const Partition& b);
/// a dominates b: every partial sum of a is at least that of b.
bool dominates(const Partition& a, const Partition& b);
std::string format_partition(const Partition& lambda);

struct PartitionClass {
  Partition lambda;
  std::vector<std::int64_t> members;
};
/// Simples 0..q-2 grouped by lambda_a; every partition of n appears, possibly empty.
std::vector<PartitionClass> lex_filtration(const GroupParams& params);

/// a has strictly more digits p-1 than b, and a_i = p-1 wherever b_i = p-1.
bool partial_order_B(std::int64_t a, std::int64_t b, const GroupParams& params);

/// Two distinct partitions of n with the same phi', if any (first in lexicographic order).
std::optional<std::pair<Partition, Partition>> phi_collision(int p, int n);
/// Partitions kappa <lex lambda with phi'(kappa) >= phi'(lambda), if any.
std::optional<std::pair<Partition, Partition>> phi_lex_violation(int p, int n);

/// layer(sigma(b)) = layer(b) + 1 for every b of layer < n-1 in the orbit of a.
bool layer_increment_holds(std::int64_t a, const GroupParams& params);

}  // namespace sl2tilt::frob
