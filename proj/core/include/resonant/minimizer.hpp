#pragma once

#include <cstdint>
#include <vector>

#include "resonant/log_magnitude.hpp"
#include "resonant/params.hpp"

namespace resonant {

// f_n(theta) together with the rotation profile of an HH word attaining it.
struct MinResult {
  LogMagnitude log_f_n;
  std::vector<std::uint64_t> witness_profile;
  std::uint64_t m_used = 0;
};

/**
 * G[m] = min over ordered partitions (j_1, ..., j_k) of m of
 * sum_i log|cos(j_i theta)|, for m = 0..M.
 *
 * Built by the recurrence G[m] = min_j (log|cos(j theta)| + G[m - j]) in
 * O(M^2). Equal values are broken by fewer parts, then by the
 * lexicographically smallest profile. G is nonincreasing in m.
 */
class MinLogCosTable {
 public:
  MinLogCosTable(double theta, std::uint64_t max_budget);

  std::uint64_t max_budget() const { return values_.size() - 1; }
  double value(std::uint64_t m) const { return values_.at(m); }
  const std::vector<double>& values() const { return values_; }
  // First part of the optimal profile for m (0 for m == 0).
  std::uint64_t backpointer(std::uint64_t m) const { return first_part_.at(m); }
  std::uint64_t parts(std::uint64_t m) const { return parts_.at(m); }
  std::vector<std::uint64_t> profile(std::uint64_t m) const;

  // Optimal budget m <= M under the same ordering (value, parts, profile).
  std::uint64_t best_budget(std::uint64_t budget) const;

 private:
  std::vector<double> values_;
  std::vector<std::uint64_t> first_part_;
  std::vector<std::uint64_t> parts_;
};

MinLogCosTable min_log_cos_product(double theta, std::uint64_t max_budget);

// f_n from a table whose max budget covers floor(epsilon n).
MinResult f_n_from_table(const MinLogCosTable& table, std::uint64_t n, const Params& params,
                         double theta);

// f_n(theta) = min over all words with n copies of h and at most
// floor(epsilon n) rotations, in polynomial time.
MinResult f_n(double theta, std::uint64_t n, const Params& params);

inline constexpr std::uint64_t kModelOracleMaxN = 12;

// Exhaustive minimum of l1_entry_norm(evaluate_word(w)) over
// enumerate_words(n, floor(epsilon n)). Throws NumericGuardError for
// n > kModelOracleMaxN.
MinResult brute_force_f_n(double theta, std::uint64_t n, const Params& params);

}  // namespace resonant
