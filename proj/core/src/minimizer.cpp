#include "resonant/minimizer.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "resonant/closed_form.hpp"
#include "resonant/errors.hpp"
#include "resonant/word.hpp"

namespace resonant {

MinLogCosTable::MinLogCosTable(double theta, std::uint64_t max_budget)
    : values_(max_budget + 1, 0.0), first_part_(max_budget + 1, 0), parts_(max_budget + 1, 0) {
  std::vector<double> log_cos(max_budget + 1, 0.0);
  for (std::uint64_t j = 1; j <= max_budget; ++j) log_cos[j] = log_abs_cos(j, theta);

  for (std::uint64_t m = 1; m <= max_budget; ++m) {
    double best = std::numeric_limits<double>::infinity();
    std::uint64_t best_parts = 0;
    std::uint64_t best_first = 0;
    // Ascending j with strict improvement keeps the smallest first part on ties.
    for (std::uint64_t j = 1; j <= m; ++j) {
      const double v = log_cos[j] + values_[m - j];
      const std::uint64_t p = 1 + parts_[m - j];
      if (best_first == 0 || v < best || (v == best && p < best_parts)) {
        best = v;
        best_parts = p;
        best_first = j;
      }
    }
    values_[m] = best;
    parts_[m] = best_parts;
    first_part_[m] = best_first;
  }
}

std::vector<std::uint64_t> MinLogCosTable::profile(std::uint64_t m) const {
  std::vector<std::uint64_t> out;
  while (m > 0) {
    const std::uint64_t j = first_part_.at(m);
    out.push_back(j);
    m -= j;
  }
  return out;
}

std::uint64_t MinLogCosTable::best_budget(std::uint64_t budget) const {
  budget = std::min(budget, max_budget());
  std::uint64_t best = 0;
  for (std::uint64_t m = 1; m <= budget; ++m) {
    if (values_[m] < values_[best]) {
      best = m;
    } else if (values_[m] == values_[best]) {
      if (parts_[m] < parts_[best] || (parts_[m] == parts_[best] && profile(m) < profile(best))) {
        best = m;
      }
    }
  }
  return best;
}

MinLogCosTable min_log_cos_product(double theta, std::uint64_t max_budget) {
  return MinLogCosTable(theta, max_budget);
}

MinResult f_n_from_table(const MinLogCosTable& table, std::uint64_t n, const Params& params,
                         double theta) {
  if (n == 0) throw std::invalid_argument("f_n: n must be >= 1");
  const std::uint64_t budget = params.rotation_budget(n);
  if (budget > table.max_budget()) {
    throw std::invalid_argument("f_n: table budget " + std::to_string(table.max_budget()) +
                                " is below floor(epsilon n) = " + std::to_string(budget));
  }
  // G is nonincreasing, so the minimum over budgets m <= M equals G[M].
  assert(*std::min_element(table.values().begin(), table.values().begin() + budget + 1) ==
         table.value(budget));

  MinResult result;
  result.m_used = table.best_budget(budget);
  result.witness_profile = table.profile(result.m_used);
  result.log_f_n = hh_norm(n, result.witness_profile, theta, params.lambda());
  return result;
}

MinResult f_n(double theta, std::uint64_t n, const Params& params) {
  const MinLogCosTable table(theta, params.rotation_budget(n));
  return f_n_from_table(table, n, params, theta);
}

MinResult brute_force_f_n(double theta, std::uint64_t n, const Params& params) {
  if (n == 0) throw std::invalid_argument("brute_force_f_n: n must be >= 1");
  if (n > kModelOracleMaxN) {
    throw NumericGuardError("brute_force_f_n: n = " + std::to_string(n) +
                            " exceeds the oracle scale " + std::to_string(kModelOracleMaxN));
  }
  double best = std::numeric_limits<double>::infinity();
  MinResult result;
  for_each_word(n, params.rotation_budget(n), [&](const Word& w) {
    const double v = l1_entry_norm(evaluate_word(w, theta, params.lambda()));
    if (v < best) {
      best = v;
      result.witness_profile = rotation_factor_profile(w);
      result.m_used = w.r_total();
    }
  });
  result.log_f_n = LogMagnitude::from_linear(best);
  return result;
}

}  // namespace resonant
