#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "resonant/log_magnitude.hpp"
#include "resonant/word.hpp"

namespace resonant {

// log|cos(j theta)|, -inf at exact zeros.
double log_abs_cos(std::uint64_t j, double theta);

// log(|cos(j theta)| + |sin(j theta)|), always in [0, log(2)/2].
double log_boundary_factor(std::uint64_t j, double theta);

// n log(lambda) + sum_i log|cos(j_i theta)|, summed left to right. This is
// the norm of any HH word with n copies of h and rotation profile `profile`.
LogMagnitude hh_norm(std::uint64_t n, std::span<const std::uint64_t> profile, double theta,
                     double lambda);

// log of the entrywise l1 norm of the model word, evaluated from its
// closed-form factorization. Valid at any n; only (n, shape, rotation
// profile) enter the result.
LogMagnitude closed_form_norm(const Word& word, double theta, double lambda);

}  // namespace resonant
