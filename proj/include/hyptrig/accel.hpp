#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hyptrig/errors.hpp"

namespace hyptrig::quad {

// Euler (van Wijngaarden) transform of a sequence of partial sums: the last
// depth+1 partial sums are averaged pairwise `depth` times. Needs at least
// depth+2 entries so that the averaged window never starts at S_0.
inline double euler_transform(std::span<const double> partial_sums, std::size_t depth) {
  if (partial_sums.size() < depth + 2) {
    throw domain_error("euler_transform: need at least depth+2 partial sums (have " +
                       std::to_string(partial_sums.size()) + ", depth " +
                       std::to_string(depth) + ")");
  }
  std::vector<double> window(partial_sums.end() - static_cast<std::ptrdiff_t>(depth + 1),
                             partial_sums.end());
  for (std::size_t pass = 0; pass < depth; ++pass) {
    for (std::size_t i = 0; i + 1 < window.size() - pass; ++i) {
      window[i] = 0.5 * (window[i] + window[i + 1]);
    }
  }
  return window.front();
}

// Depth used when the caller has no better idea; 3/5 of the available sums
// works well for completely monotone alternating terms.
inline std::size_t default_euler_depth(std::size_t n) {
  return n < 2 ? 0 : std::min(n - 2, (3 * n) / 5);
}

/// Aitken delta-squared process. Output has two fewer entries; where the
/// second difference vanishes the input value is passed through unchanged.
inline std::vector<double> aitken(std::span<const double> s) {
  if (s.size() < 3) {
    throw domain_error("aitken: need at least 3 entries");
  }
  std::vector<double> out;
  out.reserve(s.size() - 2);
  for (std::size_t k = 0; k + 2 < s.size(); ++k) {
    const double d0 = s[k + 1] - s[k];
    const double d1 = s[k + 2] - s[k + 1];
    const double dd = d1 - d0;
    if (std::abs(dd) < 1e-300) {
      out.push_back(s[k + 2]);
    } else {
      out.push_back(s[k + 2] - d1 * d1 / dd);
    }
  }
  return out;
}

/// Sum of an alternating series sum_{k>=0} (-1)^k term(k) with term(k) >= 0
/// decreasing, via Euler-transformed partial sums. The number of terms is
/// doubled until two estimates agree to `rel_tol`.
template <class Term>
double alternating_sum(Term&& term, double rel_tol, std::size_t max_terms, double* est_rel = nullptr) {
  std::size_t n = 40;
  std::vector<double> sums;
  double sum = 0.0;
  double previous = 0.0;
  bool have_previous = false;
  for (;;) {
    while (sums.size() < n) {
      const auto k = sums.size();
      sum += (k % 2 == 0 ? 1.0 : -1.0) * term(k);
      sums.push_back(sum);
    }
    const double estimate = euler_transform(sums, default_euler_depth(n));
    if (have_previous) {
      const double diff = std::abs(estimate - previous);
      if (diff <= rel_tol * std::abs(estimate) || n * 2 > max_terms) {
        if (est_rel != nullptr) {
          *est_rel = std::abs(estimate) > 0 ? std::max(diff / std::abs(estimate), 1e-16) : diff;
        }
        return estimate;
      }
    }
    previous = estimate;
    have_previous = true;
    n *= 2;
  }
}

}  // namespace hyptrig::quad
