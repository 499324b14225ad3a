#pragma once

// Special functions needed by the closed forms of the catalog: Gamma, log
// Gamma, Hurwitz and Riemann zeta, polygamma, Dirichlet beta and eta, Bessel
// J of real order, and the nome derivative theta_1'(0, q).
//
// Every function returns a SpecialValue carrying an estimated relative error.
// All evaluations are deterministic and free of shared state.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>

#include "hyptrig/accel.hpp"
#include "hyptrig/errors.hpp"

namespace hyptrig::specfun {

struct AccuracySpec {
  double target_rel_error = 1e-12;
  std::size_t max_terms = 100000;

  void validate() const {
    if (!(target_rel_error > 0.0 && target_rel_error <= 1e-3)) {
      throw domain_error("AccuracySpec: target_rel_error must lie in (0, 1e-3]");
    }
    if (max_terms < 16) {
      throw domain_error("AccuracySpec: max_terms must be at least 16");
    }
  }
};

struct SpecialValue {
  double value = 0.0;
  double est_rel_error = 0.0;
};

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw domain_error(std::string(fn) + ": argument must be finite");
  }
}

inline double rel_estimate(double abs_err, double value) {
  const double mag = std::abs(value);
  if (mag == 0.0) {
    return abs_err == 0.0 ? 0.0 : 1.0;
  }
  return abs_err / std::max(mag, abs_err);
}

// Lanczos approximation, g = 7, nine coefficients. Valid for x >= 0.5.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline double lanczos_series(double z) {
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (z + static_cast<double>(i));
  }
  return acc;
}

inline double gamma_lanczos(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // Split the power so that t^(z+1/2) e^-t does not overflow before the
  // exponential brings it back down.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_series(z);
}

inline double log_gamma_lanczos(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_series(z));
}

// B_2 .. B_20 as exact rationals.
inline constexpr std::array<std::array<double, 2>, 10> kBernoulli = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
}};

// Euler-Maclaurin with N direct terms and M = 10 Bernoulli corrections.
inline double hurwitz_em(double s, double a, std::size_t n_direct) {
  double direct = 0.0;
  for (std::size_t k = n_direct; k-- > 0;) {
    direct += std::pow(static_cast<double>(k) + a, -s);
  }
  const double w = static_cast<double>(n_direct) + a;
  const double w_s = std::pow(w, -s);
  double tail = w * w_s / (s - 1.0) + 0.5 * w_s;
  // factor_j = s(s+1)...(s+2j-2) / (2j)! / w^(2j-1)
  double factor = s / (2.0 * w);
  for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
    const double b2j = kBernoulli[j - 1][0] / kBernoulli[j - 1][1];
    tail += b2j * factor * w_s;
    const double m = static_cast<double>(2 * j);
    factor *= (s + m - 1.0) * (s + m) / ((m + 1.0) * (m + 2.0) * w * w);
  }
  return direct + tail;
}

inline double theta1_prime0_direct(double log_q, double rel_tol, std::size_t max_terms,
                                   std::size_t* terms_used = nullptr) {
  double sum = 0.0;
  std::size_t n = 1;
  for (; n <= max_terms; ++n) {
    const double h = static_cast<double>(n) - 0.5;
    const double term = (2.0 * static_cast<double>(n) - 1.0) * std::exp(h * h * log_q);
    sum += (n % 2 == 1 ? term : -term);
    const double hn = h + 1.0;
    const double next = (2.0 * static_cast<double>(n) + 1.0) * std::exp(hn * hn * log_q);
    if (next <= rel_tol * std::abs(sum) || next == 0.0) {
      break;
    }
  }
  if (terms_used != nullptr) {
    *terms_used = n;
  }
  return 2.0 * sum;
}

}  // namespace detail

/// Gamma function on the positive axis. Relative error below 1e-13 on (0, 50].
inline SpecialValue gamma(double x, const AccuracySpec& acc = {}) {
  acc.validate();
  detail::require_finite(x, "gamma");
  if (x <= 0.0) {
    throw domain_error("gamma: x must be positive");
  }
  if (x > 171.6) {
    throw domain_error("gamma: result overflows for x > 171.6");
  }
  const double value = x < 0.5 ? detail::gamma_lanczos(x + 1.0) / x : detail::gamma_lanczos(x);
  return {value, 1e-14 * (1.0 + 0.1 * std::abs(std::log(std::max(x, 1.0))))};
}

/// log Gamma(x) for x > 0; stays finite up to x ~ 1e300.
inline SpecialValue log_gamma(double x, const AccuracySpec& acc = {}) {
  acc.validate();
  detail::require_finite(x, "log_gamma");
  if (x <= 0.0) {
    throw domain_error("log_gamma: x must be positive");
  }
  double value = 0.0;
  if (x < 0.5) {
    value = detail::log_gamma_lanczos(x + 1.0) - std::log(x);
  } else {
    value = detail::log_gamma_lanczos(x);
  }
  const double abs_err = 4.0 * detail::kEps * (1.0 + std::abs(x * std::log(x)) + std::abs(std::log(x)));
  return {value, detail::rel_estimate(abs_err, value)};
}

/// Hurwitz zeta sum_{n>=0} (n+a)^-s for s > 1, a > 0, by Euler-Maclaurin
/// summation. The direct-sum length starts at ceil(max(20, a+s)) and is
/// doubled until two evaluations agree to the target.
inline SpecialValue hurwitz_zeta(double s, double a, const AccuracySpec& acc = {}) {
  acc.validate();
  detail::require_finite(s, "hurwitz_zeta");
  detail::require_finite(a, "hurwitz_zeta");
  if (s <= 1.0) {
    throw domain_error("hurwitz_zeta: s must exceed 1");
  }
  if (a <= 0.0) {
    throw domain_error("hurwitz_zeta: a must be positive");
  }
  auto n = static_cast<std::size_t>(std::ceil(std::max(20.0, a + s)));
  double previous = detail::hurwitz_em(s, a, n);
  for (;;) {
    const std::size_t next_n = 2 * n;
    const double current = detail::hurwitz_em(s, a, next_n);
    const double diff = std::abs(current - previous);
    if (diff <= acc.target_rel_error * std::abs(current) || next_n * 2 > acc.max_terms) {
      if (!std::isfinite(current)) {
        throw domain_error("hurwitz_zeta: result overflows");
      }
      const double est = std::max(detail::rel_estimate(diff, current), 8.0 * detail::kEps);
      return {current, est};
    }
    previous = current;
    n = next_n;
  }
}

inline SpecialValue riemann_zeta(double s, const AccuracySpec& acc = {}) {
  if (!(s > 1.0)) {
    throw domain_error("riemann_zeta: s must exceed 1 (pole at s = 1)");
  }
  return hurwitz_zeta(s, 1.0, acc);
}

/// psi^(n)(x) = (-1)^(n+1) n! zeta(n+1, x), n >= 1.
inline SpecialValue polygamma(int n, double x, const AccuracySpec& acc = {}) {
  if (n < 1) {
    throw domain_error("polygamma: order n must be at least 1");
  }
  const SpecialValue z = hurwitz_zeta(static_cast<double>(n) + 1.0, x, acc);
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) {
    factorial *= k;
  }
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return {sign * factorial * z.value, z.est_rel_error + 2.0 * detail::kEps * n};
}

/// Dirichlet beta sum_{k>=0} (-1)^k / (2k+1)^p for p > 0. For p <= 1 the
/// alternating series is summed with the Euler transform; above that the
/// Hurwitz difference 4^-p [zeta(p,1/4) - zeta(p,3/4)] is used.
inline SpecialValue dirichlet_beta(double p, const AccuracySpec& acc = {}) {
  acc.validate();
  detail::require_finite(p, "dirichlet_beta");
  if (p <= 0.0) {
    throw domain_error("dirichlet_beta: p must be positive");
  }
  if (p <= 1.0) {
    double est = 0.0;
    const double value = quad::alternating_sum(
        [p](std::size_t k) { return std::pow(2.0 * static_cast<double>(k) + 1.0, -p); },
        acc.target_rel_error, acc.max_terms, &est);
    return {value, std::max(est, 4.0 * detail::kEps)};
  }
  const SpecialValue z1 = hurwitz_zeta(p, 0.25, acc);
  const SpecialValue z3 = hurwitz_zeta(p, 0.75, acc);
  const double diff = z1.value - z3.value;
  const double value = std::pow(4.0, -p) * diff;
  const double abs_err = z1.est_rel_error * z1.value + z3.est_rel_error * z3.value;
  return {value, std::max(detail::rel_estimate(abs_err, diff), 4.0 * detail::kEps)};
}

/// Dirichlet eta (1 - 2^(1-s)) zeta(s) for s > -1, with eta(1) = ln 2.
/// Uses the Euler-transformed alternating series for s <= 1.
inline SpecialValue dirichlet_eta(double s, const AccuracySpec& acc = {}) {
  acc.validate();
  detail::require_finite(s, "dirichlet_eta");
  if (s <= -1.0) {
    throw domain_error("dirichlet_eta: s must exceed -1");
  }
  if (s <= 1.0) {
    double est = 0.0;
    const double value = quad::alternating_sum(
        [s](std::size_t k) { return std::pow(static_cast<double>(k) + 1.0, -s); },
        acc.target_rel_error, acc.max_terms, &est);
    return {value, std::max(est, 4.0 * detail::kEps)};
  }
  const SpecialValue z = riemann_zeta(s, acc);
  const double factor = -std::expm1((1.0 - s) * std::numbers::ln2);
  return {factor * z.value, z.est_rel_error + 4.0 * detail::kEps};
}

/// Bessel function of the first kind J_nu(x), nu >= -1, |x| <= 50, by the
/// ascending series (summed in extended precision).
inline SpecialValue bessel_j(double nu, double x, const AccuracySpec& acc = {}) {
  acc.validate();
  detail::require_finite(nu, "bessel_j");
  detail::require_finite(x, "bessel_j");
  if (nu < -1.0) {
    throw domain_error("bessel_j: order must be at least -1");
  }
  if (std::abs(x) > 50.0) {
    throw domain_error("bessel_j: |x| must not exceed 50 (ascending series range)");
  }
  const bool integer_order = (nu == std::floor(nu));
  if (nu == -1.0) {
    const SpecialValue j1 = bessel_j(1.0, x, acc);
    return {-j1.value, j1.est_rel_error};
  }
  if (x < 0.0) {
    if (!integer_order) {
      throw domain_error("bessel_j: negative argument requires an integer order");
    }
    const SpecialValue pos = bessel_j(nu, -x, acc);
    const bool odd = std::fmod(std::abs(nu), 2.0) == 1.0;
    return {odd ? -pos.value : pos.value, pos.est_rel_error};
  }
  if (x == 0.0) {
    if (nu == 0.0) {
      return {1.0, 0.0};
    }
    if (nu > 0.0) {
      return {0.0, 0.0};
    }
    throw domain_error("bessel_j: J_nu(0) is infinite for -1 < nu < 0");
  }
  const double half = 0.5 * x;
  const long double log_lead =
      static_cast<long double>(nu * std::log(half)) -
      static_cast<long double>(log_gamma(nu + 1.0).value);
  long double term = std::exp(log_lead);
  long double sum = term;
  long double abs_sum = std::abs(term);
  const long double q = -static_cast<long double>(half) * half;
  std::size_t k = 0;
  for (; k < acc.max_terms; ++k) {
    term *= q / ((static_cast<long double>(k) + 1.0L) * (static_cast<long double>(k) + 1.0L + nu));
    sum += term;
    abs_sum += std::abs(term);
    if (static_cast<double>(k) > half &&
        std::abs(term) <= 0.01L * acc.target_rel_error * std::abs(sum)) {
      break;
    }
    if (term == 0.0L) {
      break;
    }
  }
  const double value = static_cast<double>(sum);
  const double rounding = static_cast<double>(abs_sum) * std::numeric_limits<long double>::epsilon() *
                          static_cast<double>(k + 2);
  const double abs_err = rounding + 2.0 * detail::kEps * std::abs(value) +
                         1e-15 * std::abs(value) * std::abs(log_lead);
  return {value, detail::rel_estimate(abs_err, value)};
}

/// J_0 written as an even series in the squared argument w2 = w^2:
/// sum_k (-w2/4)^k / (k!)^2. For w2 < 0 this is I_0(sqrt(-w2)).
inline SpecialValue bessel_j0_from_square(double w2, const AccuracySpec& acc = {}) {
  acc.validate();
  detail::require_finite(w2, "bessel_j0_from_square");
  if (std::abs(w2) > 2500.0) {
    throw domain_error("bessel_j0_from_square: |w^2| must not exceed 2500");
  }
  const long double q = -0.25L * w2;
  long double term = 1.0L;
  long double sum = 1.0L;
  long double abs_sum = 1.0L;
  std::size_t k = 1;
  for (; k < acc.max_terms; ++k) {
    term *= q / (static_cast<long double>(k) * k);
    sum += term;
    abs_sum += std::abs(term);
    if (k * k > std::abs(q) && std::abs(term) <= 0.01L * acc.target_rel_error * std::abs(sum)) {
      break;
    }
  }
  const double value = static_cast<double>(sum);
  const double abs_err =
      static_cast<double>(abs_sum) * std::numeric_limits<long double>::epsilon() * (k + 2) +
      detail::kEps * std::abs(value);
  return {value, detail::rel_estimate(abs_err, value)};
}

/// J_1(w)/w as an even series in w2 = w^2: (1/2) sum_k (-w2/4)^k / (k!(k+1)!).
inline SpecialValue bessel_j1_over_arg_from_square(double w2, const AccuracySpec& acc = {}) {
  acc.validate();
  detail::require_finite(w2, "bessel_j1_over_arg_from_square");
  if (std::abs(w2) > 2500.0) {
    throw domain_error("bessel_j1_over_arg_from_square: |w^2| must not exceed 2500");
  }
  const long double q = -0.25L * w2;
  long double term = 0.5L;
  long double sum = 0.5L;
  long double abs_sum = 0.5L;
  std::size_t k = 1;
  for (; k < acc.max_terms; ++k) {
    term *= q / (static_cast<long double>(k) * (k + 1));
    sum += term;
    abs_sum += std::abs(term);
    if (k * k > std::abs(q) && std::abs(term) <= 0.01L * acc.target_rel_error * std::abs(sum)) {
      break;
    }
  }
  const double value = static_cast<double>(sum);
  const double abs_err =
      static_cast<double>(abs_sum) * std::numeric_limits<long double>::epsilon() * (k + 2) +
      detail::kEps * std::abs(value);
  return {value, detail::rel_estimate(abs_err, value)};
}

/// theta_1'(0, q) = 2 sum_{n>=1} (-1)^(n+1) (2n-1) q^((n-1/2)^2), 0 < q < 1.
///
/// For q <= e^-pi the series is summed directly, stopping once the next term
/// falls below target * |partial sum|. Closer to 1 the alternating series
/// cancels catastrophically, so the nome is first moved by the imaginary
/// transformation theta_1'(0, e^{-pi t}) = t^{-3/2} theta_1'(0, e^{-pi/t}).
inline SpecialValue theta1_prime0(double q, const AccuracySpec& acc = {}) {
  acc.validate();
  detail::require_finite(q, "theta1_prime0");
  if (!(q > 0.0 && q < 1.0)) {
    throw domain_error("theta1_prime0: nome q must lie in (0, 1)");
  }
  const double log_q = std::log(q);
  const double t = -log_q / std::numbers::pi;
  if (t >= 1.0) {
    const double value = detail::theta1_prime0_direct(log_q, 0.01 * acc.target_rel_error, acc.max_terms);
    return {value, 8.0 * detail::kEps};
  }
  const double log_q_dual = -std::numbers::pi / t;
  const double dual = detail::theta1_prime0_direct(log_q_dual, 0.01 * acc.target_rel_error, acc.max_terms);
  const double value = std::pow(t, -1.5) * dual;
  return {value, 8.0 * detail::kEps * (1.0 + std::abs(log_q_dual))};
}

}  // namespace hyptrig::specfun
