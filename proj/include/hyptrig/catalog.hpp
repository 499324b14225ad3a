#pragma once

// Registry of table entries: parameter schemas with validity predicates,
// integrand factories and closed-form evaluators. Every closed form is
// implemented as the table states it, including the entries the audit shows
// to be defective.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyptrig/errors.hpp"
#include "hyptrig/quad.hpp"
#include "hyptrig/specfun.hpp"

namespace hyptrig::catalog {

/// Named real parameters in schema order.
class ParamPoint {
 public:
  ParamPoint() = default;
  ParamPoint(std::initializer_list<std::pair<std::string, double>> init) : values_(init) {}

  void set(const std::string& name, double value) {
    for (auto& [k, v] : values_) {
      if (k == name) {
        v = value;
        return;
      }
    }
    values_.emplace_back(name, value);
  }

  bool has(const std::string& name) const {
    return std::any_of(values_.begin(), values_.end(), [&](const auto& kv) { return kv.first == name; });
  }

  double at(const std::string& name) const {
    for (const auto& [k, v] : values_) {
      if (k == name) {
        return v;
      }
    }
    throw domain_error("missing parameter '" + name + "'");
  }

  double operator[](const std::string& name) const { return at(name); }

  const std::vector<std::pair<std::string, double>>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

  bool operator==(const ParamPoint&) const = default;

 private:
  std::vector<std::pair<std::string, double>> values_;
};

enum class Flag { suspect, dual_convention, constant_entry };

inline const char* to_string(Flag f) {
  switch (f) {
    case Flag::suspect: return "suspect";
    case Flag::dual_convention: return "dual_convention";
    case Flag::constant_entry: return "constant_entry";
  }
  return "?";
}

struct Predicate {
  std::string text;
  std::function<bool(const ParamPoint&)> holds;
};

/// Source of uniform deviates in [0, 1) handed to the entry samplers.
using Uniform = std::function<double()>;

struct EntryDescriptor {
  std::string id;
  std::vector<std::string> params;
  std::vector<Predicate> domain;
  std::string formula;
  std::function<std::pair<quad::Integrand, quad::IntervalSpec>(const ParamPoint&)> integrand_factory;
  std::function<double(const ParamPoint&)> closed_form;
  std::function<ParamPoint(const Uniform&)> sampler;
  std::vector<Flag> flags;
  std::string provenance_note;
  std::string diagnostic_note;

  bool has_flag(Flag f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }

  /// Throws domain_error naming the first missing parameter or violated predicate.
  void check(const ParamPoint& pt) const {
    for (const auto& name : params) {
      if (!pt.has(name)) {
        throw domain_error(id + ": missing parameter '" + name + "'");
      }
      if (!std::isfinite(pt.at(name))) {
        throw domain_error(id + ": parameter '" + name + "' must be finite");
      }
    }
    for (const auto& [name, value] : pt.values()) {
      if (std::find(params.begin(), params.end(), name) == params.end()) {
        throw domain_error(id + ": unknown parameter '" + name + "'");
      }
    }
    for (const auto& p : domain) {
      if (!p.holds(pt)) {
        throw domain_error(id + ": violated " + p.text);
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Elementary helpers shared by the integrands and closed forms.
namespace detail {

using std::numbers::pi;

inline double sq(double x) { return x * x; }

/// ln cosh z without overflow.
inline double log_cosh(double z) {
  const double m = std::abs(z);
  return m + std::log1p(std::exp(-2.0 * m)) - std::numbers::ln2;
}

/// Gudermannian 2 arctan(e^y) - pi/2.
inline double gudermannian(double y) { return std::atan(std::sinh(y)); }

/// sinh(bx)/sinh(ax) for a > |b|, x > 0.
inline double sinh_ratio(double b, double a, double x) {
  const double sb = b < 0.0 ? -1.0 : 1.0;
  return sb * std::exp((std::abs(b) - a) * x) * (-std::expm1(-2.0 * std::abs(b) * x)) /
         (-std::expm1(-2.0 * a * x));
}

/// cosh(bx)/sinh(ax) for a > |b|, x > 0.
inline double cosh_sinh_ratio(double b, double a, double x) {
  return std::exp((std::abs(b) - a) * x) * (1.0 + std::exp(-2.0 * std::abs(b) * x)) /
         (-std::expm1(-2.0 * a * x));
}

/// 1/cosh(bx) for b x >= 0.
inline double sech(double y) {
  const double e = std::exp(-std::abs(y));
  return 2.0 * e / (1.0 + e * e);
}

/// cosh y - cos x.
inline double cosh_minus_cos(double y, double x) {
  return 2.0 * (sq(std::sinh(0.5 * y)) + sq(std::sin(0.5 * x)));
}

/// cosh y + cos x.
inline double cosh_plus_cos(double y, double x) {
  return 2.0 * (sq(std::sinh(0.5 * y)) + sq(std::cos(0.5 * x)));
}

/// sinh s -+ sin s, summed as a series for small s.
inline double sinh_minus_sin(double s) {
  if (std::abs(s) < 0.5) {
    // 2 sum_k s^(4k+3)/(4k+3)!
    double term = s * s * s / 6.0;
    double sum = 0.0;
    for (int k = 0; k < 8; ++k) {
      sum += term;
      const double n = 4.0 * k + 3.0;
      term *= s * s * s * s / ((n + 1) * (n + 2) * (n + 3) * (n + 4));
    }
    return 2.0 * sum;
  }
  return std::sinh(s) - std::sin(s);
}

/// sin(m x) * x / (x^2 - pi^2), kept accurate near x = pi.
inline double sin_m_over_pole(int m, double x) {
  const double d = x - pi;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  if (std::abs(d) < 0.5) {
    return sign * std::sin(m * d) / d * x / (x + pi);
  }
  return std::sin(m * x) * x / ((x - pi) * (x + pi));
}

inline double log_uniform(double u, double lo, double hi) { return lo * std::pow(hi / lo, u); }
inline double uniform(double u, double lo, double hi) { return lo + (hi - lo) * u; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Closed forms. Each function evaluates the table's right-hand side.

inline double cf_lemma1(double p, double a, double b) {
  using namespace specfun;
  return gamma(p).value * std::pow(2.0 * a, -p) *
         (hurwitz_zeta(p, (a - b) / (2.0 * a)).value + hurwitz_zeta(p, (a + b) / (2.0 * a)).value);
}

inline double cf_corollary1(double a, double b) {
  const double c = std::cos(detail::pi * b / (2.0 * a));
  return detail::pi * detail::pi / (4.0 * a * a) / (c * c);
}

inline double cf_4_118(double a) {
  if (a == 0.0) {
    return 0.0;
  }
  const double y = detail::pi * a / 2.0;
  double ycoth_m1 = 0.0;
  if (std::abs(y) < 0.05) {
    const double y2 = y * y;
    ycoth_m1 = y2 / 3.0 - y2 * y2 / 45.0 + 2.0 * y2 * y2 * y2 / 945.0 - y2 * y2 * y2 * y2 / 4725.0;
  } else {
    ycoth_m1 = y / std::tanh(y) - 1.0;
  }
  return (detail::pi / 4.0) * 2.0 * ycoth_m1 / std::sinh(y);
}

inline double cf_4_123_1(int m, double a) {
  switch (m) {
    case 1: return std::atan(1.0 / a) - 1.0 / a;
    case 2: return std::atan(2.0 / a) - 2.0 * a / (1.0 + a * a);
    case 3: return std::atan(3.0 / a) - (4.0 + 3.0 * a * a) / (a * (4.0 + a * a));
    case 4: return std::atan(4.0 / a) - 4.0 * a * (5.0 + a * a) / (9.0 + 10.0 * a * a + a * a * a * a);
    default: throw domain_error("4.123.1: multiplier m must be 1..4 (got " + std::to_string(m) + ")");
  }
}

inline double cf_4_123_2(double a) { return a / (1.0 + a * a) - std::atan(1.0 / a); }
inline double cf_4_123_3(double a) {
  return (1.0 + 2.0 * a * a) / (2.0 * a * (1.0 + a * a)) - std::atan(1.0 / a);
}
inline double cf_4_123_4(double a) { return -1.0 / (2.0 * a * (1.0 + a * a)); }

inline double cf_4_123_6(double p, double a, double b) {
  using namespace specfun;
  return gamma(p).value * std::pow(a * a + b * b, -p / 2.0) * std::sin(p * std::atan(a / b)) *
         dirichlet_beta(p).value;
}

inline double cf_4_123_7(double a) { return 0.25 * specfun::theta1_prime0(std::exp(-2.0 * a)).value; }

inline double cf_4_124_1(double p, double q, double u) {
  return 0.5 * detail::pi * specfun::bessel_j0_from_square((p * p - q * q) * u * u).value;
}

/// Form for nu = -1, written so that it stays finite as q -> 0 and on both
/// sides of p = q (J1(w)/w is even in w).
inline double cf_4_124_1_nu_minus1(double p, double q, double u) {
  const double w2 = (p * p - q * q) * u * u;
  const double j0 = specfun::bessel_j0_from_square(w2).value;
  const double j1w = specfun::bessel_j1_over_arg_from_square(w2).value;
  return detail::pi * u * u * (q * q * j0 - (p * p + q * q) * j1w) / (2.0 * (q * q - p * p));
}

inline double cf_3_527_3(double a, double mu) {
  using namespace specfun;
  return 4.0 * std::pow(2.0 * a, -mu) * gamma(mu).value * dirichlet_eta(mu - 1.0).value;
}

inline double cf_4_117_9c(double a) {
  const double e = std::exp(-a);
  const double log_coth_half = std::log1p(e) - std::log1p(-e);
  return -0.5 * detail::pi * e + 2.0 * std::cosh(a) * std::atan(e) + std::sinh(a) * log_coth_half;
}

/// Lemniscatic constant (sqrt(pi)/2) Gamma(1/4) / Gamma(3/4).
inline double lemniscate_varpi() {
  return 0.5 * std::sqrt(detail::pi) * specfun::gamma(0.25).value / specfun::gamma(0.75).value;
}

inline double cf_4_124_2(double a, double beta, double u) {
  if (a * a == beta * beta) {
    throw domain_error("4.124.2: stated value undefined at a^2 = beta^2");
  }
  // J0(u / sqrt(a^2 - beta^2)) through the even series in the squared argument.
  return 0.5 * detail::pi * specfun::bessel_j0_from_square(u * u / (a * a - beta * beta)).value;
}

enum class Convention { printed, derived };

inline const char* to_string(Convention c) { return c == Convention::printed ? "printed" : "derived"; }

/// Series for 3.532.1 with r = (a-b)/(a+b). `printed` uses the last line of
/// the table's derivation, `derived` the line before it. At b = 0 (r = 1) the
/// derived series is the Dirichlet beta function and the printed one is
/// summable only for n > 0.
inline double cf_3_532_1(double n, double a, double b, Convention convention) {
  if (!(n > -1.0)) {
    throw domain_error("3.532.1: violated n > -1");
  }
  if (!(a > 0.0)) {
    throw domain_error("3.532.1: violated a > 0");
  }
  if (!(b >= 0.0)) {
    throw domain_error("3.532.1: violated b >= 0");
  }
  const double r = (a - b) / (a + b);
  const double s = n + 1.0;
  if (convention == Convention::derived) {
    const double lead = 2.0 * specfun::gamma(n + 1.0).value / (a + b);
    if (r == 1.0) {
      return lead * specfun::dirichlet_beta(s).value;
    }
    double sum = 0.0;
    double rm = 1.0;
    for (std::size_t m = 0; m < 100000; ++m) {
      const double term = rm * std::pow(2.0 * static_cast<double>(m) + 1.0, -s);
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) {
        break;
      }
      rm *= -r;
    }
    return lead * sum;
  }
  if (n <= -0.5) {
    throw domain_error("3.532.1 (printed): Gamma(2n+1) needs n > -1/2");
  }
  const double lead = specfun::gamma(2.0 * n + 1.0).value / (a + b);
  if (r == 1.0) {
    if (n <= 0.0) {
      throw divergent_series_error("3.532.1 (printed): sum of (2m+1)^-(n+1) diverges at r = 1 for n <= 0");
    }
    // sum (2m+1)^-s = (1 - 2^-s) zeta(s)
    return lead * -std::expm1(-s * std::numbers::ln2) * specfun::riemann_zeta(s).value;
  }
  double sum = 0.0;
  double rm = 1.0;
  for (std::size_t m = 0; m < 100000; ++m) {
    const double term = rm * std::pow(2.0 * static_cast<double>(m) + 1.0, -s);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      break;
    }
    rm *= r;
  }
  return lead * sum;
}

/// Truncated series for the order-nu extension of 4.124.1:
/// pi sum_{n<=N} q^2n 2^-(n+nu+1) (u/p)^(n-nu) Gamma(n+1/2-nu)/Gamma(n+1/2) J_{n-nu}(pu)/n!.
inline double cf_4_124_1_ext(double p, double q, double u, double nu, int N = 40) {
  if (!(p > 0.0 && u > 0.0 && q >= 0.0)) {
    throw domain_error("4.124.1 extension: need p > 0, q >= 0, u > 0");
  }
  if (!(nu < 0.5)) {
    throw domain_error("4.124.1 extension: Gamma(1/2 - nu) requires nu < 1/2");
  }
  if (nu < -1.0) {
    throw domain_error("4.124.1 extension: nu must be at least -1");
  }
  if (N < 0) {
    throw domain_error("4.124.1 extension: N must be non-negative");
  }
  using specfun::log_gamma;
  double sum = 0.0;
  for (int n = 0; n <= N; ++n) {
    const double nd = n;
    const double log_coef = 2.0 * nd * std::log(q > 0.0 ? q : 1.0) - (nd + nu + 1.0) * std::numbers::ln2 +
                            (nd - nu) * std::log(u / p) + log_gamma(nd + 0.5 - nu).value -
                            log_gamma(nd + 0.5).value - log_gamma(nd + 1.0).value;
    if (q == 0.0 && n > 0) {
      break;
    }
    sum += std::exp(log_coef) * specfun::bessel_j(nd - nu, p * u).value;
  }
  return detail::pi * sum;
}

/// Integrand of the order-nu extension, cos(px) cosh(q sqrt(u^2-x^2)) / (u^2-x^2)^(nu+1/2) on [0, u].
inline std::pair<quad::Integrand, quad::IntervalSpec> integrand_4_124_1_ext(double p, double q, double u, double nu) {
  auto body = [p, q, u, nu](double x, double s2) {
    return std::cos(p * x) * std::cosh(q * std::sqrt(s2)) * std::pow(s2, -(nu + 0.5));
  };
  quad::Integrand f;
  f.eval = [body, u](double x) { return body(x, (u - x) * (u + x)); };
  f.eval_with_complement = [body, u](double x, double xc) {
    return xc > 0.0 ? body(x, xc * (2.0 * u - xc)) : body(x, (u - x) * (u + x));
  };
  return {f, {0.0, u, quad::Shape::endpoint_singular, 0.0, 0.0}};
}

/// sum_{n<=N} z^n zeta(2n, a) / n.
inline double lemma5_lhs(double z, double a, int N) {
  if (!(a > 0.0)) {
    throw domain_error("lemma5: violated a > 0");
  }
  if (!(z >= 0.0 && z < a * a)) {
    throw domain_error("lemma5: violated 0 <= z < a^2");
  }
  // z^n zeta(2n, a) = (z/a^2)^n [1 + a^2n zeta(2n, a+1)], which stays finite
  // where zeta(2n, a) alone overflows for a < 1.
  const double ratio = z / (a * a);
  const double log_a = std::log(a);
  double sum = 0.0;
  double rn = 1.0;
  for (int n = 1; n <= N; ++n) {
    rn *= ratio;
    if (rn == 0.0) {
      break;
    }
    const double s = 2.0 * n;
    double scaled = 1.0;
    const double tail = specfun::hurwitz_zeta(s, a + 1.0).value;
    if (tail > 0.0) {
      scaled += std::exp(s * log_a + std::log(tail));
    }
    sum += rn * scaled / n;
  }
  return sum;
}

/// -2 ln Gamma(a) + ln Gamma(a - sqrt z) + ln Gamma(a + sqrt z).
inline double lemma5_rhs(double z, double a) {
  if (!(a > 0.0)) {
    throw domain_error("lemma5: violated a > 0");
  }
  if (!(z >= 0.0 && z < a * a)) {
    throw domain_error("lemma5: violated 0 <= z < a^2");
  }
  if (z == 0.0) {
    return 0.0;
  }
  using specfun::log_gamma;
  const double r = std::sqrt(z);
  return -2.0 * log_gamma(a).value + log_gamma(a - r).value + log_gamma(a + r).value;
}

namespace detail {

inline void check_4_123_5(double a, double beta, double gamma, int K) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw domain_error("4.123.5: violated 0 < beta < 1");
  }
  if (!(gamma > 0.0)) {
    throw domain_error("4.123.5: violated gamma > 0");
  }
  if (!(a > 0.0)) {
    throw domain_error("4.123.5: violated a > 0");
  }
  if (K < 0) {
    throw domain_error("4.123.5: K must be non-negative");
  }
  for (int k = 0; k <= K; ++k) {
    const double lo = 2.0 * k + 1.0 - beta;
    const double hi = 2.0 * k + 1.0 + beta;
    if (std::abs(gamma - lo) < 0.1 || std::abs(gamma - hi) < 0.1) {
      throw domain_error("4.123.5: gamma within 0.1 of the pole 2k+1" +
                         std::string(std::abs(gamma - lo) < 0.1 ? "-" : "+") + "beta at k=" + std::to_string(k));
    }
  }
}

inline double sum_4_123_5(double a, double beta, double gamma, int K) {
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double lo = 2.0 * k + 1.0 - beta;
    const double hi = 2.0 * k + 1.0 + beta;
    const double term = std::exp(-lo * a) / (gamma * gamma - lo * lo) - std::exp(-hi * a) / (gamma * gamma - hi * hi);
    sum += term;
    if (std::abs(term) < 1e-14 * std::max(std::abs(sum), 1e-300) && k > 0) {
      break;
    }
  }
  return sum;
}

}  // namespace detail

/// Right-hand side of 4.123.5 as stated, with prefactor 1/sinh(beta pi) on
/// the series.
inline double rhs_4_123_5(double a, double beta, double gamma, int K = 200) {
  detail::check_4_123_5(a, beta, gamma, K);
  const double first = detail::pi * std::exp(-a * gamma) /
                       (2.0 * gamma * (std::cos(gamma * detail::pi) + std::cos(beta * detail::pi)));
  return first + detail::sum_4_123_5(a, beta, gamma, K) / std::sinh(beta * detail::pi);
}

/// Same right-hand side with the series prefactor 1/sin(beta pi) obtained
/// from the residues of the integrand; this is the version quadrature agrees with.
inline double rhs_4_123_5_residue(double a, double beta, double gamma, int K = 200) {
  detail::check_4_123_5(a, beta, gamma, K);
  const double first = detail::pi * std::exp(-a * gamma) /
                       (2.0 * gamma * (std::cos(gamma * detail::pi) + std::cos(beta * detail::pi)));
  return first + detail::sum_4_123_5(a, beta, gamma, K) / std::sin(beta * detail::pi);
}

/// Left-hand side integrand of 4.123.5, cos(ax) / ((cosh pi x + cos pi beta)(x^2 + gamma^2)).
inline std::pair<quad::Integrand, quad::IntervalSpec> integrand_4_123_5(double a, double beta, double gamma) {
  quad::Integrand f;
  f.eval = [=](double x) {
    return std::cos(a * x) / (detail::cosh_plus_cos(detail::pi * x, detail::pi * beta) * (x * x + gamma * gamma));
  };
  return {f, {0.0, quad::kInfinity, quad::Shape::decay, 0.0, detail::pi}};
}

/// Convergent reading of 4.124.2 with cos sqrt(beta (x^2 - u^2)) in place of
/// the printed cosh sqrt(beta (u^2 - x^2)); used only for diagnosis.
inline std::pair<quad::Integrand, quad::IntervalSpec> integrand_4_124_2_cos_reading(double a, double beta,
                                                                                     double u) {
  auto body = [a, beta](double x, double s2) {
    const double s = std::sqrt(s2);
    return std::cos(a * x) * std::cos(std::sqrt(beta) * s) / s;
  };
  quad::Integrand f;
  f.eval = [body, u](double x) { return body(x, (x - u) * (x + u)); };
  f.eval_with_complement = [body, u](double x, double xc) {
    return xc < 0.0 ? body(x, -xc * (2.0 * u - xc)) : body(x, (x - u) * (x + u));
  };
  return {f, {u, quad::kInfinity, quad::Shape::oscillatory, detail::pi / a, 0.0}};
}

// ---------------------------------------------------------------------------
// Registry.

namespace detail {

using quad::Integrand;
using quad::IntervalSpec;
using quad::Shape;
using Factory = std::pair<Integrand, IntervalSpec>;

inline Predicate pred(std::string text, std::function<bool(const ParamPoint&)> f) {
  return {std::move(text), std::move(f)};
}

inline IntervalSpec decay(double lambda) { return {0.0, quad::kInfinity, Shape::decay, 0.0, lambda}; }
inline IntervalSpec oscillatory(double lower, double half_period) {
  return {lower, quad::kInfinity, Shape::oscillatory, half_period, 0.0};
}

inline Integrand with_limit(std::function<double(double)> f, double at, double limit) {
  Integrand g;
  g.eval = std::move(f);
  g.removable_points = {at};
  g.limit_values = {limit};
  return g;
}

// Rejection sampling: draw until the entry's own predicates accept.
template <class Draw>
ParamPoint rejection(const std::string& id, const std::vector<Predicate>& preds, Draw draw,
                     std::function<bool(const ParamPoint&)> extra = nullptr) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    ParamPoint pt = draw();
    bool ok = std::all_of(preds.begin(), preds.end(), [&](const Predicate& p) { return p.holds(pt); });
    if (ok && (!extra || extra(pt))) {
      return pt;
    }
  }
  throw domain_error(id + ": sampler found no feasible point");
}

inline std::vector<EntryDescriptor> build_registry() {
  std::vector<EntryDescriptor> r;
  const auto positive = [](const char* name) {
    return pred(std::string(name) + " > 0", [n = std::string(name)](const ParamPoint& p) { return p[n] > 0.0; });
  };

  // L1: Mellin transform of cosh(bx)/sinh(ax).
  {
    EntryDescriptor e;
    e.id = "L1";
    e.params = {"p", "a", "b"};
    e.domain = {pred("p > 1", [](const ParamPoint& p) { return p["p"] > 1.0; }), positive("a"),
                pred("|b| < a", [](const ParamPoint& p) { return std::abs(p["b"]) < p["a"]; })};
    e.formula = "int_0^inf cosh(bx)/sinh(ax) x^(p-1) dx = Gamma(p) (2a)^-p [zeta(p,(a-b)/2a) + zeta(p,(a+b)/2a)]";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double p = pt["p"], a = pt["a"], b = pt["b"];
      Integrand f;
      f.eval = [=](double x) { return cosh_sinh_ratio(b, a, x) * std::pow(x, p - 1.0); };
      return {f, decay(a - std::abs(b))};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_lemma1(pt["p"], pt["a"], pt["b"]); };
    e.sampler = [](const Uniform& u) {
      const double a = log_uniform(u(), 0.2, 5.0);
      return ParamPoint{{"p", uniform(u(), 1.2, 6.0)}, {"a", a}, {"b", a * uniform(u(), -0.8, 0.8)}};
    };
    e.provenance_note = "Mellin transform of cosh(bx)/sinh(ax) in Hurwitz zeta form (geometric series in e^-2ax)";
    r.push_back(std::move(e));
  }
  // C1: the p = 2 case in trigonometric form.
  {
    EntryDescriptor e;
    e.id = "C1";
    e.params = {"a", "b"};
    e.domain = {positive("a"), pred("|b| < a", [](const ParamPoint& p) { return std::abs(p["b"]) < p["a"]; })};
    e.formula = "int_0^inf cosh(bx)/sinh(ax) x dx = (pi^2/4a^2) sec^2(pi b/2a)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], b = pt["b"];
      return {with_limit([=](double x) { return cosh_sinh_ratio(b, a, x) * x; }, 0.0, 1.0 / a),
              decay(a - std::abs(b))};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_corollary1(pt["a"], pt["b"]); };
    e.sampler = [](const Uniform& u) {
      const double a = log_uniform(u(), 0.2, 5.0);
      return ParamPoint{{"a", a}, {"b", a * uniform(u(), -0.8, 0.8)}};
    };
    e.provenance_note = "p = 2 case of L1 via the trigamma reflection formula (table 4.111.6 equivalent)";
    r.push_back(std::move(e));
  }
  // L3a, L3b: Laplace transforms.
  {
    EntryDescriptor e;
    e.id = "L3a";
    e.params = {"a", "b"};
    e.domain = {positive("a")};
    e.formula = "int_0^inf e^-ax sin(bx)/x dx = arctan(b/a)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], b = pt["b"];
      return {with_limit([=](double x) { return std::exp(-a * x) * std::sin(b * x) / x; }, 0.0, b), decay(a)};
    };
    e.closed_form = [](const ParamPoint& pt) { return std::atan(pt["b"] / pt["a"]); };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}, {"b", uniform(u(), -5.0, 5.0)}};
    };
    e.provenance_note = "Laplace transform of sin(bx)/x, integrated in a";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "L3b";
    e.params = {"a", "b"};
    e.domain = {positive("a")};
    e.formula = "int_0^inf e^-ax sin^2(bx)/x dx = (1/4) ln(1 + 4b^2/a^2)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], b = pt["b"];
      return {with_limit([=](double x) { return std::exp(-a * x) * sq(std::sin(b * x)) / x; }, 0.0, 0.0),
              decay(a)};
    };
    e.closed_form = [](const ParamPoint& pt) { return 0.25 * std::log1p(4.0 * sq(pt["b"] / pt["a"])); };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}, {"b", uniform(u(), -5.0, 5.0)}};
    };
    e.provenance_note = "Laplace transform of sin^2(bx)/x, integrated in a";
    r.push_back(std::move(e));
  }
  // L4: sine transform of sech.
  {
    EntryDescriptor e;
    e.id = "L4";
    e.params = {"a", "beta"};
    e.domain = {positive("beta")};
    e.formula = "int_0^inf sin(ax)/cosh(beta x) dx/x = 2 arctan(e^(pi a/2 beta)) - pi/2";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], b = pt["beta"];
      return {with_limit([=](double x) { return std::sin(a * x) * sech(b * x) / x; }, 0.0, a), decay(b)};
    };
    e.closed_form = [](const ParamPoint& pt) { return gudermannian(pi * pt["a"] / (2.0 * pt["beta"])); };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"a", uniform(u(), -5.0, 5.0)}, {"beta", log_uniform(u(), 0.2, 5.0)}};
    };
    e.provenance_note = "termwise arctangent sum of the sech geometric series (table 4.111.7 equivalent)";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.118";
    e.params = {"a"};
    e.domain = {};
    e.formula = "int_0^inf x sin(ax)/cosh^2(x) dx = (pi/4)[-2 + a pi coth(pi a/2)] csch(a pi/2)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"];
      Integrand f;
      f.eval = [=](double x) { return x * std::sin(a * x) * sq(sech(x)); };
      return {f, decay(2.0)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_118(pt["a"]); };
    e.sampler = [](const Uniform& u) { return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}}; };
    e.provenance_note = "a-derivative of the sine transform of sech^2, i.e. -(d/da)[pi a/(2 sinh(pi a/2))]";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.119";
    e.params = {"p", "q"};
    e.domain = {positive("q")};
    e.formula = "int_0^inf (1 - cos px)/sinh(qx) dx/x = ln cosh(p pi/2q)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double p = pt["p"], q = pt["q"];
      return {with_limit([=](double x) { return 2.0 * sq(std::sin(0.5 * p * x)) * cosh_sinh_ratio(0.0, q, x) / x; },
                         0.0, p * p / (2.0 * q)),
              decay(q)};
    };
    e.closed_form = [](const ParamPoint& pt) { return log_cosh(pt["p"] * pi / (2.0 * pt["q"])); };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"p", log_uniform(u(), 0.2, 5.0)}, {"q", log_uniform(u(), 0.2, 5.0)}};
    };
    e.provenance_note = "csch geometric series with the product formula for ln cosh and the Laplace transform of sin^2";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.121.1";
    e.params = {"a", "b", "beta"};
    e.domain = {positive("beta")};
    e.formula = "int_0^inf (sin ax - sin bx)/cosh(beta x) dx/x = 2 arctan[(e^(a pi/2beta) - e^(b pi/2beta))/(1 + e^((a+b) pi/2beta))]";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], b = pt["b"], be = pt["beta"];
      return {with_limit(
                  [=](double x) {
                    return 2.0 * std::cos(0.5 * (a + b) * x) * std::sin(0.5 * (a - b) * x) * sech(be * x) / x;
                  },
                  0.0, a - b),
              decay(be)};
    };
    e.closed_form = [](const ParamPoint& pt) {
      const double k = pi / (2.0 * pt["beta"]);
      return gudermannian(pt["a"] * k) - gudermannian(pt["b"] * k);
    };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"a", uniform(u(), -5.0, 5.0)}, {"b", uniform(u(), -5.0, 5.0)}, {"beta", log_uniform(u(), 0.2, 5.0)}};
    };
    e.provenance_note = "difference of two instances of L4";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.121.2";
    e.params = {"a", "b", "beta"};
    e.domain = {positive("beta")};
    e.formula = "int_0^inf (cos ax - cos bx)/sinh(beta x) dx/x = ln cosh(b pi/2beta) - ln cosh(a pi/2beta)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], b = pt["b"], be = pt["beta"];
      return {with_limit(
                  [=](double x) {
                    return -2.0 * std::sin(0.5 * (a + b) * x) * std::sin(0.5 * (a - b) * x) *
                           cosh_sinh_ratio(0.0, be, x) / x;
                  },
                  0.0, (b * b - a * a) / (2.0 * be)),
              decay(be)};
    };
    e.closed_form = [](const ParamPoint& pt) {
      const double k = pi / (2.0 * pt["beta"]);
      return log_cosh(pt["b"] * k) - log_cosh(pt["a"] * k);
    };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"a", uniform(u(), -5.0, 5.0)}, {"b", uniform(u(), -5.0, 5.0)}, {"beta", log_uniform(u(), 0.2, 5.0)}};
    };
    e.provenance_note = "difference of two instances of 4.119; antisymmetric in (a, b)";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.122.1";
    e.params = {"beta", "gamma", "delta"};
    e.domain = {positive("delta")};
    e.formula = "int_0^inf cos(beta x) sin(gamma x)/cosh(delta x) dx/x = arctan[sinh(gamma pi/2delta)/cosh(beta pi/2delta)]";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double be = pt["beta"], g = pt["gamma"], d = pt["delta"];
      return {with_limit([=](double x) { return std::cos(be * x) * std::sin(g * x) * sech(d * x) / x; }, 0.0, g),
              decay(d)};
    };
    e.closed_form = [](const ParamPoint& pt) {
      const double k = pi / (2.0 * pt["delta"]);
      return std::atan2(std::sinh(pt["gamma"] * k), std::cosh(pt["beta"] * k));
    };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"beta", uniform(u(), -5.0, 5.0)}, {"gamma", uniform(u(), -5.0, 5.0)}, {"delta", log_uniform(u(), 0.2, 5.0)}};
    };
    e.provenance_note = "product-to-sum reduction to 4.121.1";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.122.2";
    e.params = {"a", "beta"};
    e.domain = {pred("|beta| < 1", [](const ParamPoint& p) { return std::abs(p["beta"]) < 1.0; })};
    e.formula = "int_0^inf sin^2(ax) cosh(beta x)/sinh(x) dx/x = (1/4) ln[(cosh 2a pi + cos beta pi)/(1 + cos beta pi)]";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], be = pt["beta"];
      return {with_limit([=](double x) { return sq(std::sin(a * x)) * cosh_sinh_ratio(be, 1.0, x) / x; }, 0.0, a * a),
              decay(1.0 - std::abs(be))};
    };
    e.closed_form = [](const ParamPoint& pt) {
      // (cosh 2a pi + cos beta pi)/(1 + cos beta pi) = 1 + sinh^2(a pi)/cos^2(beta pi/2)
      return 0.25 * std::log1p(sq(std::sinh(pt["a"] * pi) / std::cos(0.5 * pt["beta"] * pi)));
    };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}, {"beta", uniform(u(), -0.8, 0.8)}};
    };
    e.provenance_note = "L3b applied to the csch geometric series; reduces to 4.119 at beta = 0";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "3.981.5";
    e.params = {"a", "beta", "gamma"};
    e.domain = {positive("gamma"), pred("|beta| < gamma", [](const ParamPoint& p) { return std::abs(p["beta"]) < p["gamma"]; })};
    e.formula = "int_0^inf cos(ax) sinh(beta x)/sinh(gamma x) dx = (pi/2gamma) sin(pi beta/gamma)/(cosh(a pi/gamma) + cos(beta pi/gamma))";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], be = pt["beta"], g = pt["gamma"];
      return {with_limit([=](double x) { return std::cos(a * x) * sinh_ratio(be, g, x); }, 0.0, be / g),
              decay(g - std::abs(be))};
    };
    e.closed_form = [](const ParamPoint& pt) {
      const double a = pt["a"], be = pt["beta"], g = pt["gamma"];
      return pi / (2.0 * g) * std::sin(pi * be / g) / (std::cosh(a * pi / g) + std::cos(be * pi / g));
    };
    e.sampler = [](const Uniform& u) {
      const double g = log_uniform(u(), 0.2, 5.0);
      return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}, {"beta", g * uniform(u(), -0.9, 0.9)}, {"gamma", g}};
    };
    e.provenance_note = "cosine transform of sinh(beta x)/sinh(gamma x); integrating in beta gives 4.122.2";
    r.push_back(std::move(e));
  }
  // 4.123.1 and its sin 2x, 3x, 4x companions.
  for (int m = 1; m <= 4; ++m) {
    EntryDescriptor e;
    e.id = m == 1 ? "4.123.1" : "4.123.1-m" + std::to_string(m);
    e.params = {"a"};
    e.domain = {positive("a")};
    const std::string ms = m == 1 ? "" : std::to_string(m);
    e.formula = "int_0^inf sin(" + ms + "x)/(cosh(ax) + cos(" + ms + "x)) x dx/(x^2 - pi^2) = " +
                (m == 1   ? "arctan(1/a) - 1/a"
                 : m == 2 ? "arctan(2/a) - 2a/(1+a^2)"
                 : m == 3 ? "arctan(3/a) - (4+3a^2)/(a(4+a^2))"
                          : "arctan(4/a) - 4a(5+a^2)/(9+10a^2+a^4)");
    e.integrand_factory = [m](const ParamPoint& pt) -> Factory {
      const double a = pt["a"];
      const double sign = m % 2 == 0 ? 1.0 : -1.0;
      return {with_limit([=](double x) { return sin_m_over_pole(m, x) / cosh_plus_cos(a * x, m * x); }, pi,
                         sign * m / (2.0 * (std::cosh(a * pi) + sign))),
              decay(a)};
    };
    e.closed_form = [m](const ParamPoint& pt) { return cf_4_123_1(m, pt["a"]); };
    e.sampler = [](const Uniform& u) { return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}}; };
    e.provenance_note = m == 1 ? "sech-type expansion 1/(cosh ax + cos x) with the csc partial fractions"
                               : "same expansion with sin " + std::to_string(m) + "x";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.123.2";
    e.params = {"a"};
    e.domain = {positive("a")};
    e.formula = "int_0^inf sin(x)/(cosh(ax) - cos(x)) x dx/(x^2 - pi^2) = a/(1+a^2) - arctan(1/a)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"];
      Integrand f;
      f.eval = [=](double x) { return sin_m_over_pole(1, x) / cosh_minus_cos(a * x, x); };
      f.removable_points = {0.0, pi};
      f.limit_values = {-2.0 / (pi * pi * (1.0 + a * a)), -0.5 / (std::cosh(a * pi) + 1.0)};
      return {f, decay(a)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_123_2(pt["a"]); };
    e.sampler = [](const Uniform& u) { return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}}; };
    e.provenance_note = "expansion of 1/(cosh x - cos x) with the cot partial fractions";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.123.3";
    e.params = {"a"};
    e.domain = {positive("a")};
    e.formula = "int_0^inf sin(2x)/(cosh(2ax) - cos(2x)) x dx/(x^2 - pi^2) = (1+2a^2)/(2a(1+a^2)) - arctan(1/a)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"];
      Integrand f;
      f.eval = [=](double x) { return sin_m_over_pole(2, x) / cosh_minus_cos(2.0 * a * x, 2.0 * x); };
      f.removable_points = {0.0, pi};
      f.limit_values = {-1.0 / (pi * pi * (1.0 + a * a)), 1.0 / (2.0 * sq(std::sinh(a * pi)))};
      return {f, decay(2.0 * a)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_123_3(pt["a"]); };
    e.sampler = [](const Uniform& u) { return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}}; };
    e.provenance_note = "equals (4.123.2 - 4.123.1)/2; the factor 1/2 is not stated with the subtraction";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.123.4";
    e.params = {"a"};
    e.domain = {positive("a")};
    e.formula = "int_0^inf cosh(ax) sin(x)/(cosh(2ax) - cos(2x)) x dx/(x^2 - pi^2) = -1/(2a(1+a^2))";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"];
      Integrand f;
      f.eval = [=](double x) {
        return std::cosh(a * x) * sin_m_over_pole(1, x) / cosh_minus_cos(2.0 * a * x, 2.0 * x);
      };
      f.removable_points = {0.0, pi};
      f.limit_values = {-1.0 / (2.0 * pi * pi * (1.0 + a * a)), -std::cosh(a * pi) / (4.0 * sq(std::sinh(a * pi)))};
      return {f, decay(a)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_123_4(pt["a"]); };
    e.sampler = [](const Uniform& u) { return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}}; };
    e.provenance_note =
        "stated as the sum of 4.123.1 and 4.123.2; since cosh^2 - cos^2 = (cosh 2ax - cos 2x)/2 the integral is a "
        "quarter of that sum, half the stated value";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.123.6";
    e.params = {"p", "a", "b"};
    e.domain = {positive("p"), positive("a"), positive("b")};
    e.formula = "int_0^inf sin(ax) sinh(bx)/(cos 2ax + cosh 2bx) x^(p-1) dx = Gamma(p) (a^2+b^2)^(-p/2) sin(p arctan(a/b)) beta(p)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double p = pt["p"], a = pt["a"], b = pt["b"];
      Integrand f;
      f.eval = [=](double x) {
        const double bx = b * x;
        if (bx > 300.0) {
          return 0.0;
        }
        const double s = std::sinh(bx);
        return std::sin(a * x) * s / (2.0 * (s * s + sq(std::cos(a * x)))) * std::pow(x, p - 1.0);
      };
      return {f, decay(b)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_123_6(pt["p"], pt["a"], pt["b"]); };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"p", uniform(u(), 0.3, 6.0)}, {"a", log_uniform(u(), 0.2, 5.0)}, {"b", log_uniform(u(), 0.2, 5.0)}};
    };
    e.provenance_note = "continuation a -> ia of the sinh-sinh Mellin transform; beta(p) = 4^-p[zeta(p,1/4) - zeta(p,3/4)]";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.123.7";
    e.params = {"a"};
    e.domain = {positive("a")};
    e.formula = "int_0^inf sin(ax^2) sin(pi x/2) sinh(pi x/2)/(cos pi x + cosh pi x) x dx = (1/4) theta_1'(0, e^-2a)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"];
      // In t = x^2: (1/2) int_0^inf sin(a t) g(sqrt t) dt.
      Integrand f;
      f.eval = [=](double t) {
        const double y = 0.5 * pi * std::sqrt(t);
        if (y > 300.0) {
          return 0.0;
        }
        const double s = std::sinh(y);
        return 0.5 * std::sin(a * t) * std::sin(y) * s / (2.0 * (s * s + sq(std::cos(y))));
      };
      return {f, oscillatory(0.0, pi / a)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_123_7(pt["a"]); };
    e.sampler = [](const Uniform& u) { return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}}; };
    e.provenance_note =
        "sech partial fractions in the variable sqrt(i) y; integrated in t = x^2. Quadrature gives (1/8) theta_1', "
        "half the stated value";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.124.1";
    e.params = {"p", "q", "u"};
    e.domain = {positive("p"), pred("q >= 0", [](const ParamPoint& p) { return p["q"] >= 0.0; }), positive("u"),
                pred("|p^2 - q^2| u^2 <= 2500", [](const ParamPoint& p) {
                  return std::abs(p["p"] * p["p"] - p["q"] * p["q"]) * p["u"] * p["u"] <= 2500.0;
                })};
    e.formula = "int_0^u cos(px) cosh(q sqrt(u^2-x^2)) dx/sqrt(u^2-x^2) = (pi/2) J0(sqrt(p^2-q^2) u)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      return integrand_4_124_1_ext(pt["p"], pt["q"], pt["u"], 0.0);
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_124_1(pt["p"], pt["q"], pt["u"]); };
    e.sampler = [](const Uniform& u) {
      for (;;) {
        const double uu = log_uniform(u(), 0.2, 5.0);
        const double p = log_uniform(u(), 0.2, 5.0);
        const double q = log_uniform(u(), 0.2, 5.0);
        if (p * uu <= 12.0 && q * uu <= 12.0) {
          return ParamPoint{{"p", p}, {"q", q}, {"u", uu}};
        }
      }
    };
    e.provenance_note =
        "cosh Maclaurin series with the Poisson integral of J_n and the Bessel addition series; for q > p the "
        "closed form is evaluated as (pi/2) I0(sqrt(q^2-p^2) u) through the even series of J0";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.124.1-nu-1";
    e.params = {"p", "q", "u"};
    e.domain = {positive("p"), pred("q >= 0", [](const ParamPoint& p) { return p["q"] >= 0.0; }), positive("u"),
                pred("p != q", [](const ParamPoint& p) { return p["p"] != p["q"]; }),
                pred("|p^2 - q^2| u^2 <= 2500", [](const ParamPoint& p) {
                  return std::abs(p["p"] * p["p"] - p["q"] * p["q"]) * p["u"] * p["u"] <= 2500.0;
                })};
    e.formula =
        "int_0^u cos(px) cosh(q sqrt(u^2-x^2)) sqrt(u^2-x^2) dx = (pi u^2 q^2/(2(q^2-p^2))) [J0(w) - "
        "(p^2+q^2)/(u q^2 sqrt(p^2-q^2)) J1(w)], w = sqrt(p^2-q^2) u";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      return integrand_4_124_1_ext(pt["p"], pt["q"], pt["u"], -1.0);
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_124_1_nu_minus1(pt["p"], pt["q"], pt["u"]); };
    e.sampler = [](const Uniform& u) {
      for (;;) {
        const double uu = log_uniform(u(), 0.2, 5.0);
        const double p = log_uniform(u(), 0.2, 5.0);
        const double q = log_uniform(u(), 0.2, 5.0);
        if (p * uu <= 12.0 && q * uu <= 12.0 && std::abs(p * p - q * q) >= 0.05 * (p * p + q * q)) {
          return ParamPoint{{"p", p}, {"q", q}, {"u", uu}};
        }
      }
    };
    e.provenance_note = "order nu = -1 of the 4.124.1 extension, from one t-derivative of the Bessel addition series";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "3.527.3";
    e.params = {"a", "mu"};
    e.domain = {positive("a"), positive("mu")};
    e.formula = "int_0^inf x^(mu-1)/cosh^2(ax) dx = 4 (2a)^-mu (1 - 2^(2-mu)) Gamma(mu) zeta(mu-1)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], mu = pt["mu"];
      Integrand f;
      f.eval = [=](double x) { return std::pow(x, mu - 1.0) * sq(sech(a * x)); };
      return {f, decay(2.0 * a)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_3_527_3(pt["a"], pt["mu"]); };
    e.sampler = [](const Uniform& u) {
      return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}, {"mu", uniform(u(), 1.2, 6.0)}};
    };
    e.provenance_note =
        "Mellin form of the Dirichlet eta function; (1 - 2^(2-mu)) zeta(mu-1) is evaluated as eta(mu-1), "
        "regular at mu = 2";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.117.9c";
    e.params = {"a"};
    e.domain = {positive("a")};
    e.formula = "int_0^inf sin(ax)/(1+x^2) coth(pi x/4) dx = -(pi/2) e^-a + 2 cosh(a) arctan(e^-a) + sinh(a) ln coth(a/2)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"];
      return {with_limit([=](double x) { return std::sin(a * x) / (std::tanh(0.25 * pi * x) * (1.0 + x * x)); }, 0.0,
                         4.0 * a / pi),
              oscillatory(0.0, pi / a)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_117_9c(pt["a"]); };
    e.sampler = [](const Uniform& u) { return ParamPoint{{"a", log_uniform(u(), 0.2, 5.0)}}; };
    e.provenance_note = "complementary (sine) integral to table entry 4.117.9; tends to 0 as a -> 0";
    r.push_back(std::move(e));
  }
  // Constants built from summatory properties of the lemniscatic Hurwitz numbers.
  {
    EntryDescriptor e;
    e.id = "HW1";
    e.formula = "(1/2) int_0^inf (cos t + 1)/(cosh t - cos t) [sinh(t/2) - sin(t/2)] dt = 1 - pi/4";
    e.integrand_factory = [](const ParamPoint&) -> Factory {
      return {with_limit([](double t) { return 0.5 * (std::cos(t) + 1.0) / cosh_minus_cos(t, t) * sinh_minus_sin(0.5 * t); },
                         0.0, 0.0),
              decay(0.5)};
    };
    e.closed_form = [](const ParamPoint&) { return 1.0 - pi / 4.0; };
    e.sampler = [](const Uniform&) { return ParamPoint{}; };
    e.flags = {Flag::constant_entry};
    e.provenance_note = "lemniscatic Hurwitz-number summation, first example";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "HW2";
    e.formula = "int_0^inf (cos t + 1) t^2/(cosh t - cos t) [sinh(t/2) + sin(t/2)] dt = 16";
    e.integrand_factory = [](const ParamPoint&) -> Factory {
      return {with_limit(
                  [](double t) {
                    return (std::cos(t) + 1.0) * t * t / cosh_minus_cos(t, t) * (std::sinh(0.5 * t) + std::sin(0.5 * t));
                  },
                  0.0, 0.0),
              decay(0.5)};
    };
    e.closed_form = [](const ParamPoint&) { return 16.0; };
    e.sampler = [](const Uniform&) { return ParamPoint{}; };
    e.flags = {Flag::constant_entry};
    e.provenance_note = "lemniscatic Hurwitz-number summation, second example";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "HW3";
    e.formula = "int_0^inf (cos t + 1) t/(cosh t - cos t) [cosh(t/2) - cos(t/2)] dt = varpi^2 - 4, varpi = (sqrt(pi)/2) Gamma(1/4)/Gamma(3/4)";
    e.integrand_factory = [](const ParamPoint&) -> Factory {
      return {with_limit(
                  [](double t) {
                    return (std::cos(t) + 1.0) * t / cosh_minus_cos(t, t) * cosh_minus_cos(0.5 * t, 0.5 * t);
                  },
                  0.0, 0.0),
              decay(0.5)};
    };
    e.closed_form = [](const ParamPoint&) { return sq(lemniscate_varpi()) - 4.0; };
    e.sampler = [](const Uniform&) { return ParamPoint{}; };
    e.flags = {Flag::constant_entry};
    e.provenance_note = "lemniscatic Hurwitz-number summation, third example; involves the real period varpi";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "4.124.2";
    e.params = {"a", "beta", "u"};
    // No relation between a and beta is stated; the closed form itself rejects a = beta.
    e.domain = {positive("a"), positive("beta"), positive("u")};
    e.formula = "int_u^inf cos(ax) cosh(sqrt(beta(u^2-x^2))) dx/sqrt(u^2-x^2) = (pi/2) J0(u/sqrt(a^2-beta^2))";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double a = pt["a"], be = pt["beta"], u = pt["u"];
      // As printed: for x > u both square roots have negative arguments.
      Integrand f;
      f.eval = [=](double x) {
        const double s2 = (u - x) * (u + x);
        return std::cos(a * x) * std::cosh(std::sqrt(be * s2)) / std::sqrt(s2);
      };
      return {f, oscillatory(u, pi / a)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_4_124_2(pt["a"], pt["beta"], pt["u"]); };
    e.sampler = [](const Uniform& u) {
      for (;;) {
        const double a = log_uniform(u(), 0.2, 5.0);
        const double be = log_uniform(u(), 0.2, 5.0);
        const double uu = log_uniform(u(), 0.2, 5.0);
        const double d = std::abs(a * a - be * be);
        if (d >= 0.05 * (a * a + be * be) && uu * uu <= 2500.0 * d) {
          return ParamPoint{{"a", a}, {"beta", be}, {"u", uu}};
        }
      }
    };
    e.flags = {Flag::suspect};
    e.provenance_note = "suspect entry: integrand undefined on (u, inf) as printed; no relation between a and beta stated";
    e.diagnostic_note =
        "integrand is complex for all x > u as written; a convergent variant uses cos sqrt(beta (x^2 - u^2)); "
        "the right-hand side has the shape of the 4.124.1 cosine transform, so the source citations of "
        "4.124.1 and 4.124.2 are likely interchanged";
    r.push_back(std::move(e));
  }
  {
    EntryDescriptor e;
    e.id = "3.532.1";
    e.params = {"n", "a", "b"};
    e.domain = {pred("n > -1", [](const ParamPoint& p) { return p["n"] > -1.0; }), positive("a"), positive("b")};
    e.formula =
        "int_0^inf x^n/(a cosh x + b sinh x) dx; printed: Gamma(2n+1)/(a+b) sum_m r^m/(2m+1)^(n+1); derived: "
        "2 Gamma(n+1)/(a+b) sum_m (-r)^m/(2m+1)^(n+1); r = (a-b)/(a+b)";
    e.integrand_factory = [](const ParamPoint& pt) -> Factory {
      const double n = pt["n"], a = pt["a"], b = pt["b"];
      Integrand f;
      f.eval = [=](double x) {
        const double e2 = std::exp(-2.0 * x);
        return 2.0 * std::pow(x, n) * std::exp(-x) / ((a + b) + (a - b) * e2);
      };
      return {f, decay(1.0)};
    };
    e.closed_form = [](const ParamPoint& pt) { return cf_3_532_1(pt["n"], pt["a"], pt["b"], Convention::derived); };
    e.sampler = [](const Uniform& u) {
      for (;;) {
        const double n = uniform(u(), -0.5, 5.0);
        const double a = log_uniform(u(), 0.2, 5.0);
        const double b = u() < 0.5 ? a : log_uniform(u(), 0.2, 5.0);
        // Keep away from the orders where Gamma(2n+1) = 2 Gamma(n+1) and both conventions agree at r = 0.
        if (n <= -0.45) {
          continue;
        }
        const double ratio = specfun::gamma(2.0 * n + 1.0).value / (2.0 * specfun::gamma(n + 1.0).value);
        if (std::abs(ratio - 1.0) >= 0.05) {
          return ParamPoint{{"n", n}, {"a", a}, {"b", b}};
        }
      }
    };
    e.flags = {Flag::dual_convention};
    e.provenance_note =
        "geometric expansion of 1/(a cosh x + b sinh x); the final printed line disagrees with the line before it "
        "by Gamma(2n+1)/(2 Gamma(n+1)) and drops the alternating sign";
    r.push_back(std::move(e));
  }
  return r;
}

}  // namespace detail

/// The immutable registry, built on first use.
inline const std::vector<EntryDescriptor>& registry() {
  static const std::vector<EntryDescriptor> entries = detail::build_registry();
  return entries;
}

inline const EntryDescriptor& find_entry(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.id == id) {
      return e;
    }
  }
  throw lookup_error("unknown entry '" + id + "'");
}

inline double closed_form(const std::string& id, const ParamPoint& params) {
  const auto& e = find_entry(id);
  e.check(params);
  return e.closed_form(params);
}

inline std::pair<quad::Integrand, quad::IntervalSpec> integrand(const std::string& id, const ParamPoint& params) {
  const auto& e = find_entry(id);
  e.check(params);
  return e.integrand_factory(params);
}

struct EntrySummary {
  std::string id;
  std::vector<Flag> flags;
  std::string provenance_note;
};

inline std::vector<EntrySummary> list_entries() {
  std::vector<EntrySummary> out;
  for (const auto& e : registry()) {
    out.push_back({e.id, e.flags, e.provenance_note});
  }
  return out;
}

}  // namespace hyptrig::catalog
