#pragma once

// Quadrature for the three integral shapes met in the catalog: finite
// intervals (adaptive Gauss-Kronrod), endpoint singularities (tanh-sinh),
// exponentially damped half-lines, and oscillatory half-lines summed panel by
// panel with Euler acceleration.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyptrig/accel.hpp"
#include "hyptrig/errors.hpp"

namespace hyptrig::quad {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr std::size_t kMaxEvaluations = 2'000'000;
inline constexpr double kPanelEps = std::numeric_limits<double>::epsilon();

enum class Shape { decay, oscillatory, endpoint_singular, plain };
enum class QuadStatus { converged, max_effort, suspected_divergent };

inline const char* to_string(Shape s) {
  switch (s) {
    case Shape::decay: return "decay";
    case Shape::oscillatory: return "oscillatory";
    case Shape::endpoint_singular: return "endpoint_singular";
    case Shape::plain: return "plain";
  }
  return "?";
}

inline const char* to_string(QuadStatus s) {
  switch (s) {
    case QuadStatus::converged: return "converged";
    case QuadStatus::max_effort: return "max_effort";
    case QuadStatus::suspected_divergent: return "suspected_divergent";
  }
  return "?";
}

/// An integrand together with its removable points. A removable point with
/// no limit value is evaluated as the average of the two neighbours at a
/// symmetric offset.
///
/// `eval_with_complement`, when set, is preferred by the tanh-sinh rule. It
/// receives (x, xc) where xc = a - x (<= 0) on the lower half of [a, b] and
/// xc = b - x (> 0) on the upper half, so that the distance to the nearer
/// endpoint is available without cancellation.
struct Integrand {
  std::function<double(double)> eval;
  std::vector<double> removable_points;
  std::vector<std::optional<double>> limit_values;
  std::function<double(double, double)> eval_with_complement;

  void validate() const {
    if (!eval) {
      throw domain_error("Integrand: eval is empty");
    }
    if (!limit_values.empty() && limit_values.size() != removable_points.size()) {
      throw domain_error("Integrand: limit_values must match removable_points");
    }
    if (!std::is_sorted(removable_points.begin(), removable_points.end())) {
      throw domain_error("Integrand: removable_points must be sorted ascending");
    }
  }

  std::optional<double> limit_at(std::size_t i) const {
    return i < limit_values.size() ? limit_values[i] : std::nullopt;
  }
};

struct IntervalSpec {
  double lower = 0.0;
  double upper = kInfinity;
  Shape shape = Shape::plain;
  double period_hint = 0.0;
  double decay_hint = 0.0;

  void validate() const {
    if (!(lower < upper) || !std::isfinite(lower)) {
      throw domain_error("IntervalSpec: need finite lower < upper");
    }
    if (shape == Shape::oscillatory && !(period_hint > 0.0)) {
      throw domain_error("IntervalSpec: oscillatory shape needs period_hint > 0");
    }
    if (shape == Shape::decay && !(decay_hint > 0.0)) {
      throw domain_error("IntervalSpec: decay shape needs decay_hint > 0");
    }
    const bool infinite = std::isinf(upper);
    if ((shape == Shape::plain || shape == Shape::endpoint_singular) && infinite) {
      throw domain_error("IntervalSpec: finite shapes need a finite upper limit");
    }
    if ((shape == Shape::decay || shape == Shape::oscillatory) && !infinite) {
      throw domain_error("IntervalSpec: half-line shapes need upper = +infinity");
    }
  }
};

/// Requested accuracy. A result is converged when its error estimate is at
/// most max(abs, rel * L1) with L1 the integral of |f|.
struct Tolerance {
  double abs = 0.0;
  double rel = 0.0;

  Tolerance() = default;
  Tolerance(double absolute) : abs(absolute) {}  // NOLINT(google-explicit-constructor)
  Tolerance(double absolute, double relative) : abs(absolute), rel(relative) {}

  double target(double l1) const { return std::max(abs, rel * l1); }

  void validate() const {
    if (!(abs >= 0.0 && rel >= 0.0) || (abs == 0.0 && rel == 0.0)) {
      throw domain_error("Tolerance: need abs >= 0, rel >= 0, not both zero");
    }
  }
};

struct QuadResult {
  double value = 0.0;
  double abs_error_est = 0.0;
  std::size_t evaluations = 0;
  QuadStatus status = QuadStatus::converged;
  double l1_norm = 0.0;
  std::string note;
};

namespace detail {

// Kronrod 21-point nodes (non-negative half) and weights; the embedded
// 10-point Gauss rule uses the odd-indexed nodes.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980630481, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Evaluation wrapper shared by the rules: counts calls, substitutes limits
// near removable points and records non-finite values.
class Evaluator {
 public:
  Evaluator(const Integrand& f, double a, double b, std::size_t budget)
      : f_(f), offset_(1e-7 * (b - a)), budget_(budget) {}

  double operator()(double x) { return dispatch(x, std::nullopt); }
  double operator()(double x, double xc) { return dispatch(x, xc); }

  std::size_t count() const { return count_; }
  bool exhausted() const { return count_ >= budget_; }
  bool saw_non_finite() const { return non_finite_; }
  double non_finite_at() const { return non_finite_x_; }

 private:
  double dispatch(double x, std::optional<double> xc) {
    for (std::size_t i = 0; i < f_.removable_points.size(); ++i) {
      const double r = f_.removable_points[i];
      if (std::abs(x - r) <= offset_) {
        if (const auto lim = f_.limit_at(i)) {
          return *lim;
        }
        const double lo = raw(r - offset_, std::nullopt, false);
        const double hi = raw(r + offset_, std::nullopt, false);
        if (std::isfinite(lo) && std::isfinite(hi)) {
          return 0.5 * (lo + hi);
        }
        return record(std::isfinite(lo) ? lo : hi, x);
      }
    }
    return raw(x, xc, true);
  }

  double raw(double x, std::optional<double> xc, bool check) {
    ++count_;
    const double v = (xc && f_.eval_with_complement) ? f_.eval_with_complement(x, *xc) : f_.eval(x);
    return check ? record(v, x) : v;
  }

  double record(double v, double x) {
    if (!std::isfinite(v) && !non_finite_) {
      non_finite_ = true;
      non_finite_x_ = x;
    }
    return v;
  }

  const Integrand& f_;
  double offset_;
  std::size_t budget_;
  std::size_t count_ = 0;
  bool non_finite_ = false;
  double non_finite_x_ = 0.0;
};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  bool final = false;

  bool operator<(const Segment& other) const { return error < other.error; }
};

inline Segment gauss_kronrod(Evaluator& ev, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = ev(c);
  double kron = kWgk[10] * fc;
  double gauss = 0.0;
  double l1 = kWgk[10] * std::abs(fc);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = ev(c - dx);
    const double f2 = ev(c + dx);
    kron += kWgk[j] * (f1 + f2);
    l1 += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * (f1 + f2);
    }
  }
  Segment s;
  s.a = a;
  s.b = b;
  s.value = kron * h;
  s.l1 = l1 * std::abs(h);
  const double roundoff = 50.0 * kEps * s.l1;
  s.error = std::max(std::abs((kron - gauss) * h), roundoff);
  const double width_floor = 8.0 * kEps * std::max(std::abs(a), std::abs(b));
  s.final = (std::abs((kron - gauss) * h) <= roundoff) || (b - a) <= width_floor;
  return s;
}

inline QuadResult divergent_result(const Evaluator& ev, double value, double l1, const std::string& where) {
  QuadResult r;
  r.value = value;
  r.abs_error_est = kInfinity;
  r.evaluations = ev.count();
  r.status = QuadStatus::suspected_divergent;
  r.l1_norm = l1;
  r.note = "non-finite integrand value at x=" + std::to_string(ev.non_finite_at()) + where;
  return r;
}

inline QuadResult finite_impl(const Integrand& f, double a, double b, const Tolerance& tol,
                              std::size_t budget) {
  Evaluator ev(f, a, b, budget);
  std::vector<double> cuts{a};
  for (double r : f.removable_points) {
    if (r > a && r < b) {
      cuts.push_back(r);
    }
  }
  cuts.push_back(b);

  std::priority_queue<Segment> open;
  std::vector<Segment> closed;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Segment s = gauss_kronrod(ev, cuts[i], cuts[i + 1]);
    if (s.final) {
      closed.push_back(s);
    } else {
      open.push(s);
    }
  }

  auto totals = [&]() {
    double v = 0.0;
    double e = 0.0;
    double l = 0.0;
    std::priority_queue<Segment> copy = open;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      l += copy.top().l1;
      copy.pop();
    }
    for (const auto& s : closed) {
      v += s.value;
      e += s.error;
      l += s.l1;
    }
    return std::array<double, 3>{v, e, l};
  };

  // Running sums, refreshed from scratch periodically to limit drift.
  auto [value, error, l1] = totals();
  std::size_t splits = 0;
  for (;;) {
    if (ev.saw_non_finite()) {
      return divergent_result(ev, value, l1, "");
    }
    if (error <= tol.target(l1)) {
      break;
    }
    if (open.empty() || ev.count() + 42 > budget) {
      QuadResult r{value, error, ev.count(), QuadStatus::max_effort, l1, ""};
      r.note = open.empty() ? "roundoff limit reached before tolerance"
                            : "evaluation budget exhausted";
      return r;
    }
    const Segment worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod(ev, worst.a, mid);
    const Segment right = gauss_kronrod(ev, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    for (const Segment& s : {left, right}) {
      if (s.final) {
        closed.push_back(s);
      } else {
        open.push(s);
      }
    }
    if (++splits % 256 == 0) {
      const auto t = totals();
      value = t[0];
      error = t[1];
      l1 = t[2];
    }
  }
  const auto t = totals();
  QuadResult r{t[0], t[1], ev.count(), QuadStatus::converged, t[2], ""};
  if (r.abs_error_est > tol.target(r.l1_norm)) {
    r.status = QuadStatus::max_effort;
    r.note = "error estimate drifted above tolerance";
  }
  return r;
}

inline QuadResult tanh_sinh_impl(const Integrand& f, double a, double b, const Tolerance& tol,
                                 std::size_t budget, std::size_t max_level = 12) {
  Evaluator ev(f, a, b, budget);
  const double h = 0.5 * (b - a);
  const bool complement = static_cast<bool>(f.eval_with_complement);
  const double half_pi = 0.5 * std::numbers::pi;

  // Largest |t| per side: stop where the distance to the endpoint would fall
  // below what the abscissa (or its complement) can still resolve.
  auto t_limit = [&](double endpoint) {
    const double dmin = complement ? 1e-300 : std::max(1e-300, 4.0 * kEps * std::abs(endpoint));
    const double u = 0.5 * std::log(2.0 * h / dmin);
    return u > 0.0 ? std::asinh(u / half_pi) : 0.0;
  };
  const double t_lo = t_limit(a);
  const double t_hi = t_limit(b);

  double sum = 0.0;
  double sum_abs = 0.0;
  auto node = [&](double t) {
    const double u = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    const double dist = h * 2.0 * e / (1.0 + e);
    const double w = h * half_pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    double fx = 0.0;
    if (t < 0.0) {
      fx = ev(a + dist, -dist);
    } else if (t > 0.0) {
      fx = ev(b - dist, dist);
    } else {
      fx = ev(a + h);
    }
    sum += w * fx;
    sum_abs += w * std::abs(fx);
  };

  node(0.0);
  for (double t = 1.0; t <= t_lo; t += 1.0) node(-t);
  for (double t = 1.0; t <= t_hi; t += 1.0) node(t);
  double step = 1.0;
  double previous = sum * step;
  double diff = kInfinity;
  for (std::size_t level = 1; level <= max_level; ++level) {
    step *= 0.5;
    for (double t = step; t <= std::max(t_lo, t_hi); t += 2.0 * step) {
      if (t <= t_lo) node(-t);
      if (t <= t_hi) node(t);
    }
    if (ev.saw_non_finite()) {
      return divergent_result(ev, sum * step, sum_abs * step, " (tanh-sinh)");
    }
    const double current = sum * step;
    const double l1 = sum_abs * step;
    diff = std::abs(current - previous);
    const double err = std::max(diff, 20.0 * kEps * l1);
    if (level >= 3 && err <= tol.target(l1)) {
      return {current, err, ev.count(), QuadStatus::converged, l1, ""};
    }
    if (ev.exhausted()) {
      break;
    }
    previous = current;
  }
  QuadResult r{sum * step, std::max(diff, 20.0 * kEps * sum_abs * step), ev.count(),
               QuadStatus::max_effort, sum_abs * step, "tanh-sinh levels exhausted"};
  return r;
}

inline double sample_max_abs(const Integrand& f, double lo, double hi, std::size_t n,
                             std::size_t& evaluations, bool& non_finite) {
  Evaluator ev(f, lo, hi, n + 4);
  double m = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    const double v = ev(x);
    if (!std::isfinite(v)) {
      non_finite = true;
    } else {
      m = std::max(m, std::abs(v));
    }
  }
  evaluations += ev.count();
  return m;
}

inline void accumulate(QuadResult& into, const QuadResult& part) {
  into.value += part.value;
  into.abs_error_est += part.abs_error_est;
  into.evaluations += part.evaluations;
  into.l1_norm += part.l1_norm;
}

inline QuadResult fail_with(QuadResult acc, const QuadResult& part) {
  acc.evaluations += part.evaluations;
  acc.status = part.status;
  acc.note = part.note;
  if (part.status == QuadStatus::suspected_divergent) {
    acc.abs_error_est = kInfinity;
  }
  return acc;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (10/21) quadrature on a finite interval. The
/// interval is cut at every removable point before refinement starts.
inline QuadResult integrate_finite(const Integrand& f, double a, double b, const Tolerance& tol) {
  f.validate();
  tol.validate();
  if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
    throw domain_error("integrate_finite: need finite a < b");
  }
  return detail::finite_impl(f, a, b, tol, kMaxEvaluations);
}

/// Tanh-sinh quadrature on [a, b]; the step is halved until two successive
/// levels agree within the tolerance.
inline QuadResult integrate_endpoint_singular(const Integrand& f, double a, double b, const Tolerance& tol) {
  f.validate();
  tol.validate();
  if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
    throw domain_error("integrate_endpoint_singular: need finite a < b");
  }
  return detail::tanh_sinh_impl(f, a, b, tol, kMaxEvaluations);
}

/// Integral over [a, inf) of an exponentially damped integrand. A short first
/// panel is handled by tanh-sinh (to absorb integrable endpoint behaviour),
/// then panels of width 1/decay_hint are added until a sampled envelope
/// bound on the tail drops below a tenth of the tolerance. The stopping point
/// T is confirmed by integrating [T, 2T - a].
inline QuadResult integrate_decay(const Integrand& f, double a, const Tolerance& tol, double decay_hint) {
  f.validate();
  tol.validate();
  if (!std::isfinite(a)) {
    throw domain_error("integrate_decay: lower limit must be finite");
  }
  if (!(decay_hint > 0.0)) {
    throw domain_error("integrate_decay: decay_hint must be positive");
  }
  const double width = 1.0 / decay_hint;
  // The relative floor keeps panels attainable when their own L1 dwarfs the
  // running total, which is what happens on a growing (divergent) integrand.
  const Tolerance panel_tol{0.1 * tol.abs, std::max(0.5 * tol.rel, 100.0 * kPanelEps)};
  QuadResult acc;

  double t = a + std::min(1.0, width);
  {
    const QuadResult first = detail::tanh_sinh_impl(f, a, t, panel_tol, kMaxEvaluations);
    if (first.status != QuadStatus::converged) {
      return detail::fail_with(acc, first);
    }
    detail::accumulate(acc, first);
  }

  const std::size_t max_panels = 20000;
  bool tail_small = false;
  // Doubling checkpoints: at 64, 128, 256, ... panels the newest window must
  // carry much less mass than everything before it.
  std::size_t checkpoint = 64;
  double l1_at_checkpoint = 0.0;
  for (std::size_t panel = 0; panel < max_panels; ++panel) {
    if (panel == checkpoint) {
      const double window = acc.l1_norm - l1_at_checkpoint;
      if (l1_at_checkpoint > 0.0 && window >= 0.1 * l1_at_checkpoint) {
        acc.status = QuadStatus::suspected_divergent;
        acc.abs_error_est = kInfinity;
        acc.note = "tail did not shrink between T=" + std::to_string(a + 0.5 * (t - a)) + " and 2T";
        return acc;
      }
      l1_at_checkpoint = acc.l1_norm;
      checkpoint *= 2;
    }
    bool non_finite = false;
    const double envelope = detail::sample_max_abs(f, t, t + width, 32, acc.evaluations, non_finite);
    const double tail_bound = 1.6 * envelope * width;
    if (!non_finite && tail_bound <= 0.1 * tol.target(acc.l1_norm)) {
      tail_small = true;
      break;
    }
    if (acc.evaluations > kMaxEvaluations) {
      break;
    }
    const QuadResult part =
        detail::finite_impl(f, t, t + width, panel_tol, kMaxEvaluations - std::min(acc.evaluations, kMaxEvaluations));
    if (part.status != QuadStatus::converged) {
      return detail::fail_with(acc, part);
    }
    detail::accumulate(acc, part);
    t += width;
  }

  const QuadResult confirm = detail::finite_impl(f, t, t + (t - a), panel_tol, kMaxEvaluations);
  if (confirm.status == QuadStatus::suspected_divergent) {
    return detail::fail_with(acc, confirm);
  }
  const double target = tol.target(acc.l1_norm);
  if (!tail_small && confirm.l1_norm >= 0.1 * acc.l1_norm) {
    acc.evaluations += confirm.evaluations;
    acc.status = QuadStatus::suspected_divergent;
    acc.abs_error_est = kInfinity;
    acc.note = "tail did not shrink between T=" + std::to_string(t) + " and 2T";
    return acc;
  }
  detail::accumulate(acc, confirm);
  if (std::abs(confirm.value) > target) {
    acc.abs_error_est += std::abs(confirm.value);
  }
  acc.status = acc.abs_error_est <= tol.target(acc.l1_norm) ? QuadStatus::converged : QuadStatus::max_effort;
  if (acc.status == QuadStatus::max_effort) {
    acc.note = tail_small ? "tail larger than tolerance after confirmation" : "panel limit reached";
  }
  return acc;
}

/// Integral over [a, inf) of an oscillatory integrand. Panels end at the
/// multiples of period_hint (a half period of the oscillation); the partial
/// sums are accelerated with the Euler transform and accepted once the
/// estimates from n-1 and n panels, and from n-2 and n panels, agree.
///
/// Reports suspected_divergent when panel magnitudes grow for 8 consecutive
/// panels, when 8 consecutive panels share a sign without geometric decay, or
/// when the integrand is not finite.
inline QuadResult integrate_oscillatory(const Integrand& f, double a, const Tolerance& tol, double period_hint) {
  f.validate();
  tol.validate();
  if (!std::isfinite(a)) {
    throw domain_error("integrate_oscillatory: lower limit must be finite");
  }
  if (!(period_hint > 0.0)) {
    throw domain_error("integrate_oscillatory: period_hint must be positive");
  }
  QuadResult acc;
  double k = std::floor(a / period_hint) + 1.0;
  double edge = k * period_hint;
  if (edge - a < 1e-9 * period_hint) {
    edge += period_hint;
    k += 1.0;
  }

  const QuadResult first = detail::tanh_sinh_impl(f, a, edge, Tolerance{0.1 * tol.abs, 0.1 * tol.rel},
                                                  kMaxEvaluations);
  if (first.status != QuadStatus::converged) {
    return detail::fail_with(acc, first);
  }
  detail::accumulate(acc, first);
  const double l1_first = std::max(first.l1_norm, std::numeric_limits<double>::min());
  const Tolerance panel_tol{std::max(tol.abs, tol.rel * l1_first) * 1e-3, 100.0 * kPanelEps};

  std::vector<double> sums{first.value};
  std::vector<double> contributions{first.value};
  std::size_t growth_run = 0;
  std::size_t same_sign_run = 0;
  const std::size_t max_panels = 5000;
  const std::size_t min_panels = 12;

  for (std::size_t n = 1; n < max_panels; ++n) {
    const double lo = edge;
    const double hi = (k + static_cast<double>(n)) * period_hint;
    edge = hi;
    const QuadResult part = detail::finite_impl(f, lo, hi, panel_tol, kMaxEvaluations);
    if (part.status != QuadStatus::converged) {
      return detail::fail_with(acc, part);
    }
    detail::accumulate(acc, part);
    const double c = part.value;
    const double prev = contributions.back();
    contributions.push_back(c);
    sums.push_back(sums.back() + c);

    growth_run = std::abs(c) > std::abs(prev) ? growth_run + 1 : 0;
    const bool same_sign = (c > 0.0 && prev > 0.0) || (c < 0.0 && prev < 0.0);
    same_sign_run = (same_sign && std::abs(c) > 0.7 * std::abs(prev)) ? same_sign_run + 1 : 0;
    if (growth_run >= 8 || same_sign_run >= 8) {
      acc.value = sums.back();
      acc.status = QuadStatus::suspected_divergent;
      acc.abs_error_est = kInfinity;
      acc.note = growth_run >= 8 ? "panel contributions grew for 8 consecutive half periods"
                                 : "8 consecutive same-sign half-period contributions without geometric decay";
      return acc;
    }
    if (acc.evaluations > kMaxEvaluations) {
      break;
    }

    const double target = tol.target(acc.l1_norm);
    const std::size_t m = sums.size();
    // Plainly convergent: the last few panels are already negligible.
    if (m >= 4) {
      const double recent = std::abs(contributions[m - 1]) + std::abs(contributions[m - 2]);
      if (recent <= 1e-3 * target) {
        acc.value = sums.back();
        acc.abs_error_est += recent;
        acc.status = acc.abs_error_est <= target ? QuadStatus::converged : QuadStatus::max_effort;
        return acc;
      }
    }
    if (m < min_panels) {
      continue;
    }
    const std::span<const double> all(sums);
    const double e0 = euler_transform(all, default_euler_depth(m));
    const double e1 = euler_transform(all.first(m - 1), default_euler_depth(m - 1));
    const double e2 = euler_transform(all.first(m - 2), default_euler_depth(m - 2));
    const double spread = std::max(std::abs(e0 - e1), std::abs(e0 - e2));
    if (spread + acc.abs_error_est <= target) {
      acc.value = e0;
      acc.abs_error_est += spread;
      return acc;
    }
  }
  acc.value = sums.back();
  acc.status = QuadStatus::max_effort;
  acc.note = "panel acceleration did not settle";
  return acc;
}

/// Dispatch on the interval shape.
inline QuadResult integrate(const Integrand& f, const IntervalSpec& spec, const Tolerance& tol) {
  spec.validate();
  switch (spec.shape) {
    case Shape::plain: return integrate_finite(f, spec.lower, spec.upper, tol);
    case Shape::endpoint_singular: return integrate_endpoint_singular(f, spec.lower, spec.upper, tol);
    case Shape::decay: return integrate_decay(f, spec.lower, tol, spec.decay_hint);
    case Shape::oscillatory: return integrate_oscillatory(f, spec.lower, tol, spec.period_hint);
  }
  throw domain_error("integrate: unknown shape");
}

}  // namespace hyptrig::quad
