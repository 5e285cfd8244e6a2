#include "tailbound/reflection.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tailbound/quadrature.hpp"

namespace tailbound {

namespace {

constexpr double kFixedPointBand = 1e-8;
constexpr int kMaxIter = 200;
constexpr double kQuadTol = 1e-12;

void require_point(const Point01& x, const char* who) {
  if (!(x.value >= 0.0 && x.value <= 1.0) || !(x.complement >= 0.0 && x.complement <= 1.0)) {
    throw std::domain_error(std::string(who) + ": x must lie in [0,1], got " + std::to_string(x.value));
  }
}

void require_interior(const Point01& x, const char* who) {
  require_point(x, who);
  if (x.value == 0.0 || x.complement == 0.0) {
    throw std::domain_error(std::string(who) + ": x must lie in (0,1)");
  }
}

// Root in v = log s of q v + (1-q) log1p(-e^v) = target on s in (0, q].
double solve_log_side(double q, double target, double guess) {
  double lo = target / q - 1.0;
  double hi = std::log(q);
  double v = std::isfinite(guess) ? std::fmin(std::fmax(guess, lo), hi) : 0.5 * (lo + hi);
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const double s = std::exp(v);
    const double g = q * v + (1.0 - q) * std::log1p(-s) - target;
    if (g == 0.0) return v;
    if (g > 0.0) {
      hi = v;
    } else {
      lo = v;
    }
    const double dg = q - (1.0 - q) * s / (1.0 - s);
    double next = v - g / dg;
    if (!(dg > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - v);
    v = next;
    if (step <= 2e-16 * std::fmax(1.0, std::fabs(v))) break;
    if (hi - lo <= 4e-16 * std::fmax(1.0, std::fmax(std::fabs(lo), std::fabs(hi)))) break;
  }
  return v;
}

double log_neg_derivative(const Point01& x, const Reflection& r, double delta) {
  if (std::fabs(delta) < kFixedPointBand) return 0.0;
  return std::log(std::fabs(delta)) - std::log(std::fabs(r.offset)) + r.log_value + r.log_complement -
         std::log(x.value) - std::log(x.complement);
}

}  // namespace

ReflectionMap::ReflectionMap(double p) : p_(p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("ReflectionMap: p must lie in (0,1), got " + std::to_string(p));
  series_radius_ = 1e-2 * std::fmin(p, 1.0 - p);

  // Taylor coefficients of f(p + t) = p log(p+t) + (1-p) log(1-p-t) around t = 0.
  constexpr int kDeg = kSeriesOrder + 1;
  std::array<double, kDeg + 1> c{};
  for (int k = 2; k <= kDeg; ++k) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    c[k] = (sign * std::pow(p, 1 - k) - std::pow(1.0 - p, 1 - k)) / k;
  }
  // Determine e_m order by order from f(p + T(t)) = f(p + t), T(t) = -t + sum e_m t^m.
  for (int m = 2; m <= kSeriesOrder; ++m) {
    std::array<double, kDeg + 1> t_poly{};
    t_poly[1] = -1.0;
    for (int j = 2; j < m; ++j) t_poly[j] = e_[j];
    std::array<double, kDeg + 1> power = t_poly;
    double residual = 0.0;
    for (int k = 2; k <= m + 1; ++k) {
      std::array<double, kDeg + 1> next{};
      for (int i = 0; i <= kDeg; ++i) {
        if (power[i] == 0.0) continue;
        for (int j = 0; i + j <= kDeg; ++j) next[i + j] += power[i] * t_poly[j];
      }
      power = next;
      residual += c[k] * power[m + 1];
    }
    residual -= c[m + 1];
    e_[m] = residual / (2.0 * c[2]);
  }
}

double ReflectionMap::offset_of(const Point01& x) const {
  return x.value < 0.5 ? x.value - p_ : (1.0 - p_) - x.complement;
}

Reflection ReflectionMap::reflect(const Point01& x) const {
  require_point(x, "reflect");
  const double p = p_;
  const double inf = std::numeric_limits<double>::infinity();
  if (x.value == 0.0) return {1.0, 0.0, 0.0, -inf, 1.0 - p, 1.0 - 2.0 * p};
  if (x.complement == 0.0) return {0.0, 1.0, -inf, 0.0, -p, 1.0 - 2.0 * p};
  const double delta = offset_of(x);
  if (delta == 0.0) return {p, 1.0 - p, std::log(p), std::log1p(-p), 0.0, 0.0};
  if (p == 0.5) {
    // r(x) = 1 - x
    return {x.complement, x.value, std::log(x.complement), std::log(x.value), -delta, 0.0};
  }

  if (std::fabs(delta) < series_radius_) {
    double corr = 0.0;
    for (int m = kSeriesOrder; m >= 2; --m) corr = (corr + e_[m]) * delta;
    corr *= delta;
    const double offset = -delta + corr;
    const double value = p + offset;
    const double complement = (1.0 - p) - offset;
    return {value, complement, std::log(value), std::log(complement), offset, corr};
  }

  const double target = p * std::log(x.value) + (1.0 - p) * std::log(x.complement);
  const bool left = delta < 0.0;
  const double q = left ? 1.0 - p : p;
  const double near = q - std::fabs(delta);
  const double guess = near > 0.0 ? std::log(near) : target / q;
  const double v = solve_log_side(q, target, guess);
  const double s = std::exp(v);
  Reflection r{};
  if (left) {
    r = {1.0 - s, s, std::log1p(-s), v, q - s, 0.0};
  } else {
    r = {s, 1.0 - s, v, std::log1p(-s), s - q, 0.0};
  }
  r.skew = r.offset + delta;
  return r;
}

WeightFunction::WeightFunction(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!(c > 0.0)) throw std::domain_error("WeightFunction: scale c must be positive");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw std::domain_error("WeightFunction: parameters must be finite");
  }
}

double WeightFunction::log_eval(const Point01& x) const {
  return log_eval_logs(std::log(x.value), std::log(x.complement));
}

double WeightFunction::log_eval_logs(double log_value, double log_complement) const {
  double out = std::log(c_);
  if (a_ != 0.0) out += a_ * log_value;
  if (b_ != 0.0) out += b_ * log_complement;
  return out;
}

double log_fp(double p, const Point01& x) { return p * std::log(x.value) + (1.0 - p) * std::log(x.complement); }

double reflect(const ReflectionMap& map, double x) { return map.reflect(Point01::from_value(x)).value; }

Reflection reflect(const ReflectionMap& map, const Point01& x) { return map.reflect(x); }

double reflect_derivative(const ReflectionMap& map, const Point01& x) {
  require_interior(x, "reflect_derivative");
  const double delta = map.offset_of(x);
  if (std::fabs(delta) < kFixedPointBand) return -1.0;
  const Reflection r = map.reflect(x);
  return -std::exp(log_neg_derivative(x, r, delta));
}

double reflect_derivative(const ReflectionMap& map, double x) {
  return reflect_derivative(map, Point01::from_value(x));
}

double reflect_second_derivative(const ReflectionMap& map, const Point01& x) {
  require_interior(x, "reflect_second_derivative");
  const double delta = map.offset_of(x);
  if (std::fabs(delta) < kFixedPointBand) {
    throw std::domain_error("reflect_second_derivative: undefined at the fixed point");
  }
  const double p = map.p();
  const Reflection r = map.reflect(x);
  const double d1 = -std::exp(log_neg_derivative(x, r, delta));
  // p(1-p)(2p-x-r)(r-x) r' / ((p-x) x(1-x) (p-r)^2) with 2p-x-r = -skew.
  return p * (1.0 - p) * r.skew * (r.offset - delta) * d1 / (delta * x.value * x.complement * r.offset * r.offset);
}

double reflect_second_derivative(const ReflectionMap& map, double x) {
  return reflect_second_derivative(map, Point01::from_value(x));
}

double density_ratio(const ReflectionMap& map, const WeightFunction& w, const Point01& x) {
  require_interior(x, "density_ratio");
  const Reflection r = map.reflect(x);
  double log_h = 0.0;
  if (w.a() != 0.0) log_h += w.a() * (r.log_value - std::log(x.value));
  if (w.b() != 0.0) log_h += w.b() * (r.log_complement - std::log(x.complement));
  return std::exp(log_h);
}

double density_ratio(const ReflectionMap& map, const WeightFunction& w, double x) {
  return density_ratio(map, w, Point01::from_value(x));
}

namespace {

struct SideIntegrals {
  double below_mass;    // int_0^p density
  double above_mass;    // int_p^1 density
  double below_moved;   // int_0^p -r' g(r) f^fpow
  double above_moved;   // int_p^1 -r' g(r) f^fpow
};

SideIntegrals side_integrals(const ReflectionMap& map, const WeightFunction& w, double fpow) {
  const double p = map.p();
  if (p * fpow + w.a() <= -1.0 || (1.0 - p) * fpow + w.b() <= -1.0) {
    throw std::domain_error("odds_functional: density is not integrable at an endpoint");
  }
  const Point01 mode{p, 1.0 - p};
  const double scale = fpow * log_fp(p, mode) + w.log_eval(mode);

  auto density = [&](const Point01& x) { return std::exp(fpow * log_fp(p, x) + w.log_eval(x) - scale); };
  auto moved = [&](const Point01& x) {
    const Reflection r = map.reflect(x);
    const double lnd = log_neg_derivative(x, r, map.offset_of(x));
    return std::exp(lnd + fpow * log_fp(p, x) + w.log_eval_logs(r.log_value, r.log_complement) - scale);
  };

  SideIntegrals out{};
  out.below_mass = integrate([&](double x) { return density(Point01::from_value(x)); }, 0.0, p, kQuadTol);
  out.above_mass =
      integrate([&](double t) { return density(Point01::from_complement(t)); }, 0.0, 1.0 - p, kQuadTol);
  out.below_moved = integrate([&](double x) { return moved(Point01::from_value(x)); }, 0.0, p, kQuadTol);
  out.above_moved =
      integrate([&](double t) { return moved(Point01::from_complement(t)); }, 0.0, 1.0 - p, kQuadTol);
  return out;
}

}  // namespace

OddsPair odds_functional(const ReflectionMap& map, const WeightFunction& w, double fpow) {
  const SideIntegrals s = side_integrals(map, w, fpow);
  return {s.above_mass / s.below_mass, s.below_moved / s.below_mass};
}

OddsPair odds_functional_mirrored(const ReflectionMap& map, const WeightFunction& w, double fpow) {
  const SideIntegrals s = side_integrals(map, w, fpow);
  return {s.below_mass / s.above_mass, s.above_moved / s.above_mass};
}

}  // namespace tailbound
