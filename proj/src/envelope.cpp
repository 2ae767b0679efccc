#include "bcbounds/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bcbounds/prob.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace bcb {

GridFunction GridFunction::tabulate(std::size_t n,
                                    const std::function<double(double)>& fn) {
  if (n < 2) throw std::invalid_argument("GridFunction: need at least 2 points");
  GridFunction g;
  g.values.resize(n);
  const double denom = static_cast<double>(n - 1);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    g.values[static_cast<std::size_t>(i)] = fn(static_cast<double>(i) / denom);
  }
  return g;
}

namespace {

void check_unit_interval(double eta, const char* what) {
  if (eta < -kMassTol || eta > 1.0 + kMassTol) {
    throw std::domain_error(std::string(what) + ": argument " +
                            std::to_string(eta) + " outside [0,1]");
  }
}

}  // namespace

double f_skew(double eta) {
  check_unit_interval(eta, "f_skew");
  eta = std::clamp(eta, 0.0, 1.0);
  return binary_entropy(eta / 2.0) - binary_entropy((1.0 - eta) / 2.0);
}

double f_skew_derivative(double eta) {
  check_unit_interval(eta, "f_skew_derivative");
  return 0.5 * std::log2((2.0 - eta) / eta) +
         0.5 * std::log2((1.0 + eta) / (1.0 - eta));
}

double solve_eta0() {
  // Tangency residual: positive left of the root, negative right of it.
  auto residual = [](double eta) {
    return f_skew_derivative(eta) * (1.0 - eta) - (1.0 - f_skew(eta));
  };
  double lo = 1e-9, hi = 0.5 - 1e-9;
  double rlo = residual(lo), rhi = residual(hi);
  if (!(rlo > 0.0) || !(rhi < 0.0)) {
    throw std::runtime_error("solve_eta0: failed to bracket the tangency root");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double mid = 0.5 * (lo + hi);
    (residual(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double g_function(double eta) {
  check_unit_interval(eta, "g_function");
  eta = std::clamp(eta, 0.0, 1.0);
  static const double eta0 = solve_eta0();
  static const double f0 = f_skew(eta0);
  if (eta <= eta0) return f_skew(eta);
  return ((1.0 - eta) * f0 + (eta - eta0) * 1.0) / (1.0 - eta0);
}

EnvelopeResult upper_concave_envelope(const GridFunction& fn) {
  const std::size_t n = fn.n_points();
  if (n < 2) throw std::invalid_argument("upper_concave_envelope: n_points < 2");
  const std::vector<double>& y = fn.values;
  for (double v : y) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("upper_concave_envelope: non-finite sample");
    }
  }

  // Upper hull, x implicit as the index. A middle vertex is dropped when it
  // lies on or below the chord of its neighbors.
  std::vector<std::size_t> hull;
  hull.reserve(64);
  for (std::size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2) {
      const std::size_t i0 = hull[hull.size() - 2];
      const std::size_t i1 = hull.back();
      const double lhs = (y[i1] - y[i0]) * static_cast<double>(i - i0);
      const double rhs = (y[i] - y[i0]) * static_cast<double>(i1 - i0);
      if (lhs <= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  EnvelopeResult res;
  res.envelope.values.resize(n);
  res.contact.assign(n, 0);
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const std::size_t i0 = hull[k], i1 = hull[k + 1];
    res.envelope.values[i0] = y[i0];
    const double span = static_cast<double>(i1 - i0);
    for (std::size_t i = i0 + 1; i < i1; ++i) {
      const double t = static_cast<double>(i - i0) / span;
      const double v = y[i0] + (y[i1] - y[i0]) * t;
      res.envelope.values[i] = std::max(v, y[i]);
    }
  }
  res.envelope.values[hull.back()] = y[hull.back()];

  for (std::size_t i = 0; i < n; ++i) {
    res.contact[i] = std::abs(res.envelope.values[i] - y[i]) <= 1e-9 ? 1 : 0;
  }
  res.hull = std::move(hull);
  return res;
}

namespace {

// Index of the hull segment whose x-range contains x.
std::size_t hull_segment(const GridFunction& fn,
                         const std::vector<std::size_t>& hull, double x) {
  const double pos = x * static_cast<double>(fn.n_points() - 1);
  std::size_t lo = 0, hi = hull.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (static_cast<double>(hull[mid]) <= pos) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

double envelope_at(const GridFunction& fn, const std::vector<std::size_t>& hull,
                   double x) {
  check_unit_interval(x, "envelope_at");
  x = std::clamp(x, 0.0, 1.0);
  if (hull.size() == 1) return fn.values[hull[0]];
  const std::size_t k = hull_segment(fn, hull, x);
  const std::size_t i0 = hull[k], i1 = hull[k + 1];
  const double x0 = fn.x_at(i0), x1 = fn.x_at(i1);
  const double t = (x - x0) / (x1 - x0);
  return fn.values[i0] + (fn.values[i1] - fn.values[i0]) * t;
}

EnvelopeAtoms envelope_atoms(const GridFunction& fn,
                             const std::vector<std::size_t>& hull, double x) {
  check_unit_interval(x, "envelope_atoms");
  x = std::clamp(x, 0.0, 1.0);
  const std::size_t k = hull_segment(fn, hull, x);
  const std::size_t i0 = hull[k], i1 = hull[std::min(k + 1, hull.size() - 1)];
  const double x0 = fn.x_at(i0), x1 = fn.x_at(i1);
  if (i0 == i1 || x1 <= x0) return {x0, x0, 1.0};
  const double w_left = (x1 - x) / (x1 - x0);
  return {x0, x1, std::clamp(w_left, 0.0, 1.0)};
}

double aux_sup_binary(const GridFunction& phi, double eta) {
  check_unit_interval(eta, "aux_sup_binary");
  EnvelopeResult env = upper_concave_envelope(phi);
  return envelope_at(phi, env.hull, std::clamp(eta, 0.0, 1.0));
}

}  // namespace bcb
