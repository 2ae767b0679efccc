#include "bcbounds/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace bcb {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  Rng r(base ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  r.next_u64();
  return r.next_u64();
}

void softmax(std::span<const double> theta, std::vector<double>& out) {
  out.resize(theta.size());
  double mx = theta[0];
  for (double t : theta) mx = std::max(mx, t);
  double z = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    out[i] = std::exp(theta[i] - mx);
    z += out[i];
  }
  for (double& v : out) v /= z;
}

double pattern_search(std::vector<double>& theta,
                      const std::function<double(std::span<const double>)>& objective,
                      const PatternOptions& opt) {
  double best = objective(theta);
  std::size_t evals = 1;
  double step = opt.init_step;
  while (step >= opt.min_step && evals < opt.max_evals) {
    bool improved = false;
    for (std::size_t i = 0; i < theta.size() && evals < opt.max_evals; ++i) {
      for (double s : {step, -step}) {
        theta[i] += s;
        const double v = objective(theta);
        ++evals;
        if (v > best + opt.improve_eps) {
          best = v;
          improved = true;
          break;
        }
        theta[i] -= s;
        if (evals >= opt.max_evals) break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

namespace {

double run_restart(std::size_t r, std::uint64_t seed,
                   const std::function<std::vector<double>(std::size_t, Rng&)>& make_start,
                   const std::function<double(std::span<const double>)>& objective,
                   const PatternOptions& opt, std::vector<double>* point_out) {
  Rng rng(derive_seed(seed, r));
  std::vector<double> theta = make_start(r, rng);
  const double v = pattern_search(theta, objective, opt);
  if (point_out) *point_out = std::move(theta);
  return v;
}

}  // namespace

MultistartResult multistart_maximize(
    std::size_t restarts,
    const std::function<std::vector<double>(std::size_t, Rng&)>& make_start,
    const std::function<double(std::span<const double>)>& objective,
    const PatternOptions& opt, std::uint64_t seed, ExecMode mode) {
  if (restarts == 0) throw std::invalid_argument("multistart_maximize: restarts == 0");

  std::vector<double> values(restarts);
  if (mode == ExecMode::Parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(restarts); ++r) {
      values[static_cast<std::size_t>(r)] = run_restart(
          static_cast<std::size_t>(r), seed, make_start, objective, opt, nullptr);
    }
  } else {
    for (std::size_t r = 0; r < restarts; ++r) {
      values[r] = run_restart(r, seed, make_start, objective, opt, nullptr);
    }
  }

  // Merge by maximum value, ties to the lowest index, so the result does not
  // depend on scheduling.
  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r) {
    if (values[r] > values[best]) best = r;
  }

  MultistartResult res;
  res.best_restart = best;
  res.value = run_restart(best, seed, make_start, objective, opt, &res.best_point);
  return res;
}

double golden_max(const std::function<double(double)>& fn, double lo, double hi,
                  double tol, double* arg) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = fn(c), fd = fn(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = fn(d);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = fn(xm);
  if (arg) *arg = xm;
  return fm;
}

}  // namespace bcb
