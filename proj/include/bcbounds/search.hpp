#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bcb {

// Selects the OpenMP kernels or their serial reference twins. Both produce
// bit-identical results; the serial path exists for testing and benchmarking.
enum class ExecMode { Serial, Parallel };

// Counted-stream splitmix64. Cheap, portable, and independent of the standard
// library's distribution implementations, so seeded runs reproduce exactly.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double next_unit() {  // [0,1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }
};

// Decorrelated per-stream seed so restarts are independent of scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

struct SearchConfig {
  std::size_t restarts = 64;
  std::size_t iterations = 2000;  // objective-evaluation budget per restart
  std::uint64_t seed = 0;
  std::size_t card_u = 0;  // 0 = derive a default from the channel
  std::size_t card_v = 0;
  std::size_t card_w = 2;
  double tolerance = 1e-9;
  std::size_t grid = 4097;   // 1-D grids
  std::size_t grid3 = 201;   // per-axis resolution of 3-D scans
};

// In-place softmax; subtracts the max first.
void softmax(std::span<const double> theta, std::vector<double>& out);

struct PatternOptions {
  double init_step = 0.5;
  double min_step = 1.0 / 1024.0;
  std::size_t max_evals = 2000;
  double improve_eps = 1e-12;
};

// Coordinate pattern search, maximizing. Deterministic sweep order; the step
// halves after a sweep with no accepted move. Returns the best value; theta
// holds the best point on exit.
double pattern_search(std::vector<double>& theta,
                      const std::function<double(std::span<const double>)>& objective,
                      const PatternOptions& opt);

struct MultistartResult {
  double value = 0.0;
  std::size_t best_restart = 0;
  std::vector<double> best_point;  // parameter vector of the winning restart
};

// Runs `restarts` independent pattern searches and keeps the best value,
// ties broken toward the lowest restart index. Each restart derives its own
// RNG stream from (seed, index), so Serial and Parallel modes return
// bit-identical results; the winning restart is re-run once to recover its
// point.
MultistartResult multistart_maximize(
    std::size_t restarts,
    const std::function<std::vector<double>(std::size_t, Rng&)>& make_start,
    const std::function<double(std::span<const double>)>& objective,
    const PatternOptions& opt, std::uint64_t seed, ExecMode mode);

// Golden-section maximization of a unimodal slice on [lo, hi].
double golden_max(const std::function<double(double)>& fn, double lo, double hi,
                  double tol, double* arg);

}  // namespace bcb
