// Timing harness comparing the OpenMP kernels against their serial reference
// twins, and the flat-array objective kernels against the generic
// joint-table path.

#include <chrono>
#include <cstdio>
#include <vector>

#include <CLI11.hpp>

#include "bcbounds/bounds.hpp"
#include "bcbounds/search.hpp"

using namespace bcb;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::vector<double> random_table(Rng& rng, std::size_t n) {
  std::vector<double> t(n);
  double sum = 0.0;
  for (double& v : t) {
    v = -std::log(1.0 - rng.next_unit());
    sum += v;
  }
  for (double& v : t) v /= sum;
  return t;
}

void bench_multistart(const BroadcastChannel& ch, std::size_t restarts,
                      std::uint64_t seed) {
  SearchConfig cfg;
  cfg.restarts = restarts;
  cfg.iterations = 600;
  cfg.seed = seed;

  double t0 = now_ms();
  const GapResult serial = conjecture_gap_search(ch, cfg, ExecMode::Serial);
  double t1 = now_ms();
  const GapResult parallel = conjecture_gap_search(ch, cfg, ExecMode::Parallel);
  double t2 = now_ms();

  std::printf("gap multistart (%zu restarts)  serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
              restarts, t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1));
  std::printf("  results bit-identical: %s (%.17g vs %.17g)\n",
              serial.gap == parallel.gap ? "yes" : "NO", serial.gap, parallel.gap);
}

void bench_tsplit(const BroadcastChannel& ch, std::size_t grid) {
  double t0 = now_ms();
  const TsplitResult serial = marton_sum_rate_tsplit(ch, grid, ExecMode::Serial);
  double t1 = now_ms();
  const TsplitResult parallel = marton_sum_rate_tsplit(ch, grid, ExecMode::Parallel);
  double t2 = now_ms();
  std::printf("tsplit scan (grid %zu)         serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
              grid, t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1));
  std::printf("  results bit-identical: %s (%.17g vs %.17g)\n",
              serial.bits == parallel.bits ? "yes" : "NO", serial.bits, parallel.bits);
}

void bench_kernels(const BroadcastChannel& ch, std::size_t evals) {
  const kernels::ChannelTables ct = kernels::make_tables(ch);
  const std::size_t nu = 4, nv = 4, nx = ch.input_size();
  Rng rng(12345);
  std::vector<std::vector<double>> tables;
  for (std::size_t i = 0; i < 64; ++i) tables.push_back(random_table(rng, nu * nv * nx));

  double acc = 0.0;
  double t0 = now_ms();
  for (std::size_t i = 0; i < evals; ++i) {
    acc += kernels::gap_objective(tables[i % tables.size()], nu, nv, ct);
  }
  double t1 = now_ms();
  for (std::size_t i = 0; i < evals / 50; ++i) {
    const JointPmf j({Var::U, Var::V, Var::X}, {nu, nv, nx},
                     tables[i % tables.size()]);
    acc += kernels::gap_objective_reference(j, ch);
  }
  double t2 = now_ms();
  const double fast_rate = evals / (t1 - t0) * 1000.0;
  const double ref_rate = (evals / 50) / (t2 - t1) * 1000.0;
  std::printf("gap objective                 kernel %8.0f evals/s   reference %8.0f evals/s   ratio %.1fx\n",
              fast_rate, ref_rate, fast_rate / ref_rate);
  std::printf("  (checksum %.6f)\n", acc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bcbounds kernel benchmarks"};
  std::size_t restarts = 2000;
  std::size_t grid = 201;
  std::size_t evals = 200000;
  std::uint64_t seed = 0;
  app.add_option("--restarts", restarts, "multistart restarts");
  app.add_option("--grid", grid, "tsplit grid per axis");
  app.add_option("--evals", evals, "kernel evaluation count");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  const BroadcastChannel ch = bssc(0.5);
  bench_multistart(ch, restarts, seed);
  bench_tsplit(ch, grid);
  bench_kernels(ch, evals);
  return 0;
}
