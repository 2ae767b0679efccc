// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances and budgets are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bcbounds/bounds.hpp"
#include "bcbounds/cli.hpp"
#include "bcbounds/constructions.hpp"
#include "bcbounds/envelope.hpp"
#include "test_support.hpp"

using namespace bcb;
using testsupport::extract_value;
using testsupport::random_simplex;
using testsupport::random_uvx_joint;

namespace {

namespace fs = std::filesystem;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run_command(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"bcbound"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

char buffer[512];

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

// 1. Tangency point: solve_eta0() = 1/5 within 1e-9, under a second.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const double eta0 = solve_eta0();
  const double elapsed = seconds_since(t0);
  const bool pass = std::abs(eta0 - 0.2) <= 1e-9 && elapsed < 1.0;
  report(1, pass,
         fmt("eta0 = %.12f (target 0.2 within 1e-9), %.3f s (budget 1 s)", eta0,
             elapsed));
}

// 2. Envelope of f equals the chord form g on 4097 points; the contact set is
// the grid below eta0 within one step. The right grid endpoint is excluded:
// the hull of any sampled function interpolates its final sample.
void criterion_2() {
  const std::size_t n = 4097;
  const double h = 1.0 / static_cast<double>(n - 1);
  const GridFunction f = GridFunction::tabulate(n, f_skew);
  const EnvelopeResult env = upper_concave_envelope(f);
  double sup = 0.0;
  bool contact_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = f.x_at(i);
    sup = std::max(sup, std::abs(env.envelope.values[i] - g_function(x)));
    if (x <= 0.2 - h && !env.contact[i]) contact_ok = false;
    if (x > 0.2 + h && i + 1 < n && env.contact[i]) contact_ok = false;
  }
  const bool pass = sup <= 2e-4 && contact_ok;
  report(2, pass,
         fmt("sup|envelope - g| = %.3g (budget 2e-4), contact boundary at eta0 "
             "within one grid step: %s",
             sup, contact_ok ? "yes" : "NO"));
}

struct SumRates {
  double tsplit = 0.0;
  double outer = 0.0;
};

// 3. Inner-bound command reports the time-split sum rate 0.3616 +/- 5e-4.
void criterion_3(SumRates& rates) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string out = run_command({"inner", "--channel", "bssc:0.5"});
  const double elapsed = seconds_since(t0);
  rates.tsplit = extract_value(out, "tsplit_sum_rate");
  const bool pass = std::abs(rates.tsplit - 0.3616) <= 5e-4 && elapsed < 60.0;
  report(3, pass,
         fmt("inner tsplit sum rate = %.6f (target 0.3616 within 5e-4), %.1f s "
             "(budget 60 s)",
             rates.tsplit, elapsed));
}

// 4. Outer-bound command vs the quoted reference value 0.3711 +/- 5e-4. The
// envelope decomposition evaluates to 2H(1/4)-5/4 = 0.372556 on this channel
// (independently derivable closed form, reproduced by the direct search),
// so this criterion records the discrepancy against the quoted value.
void criterion_4(SumRates& rates) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string out = run_command({"outer", "--channel", "bssc:0.5"});
  const double elapsed = seconds_since(t0);
  rates.outer = extract_value(out, "outer_sum_rate");
  const bool envelope_used = out.find("envelope-grid") != std::string::npos;
  const bool pass =
      std::abs(rates.outer - 0.3711) <= 5e-4 && envelope_used && elapsed < 60.0;
  report(4, pass,
         fmt("outer sum rate = %.6f via %s (reference 0.3711 within 5e-4; the "
             "decomposition's own value is 2H(1/4)-5/4 = %.6f), %.1f s (budget 60 s)",
             rates.outer, envelope_used ? "envelope decomposition" : "fallback",
             2.0 * binary_entropy(0.25) - 1.25, elapsed));
}

// 5. The outer bound exceeds the inner sum-rate benchmark by at least 0.008.
void criterion_5(const SumRates& rates) {
  const double gap = rates.outer - rates.tsplit;
  report(5, gap >= 0.008,
         fmt("outer - inner = %.6f (must be >= 0.008)", gap));
}

// 6. Construction identities on 1000 seeded random joints through 10 random
// channels: all eight residuals below 1e-9 in under 30 s.
void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();

  auto random_channel_from = [](Rng& rng) {
    const std::size_t nx = 2 + rng.next_u64() % 2;
    const std::size_t ny1 = 2 + rng.next_u64() % 2;
    const std::size_t ny2 = 2 + rng.next_u64() % 2;
    std::vector<double> w1, w2;
    for (std::size_t x = 0; x < nx; ++x) {
      auto r1 = random_simplex(rng, ny1);
      auto r2 = random_simplex(rng, ny2);
      w1.insert(w1.end(), r1.begin(), r1.end());
      w2.insert(w2.end(), r2.begin(), r2.end());
    }
    return BroadcastChannel(TransitionMatrix(nx, ny1, std::move(w1)),
                            TransitionMatrix(nx, ny2, std::move(w2)));
  };

  Rng channel_rng(derive_seed(0, 999));
  std::vector<BroadcastChannel> channels;
  for (int i = 0; i < 10; ++i) channels.push_back(random_channel_from(channel_rng));

  double worst = 0.0;
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    Rng rng(derive_seed(0, trial));
    const BroadcastChannel& ch = channels[trial % channels.size()];
    const std::size_t nx = ch.input_size();
    const JointPmf src = random_uvx_joint(rng, 1 + rng.next_u64() % 4,
                                          1 + rng.next_u64() % 4, nx);
    const JointPmf s = extend_through_channel(
        extend_through_channel(src, ch, Var::Y1), ch, Var::Y2);

    const JointPmf lifted = extend_through_channel(
        extend_through_channel(lift_to_independent(src).joint, ch, Var::Y1), ch,
        Var::Y2);
    const JointPmf det = extend_through_channel(
        extend_through_channel(deterministic_lift(src).joint, ch, Var::Y1), ch,
        Var::Y2);

    const double residuals[8] = {
        mutual_information(s, {Var::U}, {Var::Y1}) -
            mutual_information(lifted, {Var::U, Var::W}, {Var::Y1}),
        mutual_information(s, {Var::V}, {Var::Y2}) -
            mutual_information(lifted, {Var::V, Var::W}, {Var::Y2}),
        mutual_information(s, {Var::U}, {Var::Y1}, {Var::V}) -
            mutual_information(lifted, {Var::U}, {Var::Y1}, {Var::V, Var::W}),
        mutual_information(s, {Var::V}, {Var::Y2}, {Var::U}) -
            mutual_information(lifted, {Var::V}, {Var::Y2}, {Var::U, Var::W}),
        mutual_information(s, {Var::U}, {Var::Y1}) -
            mutual_information(det, {Var::U}, {Var::Y1}),
        mutual_information(s, {Var::V}, {Var::Y2}) -
            mutual_information(det, {Var::V}, {Var::Y2}),
        mutual_information(s, {Var::X}, {Var::Y1}, {Var::V}) -
            mutual_information(det, {Var::U}, {Var::Y1}, {Var::V}),
        mutual_information(s, {Var::X}, {Var::Y2}, {Var::U}) -
            mutual_information(det, {Var::V}, {Var::Y2}, {Var::U}),
    };
    for (double r : residuals) worst = std::max(worst, std::abs(r));
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst <= 1e-9 && elapsed < 30.0;
  report(6, pass,
         fmt("max identity residual over 1000 joints x 8 checks = %.3g "
             "(budget 1e-9), %.1f s (budget 30 s)",
             worst, elapsed));
}

// 7. Constructive support reduction: 200 random eight-atom binary-X
// instances land on at most four atoms preserving p(X) and both functionals.
void criterion_7() {
  Rng rng(derive_seed(0, 77));
  const BroadcastChannel ch = bssc(0.5);
  double worst = 0.0;
  std::size_t worst_atoms = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> weights = random_simplex(rng, 8);
    std::vector<Pmf> cond;
    for (int i = 0; i < 8; ++i) cond.emplace_back(random_simplex(rng, 2));
    const PreserveSide side = trial % 2 ? PreserveSide::Y2 : PreserveSide::Y1;
    const SupportFunctionals before = support_functionals(weights, cond, ch, side);
    const ReducedSupport red = reduce_support(weights, cond, ch, side);
    worst_atoms = std::max(worst_atoms, red.kept.size());
    std::vector<Pmf> kept;
    for (std::size_t i : red.kept) kept.push_back(cond[i]);
    const SupportFunctionals after = support_functionals(red.weights, kept, ch, side);
    for (std::size_t x = 0; x < 2; ++x) {
      worst = std::max(worst, std::abs(before.x_marginal[x] - after.x_marginal[x]));
    }
    worst = std::max(worst,
                     std::abs(before.cond_output_entropy - after.cond_output_entropy));
    worst = std::max(worst,
                     std::abs(before.cond_mutual_info - after.cond_mutual_info));
  }
  const bool pass = worst <= 1e-9 && worst_atoms <= 4;
  report(7, pass,
         fmt("200 reductions: max atoms = %zu (budget 4), max functional drift "
             "= %.3g (budget 1e-9)",
             worst_atoms, worst));
}

// 8. Conjecture search at 1e5 restarts, cardinalities 4x4. A positive gap is
// emitted with its witness as a finding rather than failing the run; the
// marginal-restricted variant is theorem-backed and must stay nonpositive.
void criterion_8() {
  const BroadcastChannel ch = bssc(0.5);
  SearchConfig cfg;
  cfg.restarts = 100000;
  cfg.iterations = 600;
  cfg.card_u = 4;
  cfg.card_v = 4;
  cfg.seed = 0;

  const auto t0 = std::chrono::steady_clock::now();
  const GapResult full = conjecture_gap_search(ch, cfg);
  const GapResult restricted =
      conjecture_gap_search(ch, cfg, ExecMode::Parallel, true);
  const double elapsed = seconds_since(t0);

  if (full.gap > 1e-6 && full.witness) {
    std::printf("REPORTABLE FINDING: positive conjecture gap %.9g; witness axes "
                "U,V,X sizes 4,4,2 p = ",
                full.gap);
    for (double v : full.witness->table()) std::printf("%.9g,", v);
    std::printf("\n");
  }
  const bool pass = restricted.gap <= 1e-6 && (full.gap <= 1e-6 || full.witness);
  report(8, pass,
         fmt("gap search (1e5 restarts): max gap = %.3g (<= 1e-6 or reported), "
             "restricted-marginal gap = %.3g (must be <= 1e-6), %.1f s",
             full.gap, restricted.gap, elapsed));
}

// 9. Ordering sanity on 50 seeded random binary-input channels.
void criterion_9() {
  Rng rng(derive_seed(0, 4242));
  bool ordered = true, bounded = true;
  double worst_violation = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t ny1 = 2 + rng.next_u64() % 2;
    const std::size_t ny2 = 2 + rng.next_u64() % 2;
    std::vector<double> w1, w2;
    for (std::size_t x = 0; x < 2; ++x) {
      auto r1 = random_simplex(rng, ny1);
      auto r2 = random_simplex(rng, ny2);
      w1.insert(w1.end(), r1.begin(), r1.end());
      w2.insert(w2.end(), r2.begin(), r2.end());
    }
    const BroadcastChannel ch(TransitionMatrix(2, ny1, std::move(w1)),
                              TransitionMatrix(2, ny2, std::move(w2)));

    SearchConfig outer_cfg;
    outer_cfg.grid = 2049;
    const double outer = outer_sum_rate(ch, outer_cfg).bits;

    double inner = 0.0;
    for (std::size_t w : {std::size_t{1}, std::size_t{2}}) {
      SearchConfig cfg;
      cfg.restarts = 16;
      cfg.iterations = 600;
      cfg.card_w = w;
      const MartonResult r = marton_weighted_max(ch, 0.5, cfg);
      inner = std::max(inner, r.rates.r1 + r.rates.r2);
    }
    if (inner > outer + 1e-6) {
      ordered = false;
      worst_violation = std::max(worst_violation, inner - outer);
    }
    if (inner > 1.0 + 1e-9 || outer > 1.0 + 1e-9) bounded = false;
  }
  report(9, ordered && bounded,
         fmt("50 random binary-input channels: inner <= outer + 1e-6 (%s, worst "
             "violation %.3g), both <= log2|X| (%s)",
             ordered ? "yes" : "NO", worst_violation, bounded ? "yes" : "NO"));
}

// 10. Byte-identical output files under identical flags and seed.
void criterion_10() {
  const fs::path dir = fs::temp_directory_path();
  bool pass = true;
  std::string detail;

  struct Case {
    const char* label;
    std::vector<std::string> args;
  };
  const std::vector<Case> cases = {
      {"info-csv", {"info", "--channel", "bssc:0.5", "--seed", "7"}},
      {"outer-csv",
       {"outer", "--channel", "bssc:0.5", "--lambdas", "5", "--grid", "1025",
        "--seed", "7"}},
      {"outer-json",
       {"outer", "--channel", "bssc:0.5", "--lambdas", "3", "--grid", "1025",
        "--seed", "7", "--format", "json"}},
      {"inner-csv",
       {"inner", "--channel", "bssc:0.5", "--lambdas", "3", "--restarts", "8",
        "--iterations", "400", "--grid3", "81", "--w-card", "1", "--w-card", "2",
        "--seed", "7"}},
      {"suite-csv",
       {"bssc-suite", "--restarts", "8", "--iterations", "300", "--grid", "513",
        "--grid3", "61", "--seed", "7"}},
  };
  for (const Case& c : cases) {
    const fs::path a = dir / (std::string("bcbound_acc_") + c.label + "_a");
    const fs::path b = dir / (std::string("bcbound_acc_") + c.label + "_b");
    std::vector<std::string> args_a = c.args;
    args_a.push_back("--out");
    args_a.push_back(a.string());
    std::vector<std::string> args_b = c.args;
    args_b.push_back("--out");
    args_b.push_back(b.string());
    run_command(args_a);
    run_command(args_b);
    if (read_file(a) != read_file(b)) {
      pass = false;
      detail += std::string(c.label) + " differs; ";
    }
  }
  report(10, pass,
         pass ? "info/outer/inner/suite reruns byte-identical (csv and json)"
              : detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite, %s\n", cli::kVersion);
  SumRates rates;
  criterion_1();
  criterion_2();
  criterion_3(rates);
  criterion_4(rates);
  criterion_5(rates);
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
