#include "bcbounds/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcbounds/bounds.hpp"
#include "bcbounds/channel_io.hpp"
#include "bcbounds/constructions.hpp"
#include "bcbounds/envelope.hpp"
#include "bcbounds/search.hpp"

namespace bcb::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string flatten(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += fmt9(values[i]);
  }
  return out;
}

std::string describe_witness(const JointPmf& j) {
  std::string out = "axes=";
  for (std::size_t i = 0; i < j.axes().size(); ++i) {
    if (i) out += ",";
    out += var_name(j.axes()[i]);
  }
  out += " sizes=";
  for (std::size_t i = 0; i < j.sizes().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(j.sizes()[i]);
  }
  out += " p=" + flatten(j.table());
  return out;
}

Json witness_json(const JointPmf& j) {
  Json w;
  std::vector<std::string> axes;
  for (Var v : j.axes()) axes.emplace_back(var_name(v));
  w["axes"] = axes;
  w["sizes"] = j.sizes();
  w["p"] = j.table();
  return w;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
  if (!out) throw std::invalid_argument("failed writing output file: " + path);
}

SearchConfig make_config(const Options& opts) {
  SearchConfig cfg;
  cfg.restarts = opts.restarts;
  cfg.iterations = opts.iterations;
  cfg.seed = opts.seed;
  cfg.grid = opts.grid;
  cfg.grid3 = opts.grid3;
  return cfg;
}

std::vector<double> lambda_grid(std::size_t count) {
  if (count < 2) return {0.5};
  std::vector<double> l(count);
  for (std::size_t i = 0; i < count; ++i) {
    l[i] = static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return l;
}

Json config_json(const Options& opts) {
  Json c;
  c["seed"] = opts.seed;
  c["restarts"] = opts.restarts;
  c["iterations"] = opts.iterations;
  c["grid"] = opts.grid;
  c["grid3"] = opts.grid3;
  c["lambdas"] = opts.lambdas;
  return c;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void print_header(std::ostream& out, const char* command, const Options& opts) {
  out << "command: " << command << "\n";
  out << "version: " << kVersion << "\n";
  out << "seed: " << opts.seed << "  restarts: " << opts.restarts
      << "  iterations: " << opts.iterations << "  grid: " << opts.grid
      << "  grid3: " << opts.grid3 << "\n";
}

}  // namespace

int run_info(const Options& opts, std::ostream& out) {
  Stopwatch timer;
  const NamedChannel nc = resolve_channel_spec(opts.channel);
  print_header(out, "info", opts);
  out << "channel: " << nc.name << "\n";
  out << "alphabet: |X|=" << nc.channel.input_size()
      << " |Y1|=" << nc.channel.to_y1.output_size()
      << " |Y2|=" << nc.channel.to_y2.output_size() << "\n";

  const CapacityResult c1 = single_user_capacity(nc.channel, Var::Y1, opts.grid);
  const CapacityResult c2 = single_user_capacity(nc.channel, Var::Y2, opts.grid);
  const double td = std::max(c1.bits, c2.bits);
  out << "capacity_y1: " << fmt9(c1.bits) << "  argmax_p_x: " << flatten(c1.argmax.weights())
      << "\n";
  out << "capacity_y2: " << fmt9(c2.bits) << "  argmax_p_x: " << flatten(c2.argmax.weights())
      << "\n";
  out << "time_division_sum_rate: " << fmt9(td) << "\n";

  if (!opts.out.empty()) {
    if (opts.format == "json") {
      Json j;
      j["command"] = "info";
      j["version"] = kVersion;
      j["channel"] = nc.name;
      j["config"] = config_json(opts);
      j["capacity_y1"] = c1.bits;
      j["argmax_y1"] = c1.argmax.weights();
      j["capacity_y2"] = c2.bits;
      j["argmax_y2"] = c2.argmax.weights();
      j["time_division_sum_rate"] = td;
      write_file(opts.out, j.dump(2) + "\n");
    } else {
      std::string csv = "quantity,bits\n";
      csv += "capacity_y1," + fmt9(c1.bits) + "\n";
      csv += "capacity_y2," + fmt9(c2.bits) + "\n";
      csv += "time_division_sum_rate," + fmt9(td) + "\n";
      write_file(opts.out, csv);
    }
  }
  out << "duration_ms: " << fmt9(timer.ms()) << "\n";
  return kExitOk;
}

int run_outer(const Options& opts, std::ostream& out) {
  Stopwatch timer;
  const NamedChannel nc = resolve_channel_spec(opts.channel);
  const SearchConfig cfg = make_config(opts);
  const std::vector<double> lambdas = lambda_grid(opts.lambdas);

  const RegionSample region = outer_region(nc.channel, lambdas, cfg);

  print_header(out, "outer", opts);
  out << "channel: " << nc.name << "\n";
  out << "method: " << region.method << "\n";
  out << "outer_sum_rate: " << fmt9(region.sum_rate) << "\n";
  if (region.sum_witness) {
    out << "sum_witness: " << describe_witness(*region.sum_witness) << "\n";
  }

  std::string csv = "lambda,value,r1,r2\n";
  for (const WeightedMax& wm : region.maxima) {
    csv += fmt9(wm.lambda) + "," + fmt9(wm.value) + "," + fmt9(wm.rates.r1) + "," +
           fmt9(wm.rates.r2) + "\n";
  }
  out << csv;

  if (!opts.out.empty()) {
    if (opts.format == "json") {
      Json j;
      j["command"] = "outer";
      j["version"] = kVersion;
      j["channel"] = nc.name;
      j["config"] = config_json(opts);
      j["method"] = region.method;
      j["sum_rate"] = region.sum_rate;
      if (region.sum_witness) j["sum_witness"] = witness_json(*region.sum_witness);
      Json rows = Json::array();
      for (const WeightedMax& wm : region.maxima) {
        Json row;
        row["lambda"] = wm.lambda;
        row["value"] = wm.value;
        row["r1"] = wm.rates.r1;
        row["r2"] = wm.rates.r2;
        if (wm.witness) row["witness"] = witness_json(*wm.witness);
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      write_file(opts.out, j.dump(2) + "\n");
    } else {
      write_file(opts.out, csv);
    }
  }
  out << "duration_ms: " << fmt9(timer.ms()) << "\n";
  return kExitOk;
}

int run_inner(const Options& opts, std::ostream& out) {
  Stopwatch timer;
  const NamedChannel nc = resolve_channel_spec(opts.channel);
  const SearchConfig base_cfg = make_config(opts);
  const std::vector<double> lambdas = lambda_grid(opts.lambdas);

  print_header(out, "inner", opts);
  out << "channel: " << nc.name << "\n";
  out << "w_cards:";
  for (std::size_t w : opts.w_cards) out << " " << w;
  out << "\n";

  const bool binary = nc.channel.input_size() == 2;
  TsplitResult tsplit;
  if (binary) {
    tsplit = marton_sum_rate_tsplit(nc.channel, opts.grid3);
    out << "tsplit_sum_rate: " << fmt9(tsplit.bits)
        << "  tau: " << fmt9(tsplit.tau) << "  a: " << fmt9(tsplit.a)
        << "  b: " << fmt9(tsplit.b) << "  [sum-rate benchmark]\n";
  } else {
    out << "tsplit_sum_rate: n/a (binary-input channels only)\n";
  }

  // Sum-rate report per W cardinality, then the lambda sweep with the best
  // cardinality per lambda.
  double best_sum = 0.0;
  std::size_t best_sum_w = opts.w_cards.empty() ? 1 : opts.w_cards.front();
  for (std::size_t w : opts.w_cards) {
    SearchConfig cfg = base_cfg;
    cfg.card_w = w;
    const MartonResult r = marton_weighted_max(nc.channel, 0.5, cfg);
    const double sum = r.rates.r1 + r.rates.r2;
    out << "w_card=" << w << " best_sum_rate: " << fmt9(sum);
    if (w == 1) out << "  [no-W search; conjectured ceiling is the time-division value]";
    out << "\n";
    if (sum > best_sum) {
      best_sum = sum;
      best_sum_w = w;
    }
  }
  out << "best_sum_rate: " << fmt9(best_sum) << "  (w_card=" << best_sum_w << ")\n";

  std::string csv = "lambda,value,r1,r2\n";
  std::vector<MartonResult> rows;
  for (double lambda : lambdas) {
    MartonResult best;
    bool have = false;
    for (std::size_t w : opts.w_cards) {
      SearchConfig cfg = base_cfg;
      cfg.card_w = w;
      MartonResult r = marton_weighted_max(nc.channel, lambda, cfg);
      if (!have || r.value > best.value) {
        best = std::move(r);
        have = true;
      }
    }
    csv += fmt9(best.lambda) + "," + fmt9(best.value) + "," + fmt9(best.rates.r1) +
           "," + fmt9(best.rates.r2) + "\n";
    rows.push_back(std::move(best));
  }
  out << csv;

  if (!opts.out.empty()) {
    if (opts.format == "json") {
      Json j;
      j["command"] = "inner";
      j["version"] = kVersion;
      j["channel"] = nc.name;
      j["config"] = config_json(opts);
      j["w_cards"] = opts.w_cards;
      if (binary) {
        Json ts;
        ts["sum_rate"] = tsplit.bits;
        ts["tau"] = tsplit.tau;
        ts["a"] = tsplit.a;
        ts["b"] = tsplit.b;
        j["tsplit"] = std::move(ts);
      }
      j["best_sum_rate"] = best_sum;
      Json jrows = Json::array();
      for (const MartonResult& r : rows) {
        Json row;
        row["lambda"] = r.lambda;
        row["value"] = r.value;
        row["r1"] = r.rates.r1;
        row["r2"] = r.rates.r2;
        if (r.witness) row["witness"] = witness_json(*r.witness);
        jrows.push_back(std::move(row));
      }
      j["rows"] = std::move(jrows);
      write_file(opts.out, j.dump(2) + "\n");
    } else {
      write_file(opts.out, csv);
    }
  }
  out << "duration_ms: " << fmt9(timer.ms()) << "\n";
  return kExitOk;
}

int run_bssc_suite(const Options& opts, std::ostream& out) {
  Stopwatch timer;
  const BroadcastChannel ch = bssc(0.5);
  print_header(out, "bssc-suite", opts);
  out << "channel: bssc:0.5\n";

  const double eta0 = solve_eta0();
  const double residual =
      f_skew_derivative(eta0) * (1.0 - eta0) - (1.0 - f_skew(eta0));
  out << "eta0: " << fmt9(eta0) << "  tangency_residual: " << fmt9(residual) << "\n";

  const std::size_t n = std::max<std::size_t>(opts.grid, 9);
  const GridFunction f = GridFunction::tabulate(n, f_skew);
  const EnvelopeResult env = upper_concave_envelope(f);
  double sup_dist = 0.0;
  double lemma2_gap = 0.0;
  std::size_t last_contact_interior = 0;
  std::size_t first_noncontact = n;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = f.x_at(i);
    sup_dist = std::max(sup_dist, std::abs(env.envelope.values[i] - g_function(x)));
    if (x <= eta0) {
      lemma2_gap = std::max(lemma2_gap, env.envelope.values[i] - f.values[i]);
    }
    if (env.contact[i] && i + 1 < n) last_contact_interior = i;
    if (!env.contact[i] && first_noncontact == n) first_noncontact = i;
  }
  out << "envelope_vs_g_sup_dist: " << fmt9(sup_dist) << "\n";
  out << "contact_boundary: last_interior_contact_eta="
      << fmt9(f.x_at(last_contact_interior)) << " first_noncontact_eta="
      << fmt9(first_noncontact < n ? f.x_at(first_noncontact) : 1.0) << "\n";
  out << "lemma2_max_gap_below_eta0: " << fmt9(lemma2_gap) << "\n";

  const TsplitResult ts = marton_sum_rate_tsplit(ch, opts.grid3);
  out << "tsplit_sum_rate: " << fmt9(ts.bits) << "  tau: " << fmt9(ts.tau)
      << "  a: " << fmt9(ts.a) << "  b: " << fmt9(ts.b) << "\n";

  SearchConfig cfg = make_config(opts);
  const OuterSumRate outer = outer_sum_rate(ch, cfg);
  out << "outer_sum_rate: " << fmt9(outer.bits) << "  eta: " << fmt9(outer.eta)
      << "  method: " << outer.method << "\n";
  out << "outer_minus_tsplit: " << fmt9(outer.bits - ts.bits) << "\n";

  const GapResult gap = conjecture_gap_search(ch, cfg);
  out << "conjecture_gap: " << fmt9(gap.gap) << "\n";
  if (gap.gap > 1e-6 && gap.witness) {
    out << "REPORTABLE FINDING: positive gap witness: "
        << describe_witness(*gap.witness) << "\n";
  }
  const GapResult gap_restricted = conjecture_gap_search(ch, cfg, ExecMode::Parallel,
                                                         /*restrict=*/true);
  out << "conjecture_gap_restricted_marginal: " << fmt9(gap_restricted.gap) << "\n";

  std::string csv = "eta,f,g,envelope,contact,ref_line\n";
  for (std::size_t i = 0; i < n; ++i) {
    const double x = f.x_at(i);
    csv += fmt9(x) + "," + fmt9(f.values[i]) + "," + fmt9(g_function(x)) + "," +
           fmt9(env.envelope.values[i]) + "," +
           (env.contact[i] ? "1" : "0") + "," + fmt9(2.0 * x - 1.0) + "\n";
  }
  if (!opts.out.empty()) {
    if (opts.format == "json") {
      Json j;
      j["command"] = "bssc-suite";
      j["version"] = kVersion;
      j["config"] = config_json(opts);
      j["eta0"] = eta0;
      j["envelope_vs_g_sup_dist"] = sup_dist;
      j["lemma2_max_gap_below_eta0"] = lemma2_gap;
      Json tsj;
      tsj["sum_rate"] = ts.bits;
      tsj["tau"] = ts.tau;
      tsj["a"] = ts.a;
      tsj["b"] = ts.b;
      j["tsplit"] = std::move(tsj);
      j["outer_sum_rate"] = outer.bits;
      j["outer_eta"] = outer.eta;
      j["conjecture_gap"] = gap.gap;
      j["conjecture_gap_restricted_marginal"] = gap_restricted.gap;
      j["curve_csv"] = csv;
      write_file(opts.out, j.dump(2) + "\n");
    } else {
      write_file(opts.out, csv);
    }
  }
  out << "duration_ms: " << fmt9(timer.ms()) << "\n";
  return kExitOk;
}

int run_verify_constructions(const Options& opts, std::ostream& out) {
  Stopwatch timer;
  if (opts.trials == 0) {
    throw std::invalid_argument("verify-constructions: --trials must be >= 1");
  }
  const std::size_t max_card = std::max<std::size_t>(opts.max_card, 1);
  print_header(out, "verify-constructions", opts);
  out << "trials: " << opts.trials << "  max_card: " << max_card << "\n";

  auto random_pmf_cells = [](Rng& rng, std::size_t count) {
    std::vector<double> w(count);
    double sum = 0.0;
    for (double& v : w) {
      v = -std::log(1.0 - rng.next_unit());
      sum += v;
    }
    for (double& v : w) v /= sum;
    return w;
  };
  auto random_channel = [&](Rng& rng) {
    const std::size_t nx = 2 + rng.next_u64() % 2;
    const std::size_t ny1 = 2 + rng.next_u64() % 2;
    const std::size_t ny2 = 2 + rng.next_u64() % 2;
    std::vector<double> w1, w2;
    for (std::size_t x = 0; x < nx; ++x) {
      auto r1 = random_pmf_cells(rng, ny1);
      auto r2 = random_pmf_cells(rng, ny2);
      w1.insert(w1.end(), r1.begin(), r1.end());
      w2.insert(w2.end(), r2.begin(), r2.end());
    }
    return BroadcastChannel(TransitionMatrix(nx, ny1, std::move(w1)),
                            TransitionMatrix(nx, ny2, std::move(w2)));
  };

  std::vector<BroadcastChannel> channels;
  {
    Rng rng(derive_seed(opts.seed, 0xC0FFEEULL));
    for (int i = 0; i < 10; ++i) channels.push_back(random_channel(rng));
  }

  double max_identity = 0.0;
  double max_independence = 0.0;
  double max_reduction = 0.0;
  bool determinism_ok = true;

  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    Rng rng(derive_seed(opts.seed, trial + 1));
    const BroadcastChannel& ch = channels[trial % channels.size()];
    const std::size_t nx = ch.input_size();
    const std::size_t nu = 1 + rng.next_u64() % max_card;
    const std::size_t nv = 1 + rng.next_u64() % max_card;
    const JointPmf src({Var::U, Var::V, Var::X}, {nu, nv, nx},
                       random_pmf_cells(rng, nu * nv * nx));
    const JointPmf src12 =
        extend_through_channel(extend_through_channel(src, ch, Var::Y1), ch, Var::Y2);

    const LiftedTriple lifted = lift_to_independent(src);
    const JointPmf lift12 = extend_through_channel(
        extend_through_channel(lifted.joint, ch, Var::Y1), ch, Var::Y2);
    max_independence = std::max(max_independence, uv_independence_gap(lifted.joint));
    double r;
    r = std::abs(mutual_information(src12, {Var::U}, {Var::Y1}) -
                 mutual_information(lift12, {Var::U, Var::W}, {Var::Y1}));
    max_identity = std::max(max_identity, r);
    r = std::abs(mutual_information(src12, {Var::V}, {Var::Y2}) -
                 mutual_information(lift12, {Var::V, Var::W}, {Var::Y2}));
    max_identity = std::max(max_identity, r);
    r = std::abs(mutual_information(src12, {Var::U}, {Var::Y1}, {Var::V}) -
                 mutual_information(lift12, {Var::U}, {Var::Y1}, {Var::V, Var::W}));
    max_identity = std::max(max_identity, r);
    r = std::abs(mutual_information(src12, {Var::V}, {Var::Y2}, {Var::U}) -
                 mutual_information(lift12, {Var::V}, {Var::Y2}, {Var::U, Var::W}));
    max_identity = std::max(max_identity, r);

    const DeterministicTriple det = deterministic_lift(src);
    determinism_ok = determinism_ok && x_deterministic_given_uv(det.joint);
    const JointPmf det12 = extend_through_channel(
        extend_through_channel(det.joint, ch, Var::Y1), ch, Var::Y2);
    r = std::abs(mutual_information(src12, {Var::U}, {Var::Y1}) -
                 mutual_information(det12, {Var::U}, {Var::Y1}));
    max_identity = std::max(max_identity, r);
    r = std::abs(mutual_information(src12, {Var::V}, {Var::Y2}) -
                 mutual_information(det12, {Var::V}, {Var::Y2}));
    max_identity = std::max(max_identity, r);
    r = std::abs(mutual_information(src12, {Var::X}, {Var::Y1}, {Var::V}) -
                 mutual_information(det12, {Var::U}, {Var::Y1}, {Var::V}));
    max_identity = std::max(max_identity, r);
    r = std::abs(mutual_information(src12, {Var::X}, {Var::Y2}, {Var::U}) -
                 mutual_information(det12, {Var::V}, {Var::Y2}, {Var::U}));
    max_identity = std::max(max_identity, r);

    // Support reduction on a fresh random instance.
    const std::size_t atoms = nx + 3 + rng.next_u64() % 4;
    std::vector<double> weights = random_pmf_cells(rng, atoms);
    std::vector<Pmf> conditionals;
    for (std::size_t a = 0; a < atoms; ++a) {
      conditionals.emplace_back(random_pmf_cells(rng, nx));
    }
    const PreserveSide side = trial % 2 == 0 ? PreserveSide::Y1 : PreserveSide::Y2;
    const SupportFunctionals before =
        support_functionals(weights, conditionals, ch, side);
    const ReducedSupport red = reduce_support(weights, conditionals, ch, side);
    std::vector<Pmf> kept_cond;
    for (std::size_t i : red.kept) kept_cond.push_back(conditionals[i]);
    const SupportFunctionals after =
        support_functionals(red.weights, kept_cond, ch, side);
    if (red.kept.size() > nx + 2) {
      max_reduction = std::max(max_reduction, 1.0);
    }
    for (std::size_t x = 0; x < nx; ++x) {
      max_reduction = std::max(max_reduction,
                               std::abs(before.x_marginal[x] - after.x_marginal[x]));
    }
    max_reduction = std::max(
        max_reduction, std::abs(before.cond_output_entropy - after.cond_output_entropy));
    max_reduction = std::max(
        max_reduction, std::abs(before.cond_mutual_info - after.cond_mutual_info));
  }

  out << "max_identity_residual: " << fmt9(max_identity) << "\n";
  out << "max_independence_gap: " << fmt9(max_independence) << "\n";
  out << "max_reduction_residual: " << fmt9(max_reduction) << "\n";
  out << "x_determinism: " << (determinism_ok ? "ok" : "VIOLATED") << "\n";

  const bool pass = max_identity <= 1e-9 && max_independence <= 1e-9 &&
                    max_reduction <= 1e-9 && determinism_ok;
  out << "verdict: " << (pass ? "pass" : "FAIL") << "\n";

  if (!opts.out.empty()) {
    Json j;
    j["command"] = "verify-constructions";
    j["version"] = kVersion;
    j["config"] = config_json(opts);
    j["trials"] = opts.trials;
    j["max_identity_residual"] = max_identity;
    j["max_independence_gap"] = max_independence;
    j["max_reduction_residual"] = max_reduction;
    j["pass"] = pass;
    write_file(opts.out, opts.format == "json" ? j.dump(2) + "\n"
                                               : "quantity,value\nmax_identity_residual," +
                                                     fmt9(max_identity) +
                                                     "\nmax_reduction_residual," +
                                                     fmt9(max_reduction) + "\n");
  }
  out << "duration_ms: " << fmt9(timer.ms()) << "\n";
  return pass ? kExitOk : kExitVerifyFail;
}

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Bounds for two-receiver discrete memoryless broadcast channels"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options opts;
  auto add_common = [&](CLI::App* cmd, bool with_channel) {
    if (with_channel) {
      cmd->add_option("--channel", opts.channel,
                      "channel file path or shorthand bssc:P");
    }
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--restarts", opts.restarts, "search restarts");
    cmd->add_option("--iterations", opts.iterations,
                    "objective evaluations per restart");
    cmd->add_option("--grid", opts.grid, "1-D grid resolution");
    cmd->add_option("--grid3", opts.grid3, "per-axis 3-D grid resolution");
    cmd->add_option("--lambdas", opts.lambdas, "number of weight samples");
    cmd->add_option("--out", opts.out, "output file path");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* info = app.add_subcommand("info", "alphabets, capacities, time division");
  add_common(info, true);
  CLI::App* outer = app.add_subcommand("outer", "outer-bound region and sum rate");
  add_common(outer, true);
  CLI::App* inner = app.add_subcommand("inner", "inner-bound region and sum rate");
  add_common(inner, true);
  inner->add_option("--w-card", opts.w_cards, "W cardinalities to sweep");
  CLI::App* suite = app.add_subcommand("bssc-suite",
                                       "full skew-symmetric channel analysis");
  add_common(suite, false);
  CLI::App* verify = app.add_subcommand("verify-constructions",
                                        "randomized construction identity checks");
  add_common(verify, false);
  verify->add_option("--trials", opts.trials, "number of random instances");
  verify->add_option("--max-card", opts.max_card, "largest auxiliary alphabet");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help / --version
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return run_info(opts, out);
    if (outer->parsed()) return run_outer(opts, out);
    if (inner->parsed()) return run_inner(opts, out);
    if (suite->parsed()) return run_bssc_suite(opts, out);
    if (verify->parsed()) return run_verify_constructions(opts, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace bcb::cli
