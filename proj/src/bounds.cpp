#include "bcbounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcb {

namespace {

// Output entropy of a binary-input channel at P(X=0) = eta.
double out_entropy(const TransitionMatrix& tm, double eta) {
  double h = 0.0;
  for (std::size_t y = 0; y < tm.output_size(); ++y) {
    h -= plog2p(eta * tm.prob(0, y) + (1.0 - eta) * tm.prob(1, y));
  }
  return h;
}

// I(X;Y) of a binary-input channel at P(X=0) = eta.
double binary_mi(const TransitionMatrix& tm, double eta) {
  return out_entropy(tm, eta) - eta * entropy(tm.row(0)) -
         (1.0 - eta) * entropy(tm.row(1));
}

JointPmf joint_uvx(std::size_t nu, std::size_t nv, std::size_t nx,
                   std::vector<double> table) {
  return JointPmf({Var::U, Var::V, Var::X}, {nu, nv, nx}, std::move(table));
}

std::vector<double> theta_from_table(const std::vector<double>& p) {
  std::vector<double> theta(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) theta[i] = std::log(p[i] + 1e-9);
  return theta;
}

std::vector<double> random_theta(Rng& rng, std::size_t k) {
  std::vector<double> theta(k);
  for (double& t : theta) t = rng.next_range(-3.0, 3.0);
  return theta;
}

}  // namespace

namespace kernels {

ChannelTables make_tables(const BroadcastChannel& ch) {
  ChannelTables ct;
  ct.nx = ch.input_size();
  ct.ny1 = ch.to_y1.output_size();
  ct.ny2 = ch.to_y2.output_size();
  ct.w1 = ch.to_y1.flat();
  ct.w2 = ch.to_y2.flat();
  ct.h1row.resize(ct.nx);
  ct.h2row.resize(ct.nx);
  for (std::size_t x = 0; x < ct.nx; ++x) {
    ct.h1row[x] = entropy(ch.to_y1.row(x));
    ct.h2row[x] = entropy(ch.to_y2.row(x));
  }
  return ct;
}

double polytope_weighted_max(double lambda, double c1, double c2, double c3,
                             RatePair* arg) {
  c1 = std::max(c1, 0.0);
  c2 = std::max(c2, 0.0);
  if (c3 < 0.0) {
    if (arg) *arg = {0.0, 0.0};
    return c3;
  }
  RatePair cand[5];
  std::size_t n = 0;
  cand[n++] = {0.0, 0.0};
  cand[n++] = {std::min(c1, c3), 0.0};
  cand[n++] = {0.0, std::min(c2, c3)};
  if (c3 >= c1) cand[n++] = {c1, std::min(c2, c3 - c1)};
  if (c3 >= c2) cand[n++] = {std::min(c1, c3 - c2), c2};
  double best = -1.0;
  RatePair best_pair;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = lambda * cand[i].r1 + (1.0 - lambda) * cand[i].r2;
    if (v > best) {
      best = v;
      best_pair = cand[i];
    }
  }
  if (arg) *arg = best_pair;
  return best;
}

double gap_objective(std::span<const double> t, std::size_t nu, std::size_t nv,
                     const ChannelTables& ct, double* inner_out, double* cap_out) {
  const std::size_t nx = ct.nx, ny1 = ct.ny1, ny2 = ct.ny2;
  thread_local std::vector<double> px, pu, pv, puv, pux, pvx, puy1, pvy2, pxy1,
      pxy2, py1, py2;
  px.assign(nx, 0.0);
  pu.assign(nu, 0.0);
  pv.assign(nv, 0.0);
  puv.assign(nu * nv, 0.0);
  pux.assign(nu * nx, 0.0);
  pvx.assign(nv * nx, 0.0);

  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t v = 0; v < nv; ++v) {
      const double* row = t.data() + (u * nv + v) * nx;
      for (std::size_t x = 0; x < nx; ++x) {
        const double m = row[x];
        px[x] += m;
        puv[u * nv + v] += m;
        pux[u * nx + x] += m;
        pvx[v * nx + x] += m;
      }
    }
  }
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t x = 0; x < nx; ++x) pu[u] += pux[u * nx + x];
  }
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t x = 0; x < nx; ++x) pv[v] += pvx[v * nx + x];
  }

  puy1.assign(nu * ny1, 0.0);
  pvy2.assign(nv * ny2, 0.0);
  pxy1.assign(nx * ny1, 0.0);
  pxy2.assign(nx * ny2, 0.0);
  py1.assign(ny1, 0.0);
  py2.assign(ny2, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny1; ++y) {
      pxy1[x * ny1 + y] = px[x] * ct.w1[x * ny1 + y];
      py1[y] += pxy1[x * ny1 + y];
    }
    for (std::size_t y = 0; y < ny2; ++y) {
      pxy2[x * ny2 + y] = px[x] * ct.w2[x * ny2 + y];
      py2[y] += pxy2[x * ny2 + y];
    }
  }
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double m = pux[u * nx + x];
      if (m == 0.0) continue;
      for (std::size_t y = 0; y < ny1; ++y) puy1[u * ny1 + y] += m * ct.w1[x * ny1 + y];
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double m = pvx[v * nx + x];
      if (m == 0.0) continue;
      for (std::size_t y = 0; y < ny2; ++y) pvy2[v * ny2 + y] += m * ct.w2[x * ny2 + y];
    }
  }

  const double hu = entropy(std::span<const double>(pu));
  const double hv = entropy(std::span<const double>(pv));
  const double hx = entropy(std::span<const double>(px));
  const double hy1 = entropy(std::span<const double>(py1));
  const double hy2 = entropy(std::span<const double>(py2));
  const double iuy1 = hu + hy1 - entropy(std::span<const double>(puy1));
  const double ivy2 = hv + hy2 - entropy(std::span<const double>(pvy2));
  const double iuv = hu + hv - entropy(std::span<const double>(puv));
  const double ixy1 = hx + hy1 - entropy(std::span<const double>(pxy1));
  const double ixy2 = hx + hy2 - entropy(std::span<const double>(pxy2));

  const double inner = iuy1 + ivy2 - iuv;
  const double cap = std::max(ixy1, ixy2);
  if (inner_out) *inner_out = inner;
  if (cap_out) *cap_out = cap;
  return inner - cap;
}

double gap_objective_reference(const JointPmf& j, const BroadcastChannel& ch) {
  const JointPmf j1 = extend_through_channel(j, ch, Var::Y1);
  const JointPmf j12 = extend_through_channel(j1, ch, Var::Y2);
  const double iuy1 = mutual_information(j12, {Var::U}, {Var::Y1});
  const double ivy2 = mutual_information(j12, {Var::V}, {Var::Y2});
  const double iuv = mutual_information(j12, {Var::U}, {Var::V});
  const double ixy1 = mutual_information(j12, {Var::X}, {Var::Y1});
  const double ixy2 = mutual_information(j12, {Var::X}, {Var::Y2});
  return iuy1 + ivy2 - iuv - std::max(ixy1, ixy2);
}

MartonCaps marton_caps(std::span<const double> t, std::size_t nu, std::size_t nv,
                       std::size_t nw, const ChannelTables& ct) {
  const std::size_t nx = ct.nx, ny1 = ct.ny1, ny2 = ct.ny2;
  thread_local std::vector<double> px, pw, puw, pvw, puvw, pwx, puwx, pvwx, py1,
      py2, pwy1, pwy2, puwy1, pvwy2;
  px.assign(nx, 0.0);
  pw.assign(nw, 0.0);
  puw.assign(nu * nw, 0.0);
  pvw.assign(nv * nw, 0.0);
  puvw.assign(nu * nv * nw, 0.0);
  pwx.assign(nw * nx, 0.0);
  puwx.assign(nu * nw * nx, 0.0);
  pvwx.assign(nv * nw * nx, 0.0);

  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t w = 0; w < nw; ++w) {
        const double* row = t.data() + ((u * nv + v) * nw + w) * nx;
        for (std::size_t x = 0; x < nx; ++x) {
          const double m = row[x];
          px[x] += m;
          pw[w] += m;
          puw[u * nw + w] += m;
          pvw[v * nw + w] += m;
          puvw[(u * nv + v) * nw + w] += m;
          pwx[w * nx + x] += m;
          puwx[(u * nw + w) * nx + x] += m;
          pvwx[(v * nw + w) * nx + x] += m;
        }
      }
    }
  }

  py1.assign(ny1, 0.0);
  py2.assign(ny2, 0.0);
  pwy1.assign(nw * ny1, 0.0);
  pwy2.assign(nw * ny2, 0.0);
  puwy1.assign(nu * nw * ny1, 0.0);
  pvwy2.assign(nv * nw * ny2, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny1; ++y) py1[y] += px[x] * ct.w1[x * ny1 + y];
    for (std::size_t y = 0; y < ny2; ++y) py2[y] += px[x] * ct.w2[x * ny2 + y];
  }
  for (std::size_t w = 0; w < nw; ++w) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double m = pwx[w * nx + x];
      if (m == 0.0) continue;
      for (std::size_t y = 0; y < ny1; ++y) pwy1[w * ny1 + y] += m * ct.w1[x * ny1 + y];
      for (std::size_t y = 0; y < ny2; ++y) pwy2[w * ny2 + y] += m * ct.w2[x * ny2 + y];
    }
  }
  for (std::size_t uw = 0; uw < nu * nw; ++uw) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double m = puwx[uw * nx + x];
      if (m == 0.0) continue;
      for (std::size_t y = 0; y < ny1; ++y) puwy1[uw * ny1 + y] += m * ct.w1[x * ny1 + y];
    }
  }
  for (std::size_t vw = 0; vw < nv * nw; ++vw) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double m = pvwx[vw * nx + x];
      if (m == 0.0) continue;
      for (std::size_t y = 0; y < ny2; ++y) pvwy2[vw * ny2 + y] += m * ct.w2[x * ny2 + y];
    }
  }

  const double hw = entropy(std::span<const double>(pw));
  const double hy1 = entropy(std::span<const double>(py1));
  const double hy2 = entropy(std::span<const double>(py2));
  const double huw = entropy(std::span<const double>(puw));
  const double hvw = entropy(std::span<const double>(pvw));
  const double huvw = entropy(std::span<const double>(puvw));
  const double hwy1 = entropy(std::span<const double>(pwy1));
  const double hwy2 = entropy(std::span<const double>(pwy2));
  const double huwy1 = entropy(std::span<const double>(puwy1));
  const double hvwy2 = entropy(std::span<const double>(pvwy2));

  MartonCaps caps;
  caps.c1 = huw + hy1 - huwy1;
  caps.c2 = hvw + hy2 - hvwy2;
  const double iwy1 = hw + hy1 - hwy1;
  const double iwy2 = hw + hy2 - hwy2;
  const double iuy1_w = huw + hwy1 - huwy1 - hw;
  const double ivy2_w = hvw + hwy2 - hvwy2 - hw;
  const double iuv_w = huw + hvw - huvw - hw;
  caps.c3 = std::min(iwy1, iwy2) + iuy1_w + ivy2_w - iuv_w;
  return caps;
}

MartonCaps marton_caps_reference(const JointPmf& j, const BroadcastChannel& ch) {
  const JointPmf j1 = extend_through_channel(j, ch, Var::Y1);
  const JointPmf j12 = extend_through_channel(j1, ch, Var::Y2);
  MartonCaps caps;
  caps.c1 = mutual_information(j12, {Var::U, Var::W}, {Var::Y1});
  caps.c2 = mutual_information(j12, {Var::V, Var::W}, {Var::Y2});
  const double iwy1 = mutual_information(j12, {Var::W}, {Var::Y1});
  const double iwy2 = mutual_information(j12, {Var::W}, {Var::Y2});
  caps.c3 = std::min(iwy1, iwy2) +
            mutual_information(j12, {Var::U}, {Var::Y1}, {Var::W}) +
            mutual_information(j12, {Var::V}, {Var::Y2}, {Var::W}) -
            mutual_information(j12, {Var::U}, {Var::V}, {Var::W});
  return caps;
}

OuterCaps outer_caps(std::span<const double> t, std::size_t nu, std::size_t nv,
                     const ChannelTables& ct) {
  const std::size_t nx = ct.nx, ny1 = ct.ny1, ny2 = ct.ny2;
  thread_local std::vector<double> px, pu, pv, pux, pvx, puy1, puy2, pvy1, pvy2,
      py1, py2;
  px.assign(nx, 0.0);
  pu.assign(nu, 0.0);
  pv.assign(nv, 0.0);
  pux.assign(nu * nx, 0.0);
  pvx.assign(nv * nx, 0.0);

  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t v = 0; v < nv; ++v) {
      const double* row = t.data() + (u * nv + v) * nx;
      for (std::size_t x = 0; x < nx; ++x) {
        const double m = row[x];
        px[x] += m;
        pux[u * nx + x] += m;
        pvx[v * nx + x] += m;
      }
    }
  }
  double hy1_given_x = 0.0, hy2_given_x = 0.0;
  for (std::size_t x = 0; x < nx; ++x) {
    hy1_given_x += px[x] * ct.h1row[x];
    hy2_given_x += px[x] * ct.h2row[x];
  }
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t x = 0; x < nx; ++x) pu[u] += pux[u * nx + x];
  }
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t x = 0; x < nx; ++x) pv[v] += pvx[v * nx + x];
  }

  py1.assign(ny1, 0.0);
  py2.assign(ny2, 0.0);
  puy1.assign(nu * ny1, 0.0);
  puy2.assign(nu * ny2, 0.0);
  pvy1.assign(nv * ny1, 0.0);
  pvy2.assign(nv * ny2, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny1; ++y) py1[y] += px[x] * ct.w1[x * ny1 + y];
    for (std::size_t y = 0; y < ny2; ++y) py2[y] += px[x] * ct.w2[x * ny2 + y];
  }
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double m = pux[u * nx + x];
      if (m == 0.0) continue;
      for (std::size_t y = 0; y < ny1; ++y) puy1[u * ny1 + y] += m * ct.w1[x * ny1 + y];
      for (std::size_t y = 0; y < ny2; ++y) puy2[u * ny2 + y] += m * ct.w2[x * ny2 + y];
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double m = pvx[v * nx + x];
      if (m == 0.0) continue;
      for (std::size_t y = 0; y < ny1; ++y) pvy1[v * ny1 + y] += m * ct.w1[x * ny1 + y];
      for (std::size_t y = 0; y < ny2; ++y) pvy2[v * ny2 + y] += m * ct.w2[x * ny2 + y];
    }
  }

  const double hu = entropy(std::span<const double>(pu));
  const double hv = entropy(std::span<const double>(pv));
  const double hy1 = entropy(std::span<const double>(py1));
  const double hy2 = entropy(std::span<const double>(py2));
  const double huy1 = entropy(std::span<const double>(puy1));
  const double huy2 = entropy(std::span<const double>(puy2));
  const double hvy1 = entropy(std::span<const double>(pvy1));
  const double hvy2 = entropy(std::span<const double>(pvy2));

  OuterCaps caps;
  caps.a1 = hu + hy1 - huy1;
  caps.a2 = hv + hy2 - hvy2;
  const double ixy2_u = (huy2 - hu) - hy2_given_x;  // I(X;Y2|U)
  const double ixy1_v = (hvy1 - hv) - hy1_given_x;  // I(X;Y1|V)
  caps.sum_a = caps.a1 + ixy2_u;
  caps.sum_b = caps.a2 + ixy1_v;
  caps.a3 = std::min(caps.sum_a, caps.sum_b);
  return caps;
}

OuterCaps outer_caps_reference(const JointPmf& j, const BroadcastChannel& ch) {
  const JointPmf j1 = extend_through_channel(j, ch, Var::Y1);
  const JointPmf j12 = extend_through_channel(j1, ch, Var::Y2);
  OuterCaps caps;
  caps.a1 = mutual_information(j12, {Var::U}, {Var::Y1});
  caps.a2 = mutual_information(j12, {Var::V}, {Var::Y2});
  caps.sum_a = caps.a1 + mutual_information(j12, {Var::X}, {Var::Y2}, {Var::U});
  caps.sum_b = caps.a2 + mutual_information(j12, {Var::X}, {Var::Y1}, {Var::V});
  caps.a3 = std::min(caps.sum_a, caps.sum_b);
  return caps;
}

}  // namespace kernels

BroadcastChannel bssc(double p) {
  if (p < -kMassTol || p > 1.0 + kMassTol) {
    throw std::domain_error("bssc: crossover probability outside [0,1]");
  }
  p = std::clamp(p, 0.0, 1.0);
  TransitionMatrix y1(2, 2, {1.0 - p, p, 0.0, 1.0});
  TransitionMatrix y2(2, 2, {1.0, 0.0, p, 1.0 - p});
  return {std::move(y1), std::move(y2)};
}

CapacityResult single_user_capacity(const BroadcastChannel& ch, Var output,
                                    std::size_t grid, ExecMode mode) {
  if (output != Var::Y1 && output != Var::Y2) {
    throw std::invalid_argument("single_user_capacity: output must be Y1 or Y2");
  }
  const TransitionMatrix& tm = output == Var::Y1 ? ch.to_y1 : ch.to_y2;

  if (ch.input_size() == 2) {
    const std::size_t n = std::max<std::size_t>(grid, 9);
    GridFunction mi = GridFunction::tabulate(
        n, [&](double eta) { return binary_mi(tm, eta); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (mi.values[i] > mi.values[best]) best = i;
    }
    const double h = 1.0 / static_cast<double>(n - 1);
    const double lo = std::max(0.0, mi.x_at(best) - h);
    const double hi = std::min(1.0, mi.x_at(best) + h);
    double eta = mi.x_at(best);
    double bits = golden_max([&](double e) { return binary_mi(tm, e); }, lo, hi,
                             1e-12, &eta);
    if (mi.values[best] > bits) {
      bits = mi.values[best];
      eta = mi.x_at(best);
    }
    return {bits, Pmf({eta, 1.0 - eta})};
  }

  // Larger input alphabets: seeded multi-start over p(X).
  const std::size_t nx = ch.input_size();
  std::vector<double> hrow(nx);
  for (std::size_t x = 0; x < nx; ++x) hrow[x] = entropy(tm.row(x));
  auto objective = [&](std::span<const double> theta) {
    thread_local std::vector<double> p, out;
    softmax(theta, p);
    out.assign(tm.output_size(), 0.0);
    double hy_x = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      hy_x += p[x] * hrow[x];
      for (std::size_t y = 0; y < tm.output_size(); ++y) {
        out[y] += p[x] * tm.prob(x, y);
      }
    }
    return entropy(std::span<const double>(out)) - hy_x;
  };
  auto make_start = [&](std::size_t r, Rng& rng) {
    if (r == 0) return std::vector<double>(nx, 0.0);  // uniform input
    return random_theta(rng, nx);
  };
  PatternOptions opt;
  opt.max_evals = 4000;
  MultistartResult ms = multistart_maximize(32, make_start, objective, opt,
                                            /*seed=*/1, mode);
  std::vector<double> p;
  softmax(ms.best_point, p);
  return {ms.value, Pmf(std::move(p))};
}

double time_division_sum_rate(const BroadcastChannel& ch, std::size_t grid,
                              ExecMode mode) {
  const double c1 = single_user_capacity(ch, Var::Y1, grid, mode).bits;
  const double c2 = single_user_capacity(ch, Var::Y2, grid, mode).bits;
  return std::max(c1, c2);
}

TsplitResult marton_sum_rate_tsplit(const BroadcastChannel& ch,
                                    std::size_t grid3, ExecMode mode) {
  if (ch.input_size() != 2) {
    throw std::invalid_argument("marton_sum_rate_tsplit: binary-input channels only");
  }
  const std::size_t n = std::max<std::size_t>(grid3, 3);
  std::vector<double> hy1(n), hy2(n), ixy1(n), ixy2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(n - 1);
    hy1[i] = out_entropy(ch.to_y1, a);
    hy2[i] = out_entropy(ch.to_y2, a);
    ixy1[i] = binary_mi(ch.to_y1, a);
    ixy2[i] = binary_mi(ch.to_y2, a);
  }

  struct SliceBest {
    double value = -1.0;
    std::size_t ia = 0, ib = 0;
  };
  std::vector<SliceBest> slice(n);
  const double step = 1.0 / static_cast<double>(n - 1);

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::Parallel)
#endif
  for (std::int64_t it = 0; it < static_cast<std::int64_t>(n); ++it) {
    const double tau = static_cast<double>(it) * step;
    SliceBest best;
    for (std::size_t ia = 0; ia < n; ++ia) {
      const double a = static_cast<double>(ia) * step;
      const double ta = tau * a;
      const double contrib_a = tau * ixy1[ia];
      const double h1a = tau * hy1[ia];
      const double h2a = tau * hy2[ia];
      for (std::size_t ib = 0; ib < n; ++ib) {
        const double eta = ta + (1.0 - tau) * (static_cast<double>(ib) * step);
        const double it_y1 = out_entropy(ch.to_y1, eta) - h1a - (1.0 - tau) * hy1[ib];
        const double it_y2 = out_entropy(ch.to_y2, eta) - h2a - (1.0 - tau) * hy2[ib];
        const double v = std::min(it_y1, it_y2) + contrib_a + (1.0 - tau) * ixy2[ib];
        if (v > best.value) {
          best.value = v;
          best.ia = ia;
          best.ib = ib;
        }
      }
    }
    slice[static_cast<std::size_t>(it)] = best;
  }

  std::size_t best_it = 0;
  for (std::size_t it = 1; it < n; ++it) {
    if (slice[it].value > slice[best_it].value) best_it = it;
  }

  auto objective = [&](double tau, double a, double b) {
    const double eta = tau * a + (1.0 - tau) * b;
    const double it_y1 = out_entropy(ch.to_y1, eta) - tau * out_entropy(ch.to_y1, a) -
                         (1.0 - tau) * out_entropy(ch.to_y1, b);
    const double it_y2 = out_entropy(ch.to_y2, eta) - tau * out_entropy(ch.to_y2, a) -
                         (1.0 - tau) * out_entropy(ch.to_y2, b);
    return std::min(it_y1, it_y2) + tau * binary_mi(ch.to_y1, a) +
           (1.0 - tau) * binary_mi(ch.to_y2, b);
  };

  TsplitResult res;
  res.tau = static_cast<double>(best_it) * step;
  res.a = static_cast<double>(slice[best_it].ia) * step;
  res.b = static_cast<double>(slice[best_it].ib) * step;
  res.bits = slice[best_it].value;
  for (int round = 0; round < 6; ++round) {
    double arg = res.tau;
    double v = golden_max([&](double x) { return objective(x, res.a, res.b); },
                          std::max(0.0, res.tau - step), std::min(1.0, res.tau + step),
                          1e-12, &arg);
    if (v > res.bits) {
      res.bits = v;
      res.tau = arg;
    }
    v = golden_max([&](double x) { return objective(res.tau, x, res.b); },
                   std::max(0.0, res.a - step), std::min(1.0, res.a + step), 1e-12,
                   &arg);
    if (v > res.bits) {
      res.bits = v;
      res.a = arg;
    }
    v = golden_max([&](double x) { return objective(res.tau, res.a, x); },
                   std::max(0.0, res.b - step), std::min(1.0, res.b + step), 1e-12,
                   &arg);
    if (v > res.bits) {
      res.bits = v;
      res.b = arg;
    }
  }
  return res;
}

namespace {

// p(u,v,w,x) table realizing a binary time split: w carries T, the favored
// receiver's auxiliary copies X, the other is constant.
std::vector<double> tsplit_table(std::size_t cu, std::size_t cv, std::size_t cw,
                                 const TsplitResult& ts) {
  std::vector<double> t(cu * cv * cw * 2, 0.0);
  auto at = [&](std::size_t u, std::size_t v, std::size_t w, std::size_t x) -> double& {
    return t[((u * cv + v) * cw + w) * 2 + x];
  };
  at(0, 0, 0, 0) += ts.tau * ts.a;
  at(1, 0, 0, 1) += ts.tau * (1.0 - ts.a);
  at(0, 0, 1, 0) += (1.0 - ts.tau) * ts.b;
  at(0, 1, 1, 1) += (1.0 - ts.tau) * (1.0 - ts.b);
  return t;
}

// p(u,v,w,x) with the named auxiliary copying X at the given input law.
std::vector<double> copy_aux_table(std::size_t cu, std::size_t cv, std::size_t cw,
                                   double eta, bool copy_into_u) {
  std::vector<double> t(cu * cv * cw * 2, 0.0);
  auto at = [&](std::size_t u, std::size_t v, std::size_t w, std::size_t x) -> double& {
    return t[((u * cv + v) * cw + w) * 2 + x];
  };
  if (copy_into_u) {
    at(0, 0, 0, 0) = eta;
    at(1, 0, 0, 1) = 1.0 - eta;
  } else {
    at(0, 0, 0, 0) = eta;
    at(0, 1, 0, 1) = 1.0 - eta;
  }
  return t;
}

}  // namespace

MartonResult marton_weighted_max(const BroadcastChannel& ch, double lambda,
                                 const SearchConfig& cfg, ExecMode mode,
                                 const std::vector<JointPmf>& warm_starts) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument("marton_weighted_max: lambda outside [0,1]");
  }
  const std::size_t nx = ch.input_size();
  const std::size_t cu = cfg.card_u ? cfg.card_u : nx;
  const std::size_t cv = cfg.card_v ? cfg.card_v : nx;
  const std::size_t cw = std::max<std::size_t>(cfg.card_w, 1);
  const kernels::ChannelTables ct = kernels::make_tables(ch);
  const std::size_t k = cu * cv * cw * nx;

  std::vector<std::vector<double>> starts;
  if (nx == 2 && cu >= 2 && cv >= 2) {
    if (cw >= 2) {
      const TsplitResult ts = marton_sum_rate_tsplit(ch, 41, mode);
      starts.push_back(theta_from_table(tsplit_table(cu, cv, cw, ts)));
    }
    const double e1 = single_user_capacity(ch, Var::Y1, 1025, mode).argmax[0];
    const double e2 = single_user_capacity(ch, Var::Y2, 1025, mode).argmax[0];
    starts.push_back(theta_from_table(copy_aux_table(cu, cv, cw, e1, true)));
    starts.push_back(theta_from_table(copy_aux_table(cu, cv, cw, e2, false)));
  }
  for (const JointPmf& w : warm_starts) {
    if (w.table().size() == k) starts.push_back(theta_from_table(w.table()));
  }

  auto objective = [&](std::span<const double> theta) {
    thread_local std::vector<double> t;
    softmax(theta, t);
    const kernels::MartonCaps caps = kernels::marton_caps(t, cu, cv, cw, ct);
    return kernels::polytope_weighted_max(lambda, caps.c1, caps.c2, caps.c3);
  };
  auto make_start = [&](std::size_t r, Rng& rng) {
    if (r < starts.size()) return starts[r];
    return random_theta(rng, k);
  };

  PatternOptions opt;
  opt.max_evals = cfg.iterations;
  opt.init_step = 1.0;
  opt.min_step = 1.0 / 4096.0;
  const std::size_t restarts = std::max(cfg.restarts, starts.size() + 1);
  MultistartResult ms =
      multistart_maximize(restarts, make_start, objective, opt, cfg.seed, mode);

  std::vector<double> table;
  softmax(ms.best_point, table);
  auto value_of = [&](const std::vector<double>& t) {
    const kernels::MartonCaps caps = kernels::marton_caps(t, cu, cv, cw, ct);
    return kernels::polytope_weighted_max(lambda, caps.c1, caps.c2, caps.c3);
  };
  // Supplied warm starts are feasible joints; evaluating them exactly keeps
  // the result from ever dipping below a point we were handed (the softmax
  // round-trip smooths tables slightly).
  double best = value_of(table);
  for (const JointPmf& w : warm_starts) {
    if (w.table().size() == k && value_of(w.table()) > best) {
      table = w.table();
      best = value_of(table);
    }
  }
  const kernels::MartonCaps caps = kernels::marton_caps(table, cu, cv, cw, ct);
  MartonResult res;
  res.lambda = lambda;
  res.value =
      kernels::polytope_weighted_max(lambda, caps.c1, caps.c2, caps.c3, &res.rates);
  res.sum_cap = caps.c3;
  res.witness = JointPmf({Var::U, Var::V, Var::W, Var::X}, {cu, cv, cw, nx},
                         std::move(table));
  return res;
}

namespace {

struct BinaryGrids {
  std::size_t n = 0;
  GridFunction hy1, hy2, ixy1, ixy2;
};

BinaryGrids binary_grids(const BroadcastChannel& ch, std::size_t n) {
  BinaryGrids g;
  g.n = n;
  g.hy1 = GridFunction::tabulate(n, [&](double a) { return out_entropy(ch.to_y1, a); });
  g.hy2 = GridFunction::tabulate(n, [&](double a) { return out_entropy(ch.to_y2, a); });
  g.ixy1 = GridFunction::tabulate(n, [&](double a) { return binary_mi(ch.to_y1, a); });
  g.ixy2 = GridFunction::tabulate(n, [&](double a) { return binary_mi(ch.to_y2, a); });
  return g;
}

// Hull segment of grid position pos (fractional index); returns vertex
// indices and the weight on the left one.
struct AtomIdx {
  std::size_t left, right;
  double w_left;
};

AtomIdx hull_atoms_at(const std::vector<std::size_t>& hull, double pos) {
  std::size_t lo = 0, hi = hull.size() - 1;
  if (hull.size() == 1) return {hull[0], hull[0], 1.0};
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (static_cast<double>(hull[mid]) <= pos) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const std::size_t i0 = hull[lo], i1 = hull[lo + 1];
  if (pos <= static_cast<double>(i0)) return {i0, i0, 1.0};
  if (pos >= static_cast<double>(i1)) return {i1, i1, 1.0};
  const double w = (static_cast<double>(i1) - pos) / static_cast<double>(i1 - i0);
  return {i0, i1, w};
}

// Two-atom conditional decomposition on one side, as p(aux, x) over a binary
// X with P(X=0) = alpha per atom.
struct SideMixture {
  double alpha[2];
  double weight[2];
};

SideMixture side_mixture(const BinaryGrids& g, const AtomIdx& atoms) {
  const double denom = static_cast<double>(g.n - 1);
  SideMixture m;
  m.alpha[0] = static_cast<double>(atoms.left) / denom;
  m.alpha[1] = static_cast<double>(atoms.right) / denom;
  m.weight[0] = atoms.w_left;
  m.weight[1] = 1.0 - atoms.w_left;
  return m;
}

// Conditionally independent coupling p(u,v,x) = p(x) p(u|x) p(v|x) of two
// side mixtures sharing the same X marginal.
JointPmf couple_sides(const SideMixture& mu, const SideMixture& mv) {
  double px[2] = {0.0, 0.0};
  double pux[2][2], pvx[2][2];
  for (std::size_t u = 0; u < 2; ++u) {
    pux[u][0] = mu.weight[u] * mu.alpha[u];
    pux[u][1] = mu.weight[u] * (1.0 - mu.alpha[u]);
  }
  for (std::size_t v = 0; v < 2; ++v) {
    pvx[v][0] = mv.weight[v] * mv.alpha[v];
    pvx[v][1] = mv.weight[v] * (1.0 - mv.alpha[v]);
  }
  for (std::size_t u = 0; u < 2; ++u) {
    px[0] += pux[u][0];
    px[1] += pux[u][1];
  }
  std::vector<double> t(8, 0.0);
  for (std::size_t x = 0; x < 2; ++x) {
    if (px[x] <= 0.0) continue;
    for (std::size_t u = 0; u < 2; ++u) {
      for (std::size_t v = 0; v < 2; ++v) {
        t[(u * 2 + v) * 2 + x] = pux[u][x] * pvx[v][x] / px[x];
      }
    }
  }
  // Guard against rounding drift before validation.
  double mass = 0.0;
  for (double m : t) mass += m;
  if (mass > 0.0 && std::abs(mass - 1.0) > 1e-14) {
    for (double& m : t) m /= mass;
  }
  return joint_uvx(2, 2, 2, std::move(t));
}

}  // namespace

DirectSearchResult outer_sum_rate_direct(const BroadcastChannel& ch,
                                         std::size_t card_u, std::size_t card_v,
                                         const SearchConfig& cfg, ExecMode mode,
                                         const std::vector<JointPmf>& warm_starts) {
  const std::size_t nx = ch.input_size();
  const kernels::ChannelTables ct = kernels::make_tables(ch);
  const std::size_t k = card_u * card_v * nx;

  std::vector<std::vector<double>> starts;
  if (card_u >= nx && card_v >= nx) {
    // U = V = X at uniform input.
    std::vector<double> diag(k, 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      diag[(x * card_v + x) * nx + x] = 1.0 / static_cast<double>(nx);
    }
    starts.push_back(theta_from_table(diag));
  }
  for (const JointPmf& w : warm_starts) {
    if (w.table().size() == k) starts.push_back(theta_from_table(w.table()));
  }

  auto objective = [&](std::span<const double> theta) {
    thread_local std::vector<double> t;
    softmax(theta, t);
    return kernels::outer_caps(t, card_u, card_v, ct).a3;
  };
  auto make_start = [&](std::size_t r, Rng& rng) {
    if (r < starts.size()) return starts[r];
    return random_theta(rng, k);
  };

  PatternOptions opt;
  opt.max_evals = cfg.iterations;
  opt.init_step = 1.0;
  opt.min_step = 1.0 / 4096.0;
  const std::size_t restarts = std::max(cfg.restarts, starts.size() + 1);
  MultistartResult ms =
      multistart_maximize(restarts, make_start, objective, opt, cfg.seed, mode);

  std::vector<double> table;
  softmax(ms.best_point, table);
  // Exact warm-start evaluation, as in marton_weighted_max.
  double best = kernels::outer_caps(table, card_u, card_v, ct).a3;
  for (const JointPmf& w : warm_starts) {
    if (w.table().size() == k &&
        kernels::outer_caps(w.table(), card_u, card_v, ct).a3 > best) {
      table = w.table();
      best = kernels::outer_caps(table, card_u, card_v, ct).a3;
    }
  }
  DirectSearchResult res;
  res.value = best;
  res.witness = joint_uvx(card_u, card_v, nx, std::move(table));
  return res;
}

OuterSumRate outer_sum_rate(const BroadcastChannel& ch, const SearchConfig& cfg,
                            ExecMode mode) {
  const std::size_t nx = ch.input_size();
  if (nx != 2) {
    const std::size_t cu = cfg.card_u ? cfg.card_u : nx + 1;
    const std::size_t cv = cfg.card_v ? cfg.card_v : nx + 1;
    DirectSearchResult d = outer_sum_rate_direct(ch, cu, cv, cfg, mode);
    OuterSumRate res;
    res.bits = d.value;
    res.method = "multistart";
    res.witness = std::move(d.witness);
    const kernels::ChannelTables ct = kernels::make_tables(ch);
    const kernels::OuterCaps caps =
        kernels::outer_caps(res.witness->table(), cu, cv, ct);
    res.term_a = caps.sum_a;
    res.term_b = caps.sum_b;
    return res;
  }

  const std::size_t n = std::max<std::size_t>(cfg.grid, 9);
  const BinaryGrids g = binary_grids(ch, n);
  GridFunction phi_a, phi_b;
  phi_a.values.resize(n);
  phi_b.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    phi_a.values[i] = g.ixy2.values[i] - g.hy1.values[i];
    phi_b.values[i] = g.ixy1.values[i] - g.hy2.values[i];
  }
  const EnvelopeResult env_a = upper_concave_envelope(phi_a);
  const EnvelopeResult env_b = upper_concave_envelope(phi_b);

  std::size_t best = 0;
  double best_val = -1e300;
  for (std::size_t i = 0; i < n; ++i) {
    const double term_a = g.hy1.values[i] + env_a.envelope.values[i];
    const double term_b = g.hy2.values[i] + env_b.envelope.values[i];
    const double v = std::min(term_a, term_b);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  auto hat_a = [&](double e) {
    return out_entropy(ch.to_y1, e) + envelope_at(phi_a, env_a.hull, e);
  };
  auto hat_b = [&](double e) {
    return out_entropy(ch.to_y2, e) + envelope_at(phi_b, env_b.hull, e);
  };
  const double h = 1.0 / static_cast<double>(n - 1);
  double eta = phi_a.x_at(best);
  double bits = golden_max(
      [&](double e) { return std::min(hat_a(e), hat_b(e)); },
      std::max(0.0, eta - h), std::min(1.0, eta + h), 1e-12, &eta);
  if (best_val > bits) {
    bits = best_val;
    eta = phi_a.x_at(best);
  }

  OuterSumRate res;
  res.bits = bits;
  res.eta = eta;
  res.term_a = hat_a(eta);
  res.term_b = hat_b(eta);
  res.method = "envelope-grid(" + std::to_string(n) + ")";
  const double pos = eta * static_cast<double>(n - 1);
  const SideMixture ma = side_mixture(g, hull_atoms_at(env_a.hull, pos));
  const SideMixture mb = side_mixture(g, hull_atoms_at(env_b.hull, pos));
  res.witness = couple_sides(ma, mb);
  return res;
}

RegionSample outer_region(const BroadcastChannel& ch,
                          const std::vector<double>& lambdas,
                          const SearchConfig& cfg, ExecMode mode) {
  RegionSample sample;
  const OuterSumRate sum = outer_sum_rate(ch, cfg, mode);
  sample.sum_rate = sum.bits;
  sample.sum_witness = sum.witness;
  sample.method = sum.method;

  const std::size_t nx = ch.input_size();
  if (nx != 2) {
    const std::size_t cu = cfg.card_u ? cfg.card_u : nx + 1;
    const std::size_t cv = cfg.card_v ? cfg.card_v : nx + 1;
    const kernels::ChannelTables ct = kernels::make_tables(ch);
    for (double lambda : lambdas) {
      auto objective = [&](std::span<const double> theta) {
        thread_local std::vector<double> t;
        softmax(theta, t);
        const kernels::OuterCaps caps = kernels::outer_caps(t, cu, cv, ct);
        return kernels::polytope_weighted_max(lambda, caps.a1, caps.a2, caps.a3);
      };
      auto make_start = [&](std::size_t, Rng& rng) {
        return random_theta(rng, cu * cv * nx);
      };
      PatternOptions opt;
      opt.max_evals = cfg.iterations;
      MultistartResult ms = multistart_maximize(std::max<std::size_t>(cfg.restarts, 1),
                                                make_start, objective, opt, cfg.seed,
                                                mode);
      std::vector<double> table;
      softmax(ms.best_point, table);
      const kernels::OuterCaps caps = kernels::outer_caps(table, cu, cv, ct);
      WeightedMax wm;
      wm.lambda = lambda;
      wm.value = kernels::polytope_weighted_max(lambda, caps.a1, caps.a2, caps.a3,
                                                &wm.rates);
      wm.witness = joint_uvx(cu, cv, nx, std::move(table));
      sample.maxima.push_back(std::move(wm));
    }
    return sample;
  }

  // Binary inputs: for each P(X=0) the achievable (I(U;Y1), sum-term) set is
  // convex; its frontier is traced by scalarized envelopes and the polytope
  // maximum is exact per frontier pair.
  const std::size_t n = std::max<std::size_t>(cfg.grid, 9);
  const BinaryGrids g = binary_grids(ch, n);
  constexpr std::size_t kMu = 33;

  struct FrontierPair {
    double cap;        // I(aux;Y) at this frontier point
    double sum;        // full sum-rate term
    AtomIdx atoms;
  };
  // frontier[i] holds Pareto pairs of side A then side B for grid point i.
  std::vector<std::vector<FrontierPair>> frontier_a(n), frontier_b(n);

  for (int side = 0; side < 2; ++side) {
    const GridFunction& hy = side == 0 ? g.hy1 : g.hy2;
    const GridFunction& ix_other = side == 0 ? g.ixy2 : g.ixy1;
    std::vector<std::vector<std::size_t>> hulls(kMu);
    GridFunction psi;
    psi.values.resize(n);
    for (std::size_t kmu = 0; kmu < kMu; ++kmu) {
      const double mu = static_cast<double>(kmu) / static_cast<double>(kMu - 1);
      for (std::size_t i = 0; i < n; ++i) {
        psi.values[i] = (1.0 - mu) * ix_other.values[i] - hy.values[i];
      }
      hulls[kmu] = upper_concave_envelope(psi).hull;
    }
    auto& frontier = side == 0 ? frontier_a : frontier_b;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (mode == ExecMode::Parallel)
#endif
    for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      std::vector<FrontierPair> pairs;
      pairs.reserve(kMu);
      for (std::size_t kmu = 0; kmu < kMu; ++kmu) {
        const AtomIdx atoms = hull_atoms_at(hulls[kmu], static_cast<double>(i));
        const double wl = atoms.w_left, wr = 1.0 - atoms.w_left;
        const double cap = hy.values[i] -
                           (wl * hy.values[atoms.left] + wr * hy.values[atoms.right]);
        const double sum = cap + wl * ix_other.values[atoms.left] +
                           wr * ix_other.values[atoms.right];
        pairs.push_back({cap, sum, atoms});
      }
      // Pareto filter: drop pairs dominated in both coordinates.
      std::vector<FrontierPair> kept;
      for (const FrontierPair& p : pairs) {
        bool dominated = false;
        for (const FrontierPair& q : pairs) {
          if (q.cap >= p.cap + 1e-15 && q.sum >= p.sum + 1e-15) {
            dominated = true;
            break;
          }
        }
        if (!dominated) kept.push_back(p);
      }
      frontier[i] = std::move(kept);
    }
  }

  for (double lambda : lambdas) {
    struct EtaBest {
      double value = -1e300;
      std::size_t ja = 0, jb = 0;
    };
    std::vector<EtaBest> per_eta(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (mode == ExecMode::Parallel)
#endif
    for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      EtaBest best;
      for (std::size_t ja = 0; ja < frontier_a[i].size(); ++ja) {
        for (std::size_t jb = 0; jb < frontier_b[i].size(); ++jb) {
          const FrontierPair& pa = frontier_a[i][ja];
          const FrontierPair& pb = frontier_b[i][jb];
          const double v = kernels::polytope_weighted_max(
              lambda, pa.cap, pb.cap, std::min(pa.sum, pb.sum));
          if (v > best.value) {
            best.value = v;
            best.ja = ja;
            best.jb = jb;
          }
        }
      }
      per_eta[i] = best;
    }
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (per_eta[i].value > per_eta[best_i].value) best_i = i;
    }

    const FrontierPair& pa = frontier_a[best_i][per_eta[best_i].ja];
    const FrontierPair& pb = frontier_b[best_i][per_eta[best_i].jb];
    WeightedMax wm;
    wm.lambda = lambda;
    wm.value = kernels::polytope_weighted_max(lambda, pa.cap, pb.cap,
                                              std::min(pa.sum, pb.sum), &wm.rates);
    wm.witness = couple_sides(side_mixture(g, pa.atoms), side_mixture(g, pb.atoms));
    sample.maxima.push_back(std::move(wm));
  }
  return sample;
}

GapResult conjecture_gap_search(const BroadcastChannel& ch, const SearchConfig& cfg,
                                ExecMode mode, bool restrict_small_marginal) {
  const std::size_t nx = ch.input_size();
  if (restrict_small_marginal && nx != 2) {
    throw std::invalid_argument(
        "conjecture_gap_search: marginal restriction needs binary inputs");
  }
  const std::size_t cu = cfg.card_u ? cfg.card_u : 4;
  const std::size_t cv = cfg.card_v ? cfg.card_v : 4;
  const kernels::ChannelTables ct = kernels::make_tables(ch);
  const std::size_t k_table = cu * cv * nx;
  const std::size_t k = restrict_small_marginal ? k_table + 1 : k_table;

  // The extra coordinate (restricted mode) picks P(X=0) inside
  // [0, 1/5] u [4/5, 1]; the table's X slices are rescaled to pin it.
  auto build_table = [&](std::span<const double> theta, std::vector<double>& t) {
    softmax(theta.subspan(0, k_table), t);
    if (!restrict_small_marginal) return;
    const double u = 1.0 / (1.0 + std::exp(-theta[k_table]));
    const double eta = u < 0.5 ? 0.4 * u : 1.0 - 0.4 * (1.0 - u);
    double q0 = 0.0;
    for (std::size_t uv = 0; uv < cu * cv; ++uv) q0 += t[uv * 2];
    const double q1 = 1.0 - q0;
    const double f0 = q0 > 0.0 ? eta / q0 : 0.0;
    const double f1 = q1 > 0.0 ? (1.0 - eta) / q1 : 0.0;
    for (std::size_t uv = 0; uv < cu * cv; ++uv) {
      t[uv * 2] *= f0;
      t[uv * 2 + 1] *= f1;
    }
  };

  auto objective = [&](std::span<const double> theta) {
    thread_local std::vector<double> t;
    build_table(theta, t);
    return kernels::gap_objective(t, cu, cv, ct);
  };
  auto make_start = [&](std::size_t, Rng& rng) { return random_theta(rng, k); };

  PatternOptions opt;
  opt.max_evals = cfg.iterations;
  opt.init_step = 1.0;
  opt.min_step = 1.0 / 4096.0;
  MultistartResult ms = multistart_maximize(std::max<std::size_t>(cfg.restarts, 1),
                                            make_start, objective, opt, cfg.seed,
                                            mode);

  std::vector<double> table;
  build_table(ms.best_point, table);
  GapResult res;
  res.restricted = restrict_small_marginal;
  res.gap = kernels::gap_objective(table, cu, cv, ct, &res.inner_term,
                                   &res.capacity_term);
  res.witness = joint_uvx(cu, cv, nx, std::move(table));
  return res;
}

ChainValues lemma_chain_check(const JointPmf& j, const BroadcastChannel& ch) {
  const JointPmf j1 = extend_through_channel(j, ch, Var::Y1);
  const JointPmf j12 = extend_through_channel(j1, ch, Var::Y2);
  ChainValues c;
  const double iuy1 = mutual_information(j12, {Var::U}, {Var::Y1});
  const double ivy2 = mutual_information(j12, {Var::V}, {Var::Y2});
  const double iuv = mutual_information(j12, {Var::U}, {Var::V});
  c.t1 = iuy1 + ivy2 - iuv;
  c.t2 = ivy2 + mutual_information(j12, {Var::U}, {Var::Y1}, {Var::V});
  c.t3 = ivy2 + mutual_information(j12, {Var::X}, {Var::Y1}, {Var::V});
  c.t4 = mutual_information(j12, {Var::X}, {Var::Y1}) + ivy2 -
         mutual_information(j12, {Var::V}, {Var::Y1});
  if (c.t1 > c.t2 + 1e-10 || c.t2 > c.t3 + 1e-10 || c.t3 > c.t4 + 1e-10) {
    throw std::logic_error("lemma_chain_check: chain inequality violated");
  }
  return c;
}

}  // namespace bcb
