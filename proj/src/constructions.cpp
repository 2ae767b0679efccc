#include "bcbounds/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcb {

namespace {

// Table of src reindexed to (U,V,X) axis order.
struct Uvx {
  std::size_t nu, nv, nx;
  std::vector<double> t;  // t[(u*nv + v)*nx + x]
};

Uvx canonical_uvx(const JointPmf& src) {
  if (src.rank() != 3 || !src.has(Var::U) || !src.has(Var::V) || !src.has(Var::X)) {
    throw std::invalid_argument("expected a joint with axes exactly {U,V,X}");
  }
  const std::size_t au = src.axis_index(Var::U);
  const std::size_t av = src.axis_index(Var::V);
  const std::size_t ax = src.axis_index(Var::X);
  Uvx out;
  out.nu = src.sizes()[au];
  out.nv = src.sizes()[av];
  out.nx = src.sizes()[ax];
  out.t.assign(out.nu * out.nv * out.nx, 0.0);

  std::size_t stride[3] = {1, 1, 1};
  for (std::size_t i = 3; i-- > 1;) stride[i - 1] = stride[i] * src.sizes()[i];
  for (std::size_t flat = 0; flat < src.table().size(); ++flat) {
    const std::size_t u = (flat / stride[au]) % src.sizes()[au];
    const std::size_t v = (flat / stride[av]) % src.sizes()[av];
    const std::size_t x = (flat / stride[ax]) % src.sizes()[ax];
    out.t[(u * out.nv + v) * out.nx + x] = src.table()[flat];
  }
  return out;
}

}  // namespace

LiftedTriple lift_to_independent(const JointPmf& src) {
  const Uvx s = canonical_uvx(src);
  const std::size_t m = s.nv;
  const double inv_m = 1.0 / static_cast<double>(m);

  std::vector<double> t(s.nu * m * m * s.nx, 0.0);
  for (std::size_t u = 0; u < s.nu; ++u) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t v = (i + j) % m;
        for (std::size_t x = 0; x < s.nx; ++x) {
          t[((u * m + i) * m + j) * s.nx + x] =
              inv_m * s.t[(u * s.nv + v) * s.nx + x];
        }
      }
    }
  }
  return {JointPmf({Var::U, Var::V, Var::W, Var::X}, {s.nu, m, m, s.nx},
                   std::move(t)),
          m};
}

DeterministicTriple deterministic_lift(const JointPmf& src) {
  const Uvx s = canonical_uvx(src);
  const std::size_t l = s.nx;
  const double inv_l = 1.0 / static_cast<double>(l);
  const std::size_t nu2 = s.nu * l, nv2 = s.nv * l;

  std::vector<double> t(nu2 * nv2 * l, 0.0);
  for (std::size_t u = 0; u < s.nu; ++u) {
    for (std::size_t v = 0; v < s.nv; ++v) {
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
          const std::size_t k = (i + l - j) % l;  // (i - j) mod l
          const std::size_t us = u * l + i, vs = v * l + j;
          t[(us * nv2 + vs) * l + k] = inv_l * s.t[(u * s.nv + v) * s.nx + k];
        }
      }
    }
  }
  return {JointPmf({Var::U, Var::V, Var::X}, {nu2, nv2, l}, std::move(t)), l};
}

double uv_independence_gap(const JointPmf& j) {
  const JointPmf uv = j.marginal({Var::U, Var::V});
  const JointPmf pu = j.marginal({Var::U});
  const JointPmf pv = j.marginal({Var::V});
  const std::size_t nu = pu.table().size(), nv = pv.table().size();
  double tv = 0.0;
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t v = 0; v < nv; ++v) {
      tv += std::abs(uv.table()[u * nv + v] - pu.table()[u] * pv.table()[v]);
    }
  }
  return 0.5 * tv;
}

bool x_deterministic_given_uv(const JointPmf& j) {
  const Uvx s = canonical_uvx(j);
  for (std::size_t uv = 0; uv < s.nu * s.nv; ++uv) {
    std::size_t support = 0;
    for (std::size_t x = 0; x < s.nx; ++x) {
      if (s.t[uv * s.nx + x] > 0.0) ++support;
    }
    if (support > 1) return false;
  }
  return true;
}

SupportFunctionals support_functionals(std::span<const double> weights,
                                       const std::vector<Pmf>& conditionals,
                                       const BroadcastChannel& ch,
                                       PreserveSide side) {
  if (weights.size() != conditionals.size()) {
    throw std::invalid_argument("support_functionals: atom count mismatch");
  }
  const TransitionMatrix& ta = side == PreserveSide::Y1 ? ch.to_y1 : ch.to_y2;
  const TransitionMatrix& tb = side == PreserveSide::Y1 ? ch.to_y2 : ch.to_y1;
  const std::size_t nx = ch.input_size();

  SupportFunctionals f;
  f.x_marginal.assign(nx, 0.0);
  f.cond_output_entropy = 0.0;
  f.cond_mutual_info = 0.0;
  for (std::size_t u = 0; u < weights.size(); ++u) {
    const Pmf& q = conditionals[u];
    if (q.size() != nx) {
      throw std::invalid_argument("support_functionals: conditional size mismatch");
    }
    for (std::size_t x = 0; x < nx; ++x) f.x_marginal[x] += weights[u] * q[x];
    const double ha = entropy(ta.output_dist(q));
    double hb = entropy(tb.output_dist(q));
    for (std::size_t x = 0; x < nx; ++x) hb -= q[x] * entropy(tb.row(x));
    f.cond_output_entropy += weights[u] * ha;
    f.cond_mutual_info += weights[u] * hb;
  }
  return f;
}

namespace {

// One nonzero vector in the null space of the m x n matrix (n > rank), found
// by reduced row echelon form with per-column partial pivoting. The first
// pivot-free column carries the free unit coordinate.
std::vector<double> null_vector(std::vector<double> a, std::size_t m, std::size_t n) {
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  const double tol = std::max(scale, 1.0) * 1e-12;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  std::vector<char> is_pivot(n, 0);
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < m; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[best * n + col])) best = r;
    }
    if (std::abs(a[best * n + col]) <= tol) continue;
    if (best != row) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[row * n + c], a[best * n + c]);
    }
    const double inv = 1.0 / a[row * n + col];
    for (std::size_t c = 0; c < n; ++c) a[row * n + c] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row) continue;
      const double factor = a[r * n + col];
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) a[r * n + c] -= factor * a[row * n + c];
    }
    pivot_col.push_back(col);
    is_pivot[col] = 1;
    ++row;
  }

  std::size_t free_col = n;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == n) {
    throw std::runtime_error("reduce_support: no kernel direction found");
  }

  std::vector<double> d(n, 0.0);
  d[free_col] = 1.0;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    d[pivot_col[r]] = -a[r * n + free_col];
  }
  return d;
}

}  // namespace

ReducedSupport reduce_support(std::span<const double> weights,
                              const std::vector<Pmf>& conditionals,
                              const BroadcastChannel& ch, PreserveSide side) {
  if (weights.size() != conditionals.size() || weights.empty()) {
    throw std::invalid_argument("reduce_support: atom count mismatch");
  }
  const TransitionMatrix& ta = side == PreserveSide::Y1 ? ch.to_y1 : ch.to_y2;
  const TransitionMatrix& tb = side == PreserveSide::Y1 ? ch.to_y2 : ch.to_y1;
  const std::size_t nx = ch.input_size();
  const std::size_t target = nx + 2;

  ReducedSupport out;
  for (std::size_t u = 0; u < weights.size(); ++u) {
    if (weights[u] > 0.0) {
      out.weights.push_back(weights[u]);
      out.kept.push_back(u);
    }
  }

  // Per-atom constraint column: p(X=x) for x < nx-1, normalization, then the
  // two preserved functionals.
  const std::size_t rows = (nx - 1) + 1 + 2;
  auto column = [&](std::size_t atom, double* col) {
    const Pmf& q = conditionals[atom];
    for (std::size_t x = 0; x + 1 < nx; ++x) col[x] = q[x];
    col[nx - 1] = 1.0;
    col[nx] = entropy(ta.output_dist(q));
    double hb = entropy(tb.output_dist(q));
    for (std::size_t x = 0; x < nx; ++x) hb -= q[x] * entropy(tb.row(x));
    col[nx + 1] = hb;
  };

  while (out.kept.size() > target) {
    const std::size_t n = out.kept.size();
    std::vector<double> a(rows * n);
    std::vector<double> col(rows);
    for (std::size_t u = 0; u < n; ++u) {
      column(out.kept[u], col.data());
      for (std::size_t r = 0; r < rows; ++r) a[r * n + u] = col[r];
    }
    std::vector<double> d = null_vector(std::move(a), rows, n);

    // The normalization row forces mixed signs; orient so some weight drops.
    bool has_negative = false;
    for (double v : d) {
      if (v < 0.0) {
        has_negative = true;
        break;
      }
    }
    if (!has_negative) {
      for (double& v : d) v = -v;
    }

    // Smallest ratio exits; scanning in ascending order and replacing only on
    // strict improvement retires the smallest atom index on ties.
    double t_star = 0.0;
    std::size_t exit_atom = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (d[u] < 0.0) {
        const double t = out.weights[u] / (-d[u]);
        if (exit_atom == n || t < t_star) {
          t_star = t;
          exit_atom = u;
        }
      }
    }
    if (exit_atom == n) {
      throw std::runtime_error("reduce_support: kernel direction has no descent");
    }

    std::vector<double> w2;
    std::vector<std::size_t> kept2;
    for (std::size_t u = 0; u < n; ++u) {
      double w = out.weights[u] + t_star * d[u];
      if (u == exit_atom) w = 0.0;
      if (w < 0.0) {
        if (w < -1e-12) {
          throw std::runtime_error("reduce_support: weight went negative");
        }
        w = 0.0;
      }
      if (w > 1e-15) {
        w2.push_back(w);
        kept2.push_back(out.kept[u]);
      }
    }
    if (kept2.size() >= out.kept.size()) {
      throw std::runtime_error("reduce_support: pivot failed to shrink support");
    }
    out.weights = std::move(w2);
    out.kept = std::move(kept2);
    ++out.iterations;
  }
  return out;
}

}  // namespace bcb
