#include "bcbounds/prob.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bcb {

double plog2p(double p) {
  return p > 0.0 ? p * std::log2(p) : 0.0;
}

double binary_entropy(double p) {
  if (p < -kMassTol || p > 1.0 + kMassTol) {
    throw std::domain_error("binary_entropy: probability " + std::to_string(p) +
                            " outside [0,1]");
  }
  p = std::clamp(p, 0.0, 1.0);
  return -plog2p(p) - plog2p(1.0 - p);
}

double entropy(std::span<const double> weights) {
  double acc = 0.0;
  for (double w : weights) acc -= plog2p(w);
  return acc;
}

namespace {

void validate_weights(const std::vector<double>& w, const char* what) {
  double mass = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] >= 0.0)) {
      throw std::invalid_argument(std::string(what) + ": weight " +
                                  std::to_string(i) + " is negative (" +
                                  std::to_string(w[i]) + ")");
    }
    mass += w[i];
  }
  if (std::abs(mass - 1.0) > kMassTol) {
    throw std::invalid_argument(std::string(what) + ": weights sum to " +
                                std::to_string(mass) +
                                ", expected 1 within 1e-12");
  }
}

}  // namespace

Pmf::Pmf(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("Pmf: empty weight vector");
  validate_weights(weights_, "Pmf");
}

Pmf Pmf::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Pmf::uniform: n must be positive");
  return Pmf(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Pmf Pmf::point_mass(std::size_t n, std::size_t at) {
  if (at >= n) throw std::invalid_argument("Pmf::point_mass: index out of range");
  std::vector<double> w(n, 0.0);
  w[at] = 1.0;
  return Pmf(std::move(w));
}

double entropy(const Pmf& p) { return entropy(p.span()); }

TransitionMatrix::TransitionMatrix(std::size_t input_size,
                                   std::size_t output_size,
                                   std::vector<double> flat)
    : in_(input_size), out_(output_size), flat_(std::move(flat)) {
  if (in_ == 0 || out_ == 0) {
    throw std::invalid_argument("TransitionMatrix: alphabet sizes must be positive");
  }
  if (flat_.size() != in_ * out_) {
    throw std::invalid_argument("TransitionMatrix: flat size mismatch");
  }
  for (std::size_t x = 0; x < in_; ++x) {
    double mass = 0.0;
    for (std::size_t y = 0; y < out_; ++y) {
      double v = flat_[x * out_ + y];
      if (!(v >= 0.0)) {
        throw std::invalid_argument("TransitionMatrix: row " + std::to_string(x) +
                                    " has a negative entry");
      }
      mass += v;
    }
    if (std::abs(mass - 1.0) > kMassTol) {
      throw std::invalid_argument("TransitionMatrix: row " + std::to_string(x) +
                                  " sums to " + std::to_string(mass) +
                                  ", expected 1 within 1e-12");
    }
  }
}

TransitionMatrix::TransitionMatrix(const std::vector<Pmf>& rows)
    : TransitionMatrix(rows.size(), rows.empty() ? 0 : rows.front().size(), [&] {
        std::vector<double> flat;
        for (const Pmf& r : rows) {
          if (r.size() != rows.front().size()) {
            throw std::invalid_argument("TransitionMatrix: ragged rows");
          }
          flat.insert(flat.end(), r.weights().begin(), r.weights().end());
        }
        return flat;
      }()) {}

Pmf TransitionMatrix::output_dist(const Pmf& input) const {
  if (input.size() != in_) {
    throw std::invalid_argument("TransitionMatrix: input pmf size mismatch");
  }
  std::vector<double> out(out_, 0.0);
  for (std::size_t x = 0; x < in_; ++x) {
    for (std::size_t y = 0; y < out_; ++y) out[y] += input[x] * prob(x, y);
  }
  return Pmf(std::move(out));
}

BroadcastChannel::BroadcastChannel(TransitionMatrix y1, TransitionMatrix y2)
    : to_y1(std::move(y1)), to_y2(std::move(y2)) {
  if (to_y1.input_size() != to_y2.input_size()) {
    throw std::invalid_argument("BroadcastChannel: input alphabet mismatch");
  }
}

const char* var_name(Var v) {
  switch (v) {
    case Var::U: return "U";
    case Var::V: return "V";
    case Var::W: return "W";
    case Var::T: return "T";
    case Var::X: return "X";
    case Var::Y1: return "Y1";
    case Var::Y2: return "Y2";
  }
  return "?";
}

JointPmf::JointPmf(VarList axes, std::vector<std::size_t> sizes,
                   std::vector<double> table)
    : axes_(std::move(axes)), sizes_(std::move(sizes)), table_(std::move(table)) {
  if (axes_.empty() || axes_.size() != sizes_.size()) {
    throw std::invalid_argument("JointPmf: axes/sizes mismatch");
  }
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    for (std::size_t k = i + 1; k < axes_.size(); ++k) {
      if (axes_[i] == axes_[k]) {
        throw std::invalid_argument(std::string("JointPmf: duplicate axis ") +
                                    var_name(axes_[i]));
      }
    }
    if (sizes_[i] == 0) throw std::invalid_argument("JointPmf: axis size 0");
  }
  std::size_t total = 1;
  for (std::size_t s : sizes_) total *= s;
  if (table_.size() != total) {
    throw std::invalid_argument("JointPmf: table size mismatch");
  }
  double mass = 0.0;
  for (double v : table_) {
    if (!(v >= 0.0)) throw std::invalid_argument("JointPmf: negative weight");
    mass += v;
  }
  if (std::abs(mass - 1.0) > kMassTol) {
    throw std::invalid_argument("JointPmf: total mass " + std::to_string(mass) +
                                ", expected 1 within 1e-12");
  }
}

bool JointPmf::has(Var v) const {
  return std::find(axes_.begin(), axes_.end(), v) != axes_.end();
}

std::size_t JointPmf::axis_index(Var v) const {
  auto it = std::find(axes_.begin(), axes_.end(), v);
  if (it == axes_.end()) {
    throw std::invalid_argument(std::string("JointPmf: unknown variable ") +
                                var_name(v));
  }
  return static_cast<std::size_t>(it - axes_.begin());
}

double JointPmf::mass() const {
  return std::accumulate(table_.begin(), table_.end(), 0.0);
}

JointPmf JointPmf::marginal(const VarList& keep) const {
  std::vector<char> keep_axis(axes_.size(), 0);
  for (Var v : keep) keep_axis[axis_index(v)] = 1;

  VarList out_axes;
  std::vector<std::size_t> out_sizes;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (keep_axis[i]) {
      out_axes.push_back(axes_[i]);
      out_sizes.push_back(sizes_[i]);
    }
  }
  if (out_axes.empty()) {
    throw std::invalid_argument("JointPmf::marginal: empty keep set");
  }

  // Strides of the output table, aligned with this table's axes.
  std::vector<std::size_t> out_stride(axes_.size(), 0);
  {
    std::size_t stride = 1;
    for (std::size_t i = axes_.size(); i-- > 0;) {
      if (keep_axis[i]) {
        out_stride[i] = stride;
        stride *= sizes_[i];
      }
    }
  }

  std::size_t out_total = 1;
  for (std::size_t s : out_sizes) out_total *= s;
  std::vector<double> out(out_total, 0.0);

  std::vector<std::size_t> idx(axes_.size(), 0);
  for (std::size_t flat = 0; flat < table_.size(); ++flat) {
    std::size_t target = 0;
    for (std::size_t i = 0; i < axes_.size(); ++i) target += idx[i] * out_stride[i];
    out[target] += table_[flat];
    for (std::size_t i = axes_.size(); i-- > 0;) {
      if (++idx[i] < sizes_[i]) break;
      idx[i] = 0;
    }
  }
  return JointPmf(std::move(out_axes), std::move(out_sizes), std::move(out));
}

double entropy(const JointPmf& j) { return entropy(std::span(j.table())); }

namespace {

VarList merge_vars(const JointPmf& j, std::initializer_list<const VarList*> parts) {
  // Union in the joint's axis order so equal sets marginalize identically.
  VarList out;
  for (Var ax : j.axes()) {
    for (const VarList* p : parts) {
      if (std::find(p->begin(), p->end(), ax) != p->end()) {
        out.push_back(ax);
        break;
      }
    }
  }
  return out;
}

}  // namespace

double mutual_information(const JointPmf& j, const VarList& a, const VarList& b,
                          const VarList& given) {
  for (Var v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end() ||
        std::find(given.begin(), given.end(), v) != given.end()) {
      throw std::invalid_argument("mutual_information: overlapping variable sets");
    }
  }
  for (Var v : b) {
    if (std::find(given.begin(), given.end(), v) != given.end()) {
      throw std::invalid_argument("mutual_information: overlapping variable sets");
    }
  }
  for (Var v : a) (void)j.axis_index(v);
  for (Var v : b) (void)j.axis_index(v);
  for (Var v : given) (void)j.axis_index(v);

  const VarList ac = merge_vars(j, {&a, &given});
  const VarList bc = merge_vars(j, {&b, &given});
  const VarList abc = merge_vars(j, {&a, &b, &given});

  double h_ac = entropy(j.marginal(ac));
  double h_bc = entropy(j.marginal(bc));
  double h_abc = entropy(j.marginal(abc));
  double h_c = given.empty() ? 0.0 : entropy(j.marginal(merge_vars(j, {&given})));
  return h_ac + h_bc - h_abc - h_c;
}

JointPmf extend_through_channel(const JointPmf& j, const BroadcastChannel& ch,
                                Var output) {
  if (output != Var::Y1 && output != Var::Y2) {
    throw std::invalid_argument("extend_through_channel: output must be Y1 or Y2");
  }
  const TransitionMatrix& tm = output == Var::Y1 ? ch.to_y1 : ch.to_y2;
  const std::size_t x_axis = j.axis_index(Var::X);
  if (j.sizes()[x_axis] != tm.input_size()) {
    throw std::invalid_argument(
        "extend_through_channel: X axis size does not match channel input");
  }

  const std::size_t ny = tm.output_size();
  VarList axes = j.axes();
  axes.push_back(output);
  std::vector<std::size_t> sizes = j.sizes();
  sizes.push_back(ny);

  // Stride of the X axis in the input table.
  std::size_t x_stride = 1;
  for (std::size_t i = j.rank(); i-- > x_axis + 1;) x_stride *= j.sizes()[i];
  const std::size_t x_size = j.sizes()[x_axis];

  std::vector<double> out(j.table().size() * ny);
  for (std::size_t flat = 0; flat < j.table().size(); ++flat) {
    const std::size_t x = (flat / x_stride) % x_size;
    const double p = j.table()[flat];
    for (std::size_t y = 0; y < ny; ++y) out[flat * ny + y] = p * tm.prob(x, y);
  }
  return JointPmf(std::move(axes), std::move(sizes), std::move(out));
}

}  // namespace bcb
