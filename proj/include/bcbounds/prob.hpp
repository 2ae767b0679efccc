#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bcb {

// Mass/stochasticity checks accept this absolute slack; anything worse is an
// input error and is reported, never silently renormalized.
inline constexpr double kMassTol = 1e-12;

// -p*log2(p) with the 0*log(0) = 0 convention. p < 0 returns 0 (callers
// validate nonnegativity at construction time).
double plog2p(double p);

// Binary entropy in bits. Accepts p in [0,1] with kMassTol slack, throws
// std::domain_error otherwise.
double binary_entropy(double p);

// Shannon entropy in bits of an unvalidated weight vector.
double entropy(std::span<const double> weights);

// Finite probability mass function. Immutable after construction; the
// constructor rejects negative weights and masses off by more than kMassTol.
class Pmf {
 public:
  explicit Pmf(std::vector<double> weights);
  static Pmf uniform(std::size_t n);
  static Pmf point_mass(std::size_t n, std::size_t at);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  std::span<const double> span() const { return weights_; }

 private:
  std::vector<double> weights_;
};

double entropy(const Pmf& p);

// Row-stochastic conditional law p(y|x), stored flat row-major.
class TransitionMatrix {
 public:
  TransitionMatrix(std::size_t input_size, std::size_t output_size,
                   std::vector<double> flat);
  explicit TransitionMatrix(const std::vector<Pmf>& rows);

  std::size_t input_size() const { return in_; }
  std::size_t output_size() const { return out_; }
  double prob(std::size_t x, std::size_t y) const { return flat_[x * out_ + y]; }
  std::span<const double> row(std::size_t x) const {
    return {flat_.data() + x * out_, out_};
  }
  const std::vector<double>& flat() const { return flat_; }

  Pmf output_dist(const Pmf& input) const;

 private:
  std::size_t in_, out_;
  std::vector<double> flat_;
};

// Two-receiver broadcast channel. Only the two conditional marginals are
// stored; every quantity computed downstream depends on the joint law only
// through them.
struct BroadcastChannel {
  TransitionMatrix to_y1;
  TransitionMatrix to_y2;

  BroadcastChannel(TransitionMatrix y1, TransitionMatrix y2);
  std::size_t input_size() const { return to_y1.input_size(); }
};

enum class Var : std::uint8_t { U, V, W, T, X, Y1, Y2 };
const char* var_name(Var v);

using VarList = std::vector<Var>;

// Labeled multi-dimensional probability table. Axis order is fixed at
// construction; the flat table is row-major in that order.
class JointPmf {
 public:
  JointPmf(VarList axes, std::vector<std::size_t> sizes,
           std::vector<double> table);

  const VarList& axes() const { return axes_; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  const std::vector<double>& table() const { return table_; }
  std::size_t rank() const { return axes_.size(); }

  bool has(Var v) const;
  std::size_t axis_index(Var v) const;  // throws on unknown variable
  std::size_t size(Var v) const { return sizes_[axis_index(v)]; }
  double mass() const;

  // Sums out every axis not listed in `keep`; kept axes stay in this
  // object's order. Throws on unknown variable names.
  JointPmf marginal(const VarList& keep) const;

 private:
  VarList axes_;
  std::vector<std::size_t> sizes_;
  std::vector<double> table_;
};

// Entropy in bits of the full table.
double entropy(const JointPmf& j);

// I(A;B|C) in bits via H(A,C) + H(B,C) - H(A,B,C) - H(C). The three variable
// groups must be disjoint subsets of the joint's axes.
double mutual_information(const JointPmf& j, const VarList& a, const VarList& b,
                          const VarList& given = {});

// Appends the chosen output axis with p(y|everything) = p(y|x), realizing the
// chain (aux vars) -> X -> Y. Requires an X axis matching the channel input
// size; `output` selects Var::Y1 or Var::Y2.
JointPmf extend_through_channel(const JointPmf& j, const BroadcastChannel& ch,
                                Var output);

}  // namespace bcb
