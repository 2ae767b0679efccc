#pragma once

#include <cstddef>
#include <vector>

#include "bcbounds/prob.hpp"

namespace bcb {

// Joint over (U,V,W,X) produced by lift_to_independent. The U and V axes hold
// the lifted pair, which is independent by construction; m is the modulus
// used (the source |V|).
struct LiftedTriple {
  JointPmf joint;
  std::size_t m;
};

// Joint over (U,V,X) produced by deterministic_lift. X is a deterministic
// function of (U,V); l is the source input alphabet size.
struct DeterministicTriple {
  JointPmf joint;
  std::size_t l;
};

// From a joint p(u,v,x), builds p(u*,v*,w*,x) with
//   P(U*=u, V*=i, W*=j, X=x) = (1/m) P(U=u, V=(i+j) mod m, X=x),  m = |V|.
// U* and V* come out independent, and after extension through any channel
// the four identities
//   I(U;Y1)   = I(U*,W*;Y1)      I(V;Y2)   = I(V*,W*;Y2)
//   I(U;Y1|V) = I(U*;Y1|V*,W*)   I(V;Y2|U) = I(V*;Y2|U*,W*)
// hold up to rounding. Requires axes exactly {U,V,X}.
LiftedTriple lift_to_independent(const JointPmf& src);

// From a joint p(u,v,x) with l = |X|, builds p(u*,v*,x*) with
//   P(U*=(u,i), V*=(v,j)) = (1/l) P(U=u, V=v, X=(i-j) mod l)
// and X* = (i-j) mod l deterministically. Pair indices flatten
// lexicographically (source index major, shift minor), so |U*| = l|U| and
// |V*| = l|V|. After channel extension the identities
//   I(U;Y1)   = I(U*;Y1)      I(V;Y2)   = I(V*;Y2)
//   I(X;Y1|V) = I(U*;Y1|V*)   I(X;Y2|U) = I(V*;Y2|U*)
// hold, and the X marginal is preserved.
DeterministicTriple deterministic_lift(const JointPmf& src);

// Total-variation distance between p(u,v) and the product of its marginals.
double uv_independence_gap(const JointPmf& j);

// True when every (u,v) slice of p(x|u,v) with positive mass is a point mass.
bool x_deterministic_given_uv(const JointPmf& j);

// Which receiver's conditional-entropy functional is preserved directly;
// the other receiver enters through the conditional mutual information term.
enum class PreserveSide { Y1, Y2 };

struct SupportFunctionals {
  std::vector<double> x_marginal;  // sum_u w_u q_u
  double cond_output_entropy;      // sum_u w_u H(Y_a | X ~ q_u)
  double cond_mutual_info;         // sum_u w_u I(X; Y_b | X ~ q_u)
};

SupportFunctionals support_functionals(std::span<const double> weights,
                                       const std::vector<Pmf>& conditionals,
                                       const BroadcastChannel& ch,
                                       PreserveSide side);

struct ReducedSupport {
  std::vector<double> weights;      // aligned with kept
  std::vector<std::size_t> kept;    // indices into the original atom list
  std::size_t iterations = 0;
};

// Constructive Caratheodory reduction: repeatedly moves the weight vector
// along a null direction of the constraint system (p(X) rows, the two
// functional rows, normalization) until the support has at most |X|+2 atoms.
// Each pivot zeroes at least one atom; ratio ties retire the smallest index
// first. Preserves p(X) and both functionals up to rounding.
ReducedSupport reduce_support(std::span<const double> weights,
                              const std::vector<Pmf>& conditionals,
                              const BroadcastChannel& ch, PreserveSide side);

}  // namespace bcb
