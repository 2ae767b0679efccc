#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bcbounds/envelope.hpp"
#include "bcbounds/prob.hpp"
#include "bcbounds/search.hpp"

namespace bcb {

struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;
};

// Skew-symmetric binary broadcast channel: a Z-branch toward receiver 1
// (P(Y1=1|X=0)=p, P(Y1=1|X=1)=1) and its mirror toward receiver 2
// (P(Y2=0|X=0)=1, P(Y2=0|X=1)=p). At p=1/2 with P(X=0)=eta this gives
// H(Y1)=H(eta/2) and H(Y2)=H((1-eta)/2).
BroadcastChannel bssc(double p);

struct CapacityResult {
  double bits;
  Pmf argmax;
};

// max over p(X) of I(X;Y). Grid scan plus golden-section refinement for
// binary inputs, multi-start search otherwise.
CapacityResult single_user_capacity(const BroadcastChannel& ch, Var output,
                                    std::size_t grid = 4097,
                                    ExecMode mode = ExecMode::Parallel);

// max{C1, C2}: the sum rate of the time-division region.
double time_division_sum_rate(const BroadcastChannel& ch,
                              std::size_t grid = 4097,
                              ExecMode mode = ExecMode::Parallel);

struct TsplitResult {
  double bits = 0.0;
  double tau = 0.0, a = 0.0, b = 0.0;  // P(T=0), P(X=0|T=0), P(X=0|T=1)
};

// Exact-to-grid maximization of
//   min{I(T;Y1), I(T;Y2)} + P(T=0) I(X;Y1|T=0) + P(T=1) I(X;Y2|T=1)
// over a binary T, by 3-D grid scan plus per-axis golden refinement.
// Binary-input channels only.
TsplitResult marton_sum_rate_tsplit(const BroadcastChannel& ch,
                                    std::size_t grid3 = 201,
                                    ExecMode mode = ExecMode::Parallel);

struct MartonResult {
  double lambda = 0.5;
  double value = 0.0;  // best found lambda*R1 + (1-lambda)*R2
  RatePair rates;
  double sum_cap = 0.0;  // the sum-rate inequality value at the witness
  std::optional<JointPmf> witness;  // p(u,v,w,x)
};

// Best found weighted maximum over the three-inequality achievable polytope,
// maximized over p(u,v,w,x) by seeded multi-start pattern search on a softmax
// parametrization. The result is a lower bound on the true support function.
MartonResult marton_weighted_max(const BroadcastChannel& ch, double lambda,
                                 const SearchConfig& cfg,
                                 ExecMode mode = ExecMode::Parallel,
                                 const std::vector<JointPmf>& warm_starts = {});

struct OuterSumRate {
  double bits = 0.0;
  double eta = 0.0;       // maximizing P(X=0), binary-input path only
  double term_a = 0.0;    // sup I(U;Y1) + I(X;Y2|U) at the maximizer
  double term_b = 0.0;    // sup I(V;Y2) + I(X;Y1|V) at the maximizer
  std::string method;     // "envelope-grid(n)" or "multistart"
  std::optional<JointPmf> witness;  // p(u,v,x)
};

// max over p(u,v,x) of min{I(U;Y1)+I(X;Y2|U), I(V;Y2)+I(X;Y1|V)}. The two
// terms couple only through p(X), so for binary inputs each is evaluated as
// an upper concave envelope over the conditional decomposition and the min is
// maximized over P(X=0) on a grid with golden refinement. Larger input
// alphabets fall back to multi-start search at |U|=|V|=|X|+1.
OuterSumRate outer_sum_rate(const BroadcastChannel& ch, const SearchConfig& cfg,
                            ExecMode mode = ExecMode::Parallel);

struct DirectSearchResult {
  double value = 0.0;
  std::optional<JointPmf> witness;
};

// Multi-start search form of the outer sum rate at explicit cardinalities;
// kept alongside the envelope route as its cross-check.
DirectSearchResult outer_sum_rate_direct(const BroadcastChannel& ch,
                                         std::size_t card_u, std::size_t card_v,
                                         const SearchConfig& cfg,
                                         ExecMode mode = ExecMode::Parallel,
                                         const std::vector<JointPmf>& warm_starts = {});

struct WeightedMax {
  double lambda = 0.0;
  double value = 0.0;
  RatePair rates;
  std::optional<JointPmf> witness;  // p(u,v,x)
};

struct RegionSample {
  std::vector<WeightedMax> maxima;
  double sum_rate = 0.0;
  std::optional<JointPmf> sum_witness;
  std::string method;
};

// Support-function samples of the outer-bound region: for each lambda,
// maximizes lambda*R1 + (1-lambda)*R2 over the three-inequality polytope
// (exact vertex enumeration) and over distributions.
RegionSample outer_region(const BroadcastChannel& ch,
                          const std::vector<double>& lambdas,
                          const SearchConfig& cfg,
                          ExecMode mode = ExecMode::Parallel);

struct GapResult {
  double gap = 0.0;           // largest found value of the gap functional
  double inner_term = 0.0;    // I(U;Y1)+I(V;Y2)-I(U;V) at the witness
  double capacity_term = 0.0; // max{I(X;Y1), I(X;Y2)} at the witness
  bool restricted = false;
  std::optional<JointPmf> witness;  // p(u,v,x)
};

// Multi-start maximization of
//   I(U;Y1) + I(V;Y2) - I(U;V) - max{I(X;Y1), I(X;Y2)}
// over joints p(u,v,x). A positive gap beyond 1e-6 would exhibit a rate-sum
// point above the single-letter ceiling. With restrict_small_marginal the
// X marginal is pinned to min{P(X=0), P(X=1)} <= 1/5 (binary inputs only),
// the region where the gap is provably nonpositive.
GapResult conjecture_gap_search(const BroadcastChannel& ch,
                                const SearchConfig& cfg,
                                ExecMode mode = ExecMode::Parallel,
                                bool restrict_small_marginal = false);

struct ChainValues {
  double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;
};

// Evaluates the four-term chain
//   I(U;Y1)+I(V;Y2)-I(U;V) <= I(V;Y2)+I(U;Y1|V)
//                          <= I(V;Y2)+I(X;Y1|V)
//                          =  I(X;Y1)+I(V;Y2)-I(V;Y1)
// on a joint p(u,v,x) and throws std::logic_error if any step fails by more
// than 1e-10 (the chain is an identity-plus-data-processing fact).
ChainValues lemma_chain_check(const JointPmf& j, const BroadcastChannel& ch);

// Flat-array objective kernels used inside the search loops, with generic
// JointPmf-path reference twins kept for testing and benchmarking.
namespace kernels {

struct ChannelTables {
  std::size_t nx = 0, ny1 = 0, ny2 = 0;
  std::vector<double> w1, w2;        // p(y|x), row-major
  std::vector<double> h1row, h2row;  // per-input output entropies
};
ChannelTables make_tables(const BroadcastChannel& ch);

double gap_objective(std::span<const double> t, std::size_t nu, std::size_t nv,
                     const ChannelTables& ct, double* inner_out = nullptr,
                     double* cap_out = nullptr);
double gap_objective_reference(const JointPmf& j, const BroadcastChannel& ch);

struct MartonCaps {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
};
MartonCaps marton_caps(std::span<const double> t, std::size_t nu, std::size_t nv,
                       std::size_t nw, const ChannelTables& ct);
MartonCaps marton_caps_reference(const JointPmf& j, const BroadcastChannel& ch);

struct OuterCaps {
  double a1 = 0.0, a2 = 0.0;  // I(U;Y1), I(V;Y2)
  double sum_a = 0.0, sum_b = 0.0;  // the two sum-rate terms
  double a3 = 0.0;                  // min(sum_a, sum_b)
};
OuterCaps outer_caps(std::span<const double> t, std::size_t nu, std::size_t nv,
                     const ChannelTables& ct);
OuterCaps outer_caps_reference(const JointPmf& j, const BroadcastChannel& ch);

// Exact maximum of lambda*R1 + (1-lambda)*R2 over
// {R >= 0, R1 <= c1, R2 <= c2, R1+R2 <= c3} by vertex enumeration
// (at most 5 candidates). Returns c3 itself when c3 < 0 (empty polytope),
// which lets searches climb back toward feasibility.
double polytope_weighted_max(double lambda, double c1, double c2, double c3,
                             RatePair* arg = nullptr);

}  // namespace kernels

}  // namespace bcb
