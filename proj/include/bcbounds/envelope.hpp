#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace bcb {

// Scalar function sampled at eta_i = i/(n-1) on [0,1].
struct GridFunction {
  std::vector<double> values;

  std::size_t n_points() const { return values.size(); }
  double x_at(std::size_t i) const {
    return static_cast<double>(i) / static_cast<double>(values.size() - 1);
  }
  static GridFunction tabulate(std::size_t n,
                               const std::function<double(double)>& fn);
};

// f(eta) = H(eta/2) - H((1-eta)/2): the difference of the two output
// entropies of the skew-symmetric binary channel at crossover 1/2, as a
// function of P(X=0) = eta. Antisymmetric about 1/2.
double f_skew(double eta);

// Analytic derivative of f_skew on (0,1).
double f_skew_derivative(double eta);

// The unique point eta0 in (0, 1/2) where the line joining
// (eta0, f(eta0)) to (1, 1) is tangent to f_skew, i.e. the root of
// f'(eta)(1-eta) - (1-f(eta)) = 0, solved by bracketed bisection.
double solve_eta0();

// f_skew below eta0, the chord from (eta0, f(eta0)) to (1, 1) above it.
// This is the closed form of the upper concave envelope of f_skew.
double g_function(double eta);

struct EnvelopeResult {
  GridFunction envelope;          // least concave majorant on the grid
  std::vector<char> contact;      // envelope == input within 1e-9, per point
  std::vector<std::size_t> hull;  // indices of hull vertices, increasing
};

// Pointwise least concave majorant of the sampled points (upper convex hull),
// with contact flags. O(n) monotone scan.
EnvelopeResult upper_concave_envelope(const GridFunction& fn);

// Evaluates the envelope of a precomputed hull at arbitrary x in [0,1] by
// linear interpolation between hull vertices.
double envelope_at(const GridFunction& fn, const std::vector<std::size_t>& hull,
                   double x);

// sup over finite decompositions {(v_i, alpha_i)} with sum v_i alpha_i = eta
// of sum v_i phi(alpha_i), which equals the upper concave envelope of phi at
// eta. Grid-sampled phi, hull interpolation between vertices.
double aux_sup_binary(const GridFunction& phi, double eta);

// Contact atoms of the envelope of phi at eta: the hull segment endpoints
// (alpha_left, alpha_right) and the weight on the left atom. For eta at a
// hull vertex both atoms coincide.
struct EnvelopeAtoms {
  double alpha_left, alpha_right, weight_left;
};
EnvelopeAtoms envelope_atoms(const GridFunction& fn,
                             const std::vector<std::size_t>& hull, double x);

}  // namespace bcb
