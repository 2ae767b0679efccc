#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "bcbounds/envelope.hpp"
#include "bcbounds/prob.hpp"
#include "bcbounds/search.hpp"

using namespace bcb;

namespace {

// Chord value of the closed-form envelope, assembled independently of
// g_function from first principles.
double chord_oracle(double eta, double eta0) {
  const double f0 = binary_entropy(eta0 / 2) - binary_entropy((1 - eta0) / 2);
  return ((1.0 - eta) * f0 + (eta - eta0) * 1.0) / (1.0 - eta0);
}

}  // namespace

TEST_CASE("f_skew values") {
  CHECK(f_skew(0.5) == 0.0);
  CHECK(f_skew(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f_skew(0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  const double expected = binary_entropy(0.1) - binary_entropy(0.4);
  CHECK(f_skew(0.2) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(f_skew(0.2) == doctest::Approx(-0.501955).epsilon(1e-5));
  CHECK_THROWS_AS(f_skew(-0.2), std::domain_error);
  CHECK_THROWS_AS(f_skew(1.2), std::domain_error);
}

TEST_CASE("f_skew antisymmetry") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double eta = rng.next_unit();
    CHECK(std::abs(f_skew(eta) + f_skew(1.0 - eta)) <= 1e-12);
  }
}

TEST_CASE("f_skew curvature: concave left of 1/2, convex right of it") {
  const std::size_t n = 2001;
  const GridFunction f = GridFunction::tabulate(n, f_skew);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double second = f.values[i + 1] - 2.0 * f.values[i] + f.values[i - 1];
    const double x = f.x_at(i);
    if (x < 0.5 - 1e-9) CHECK(second <= 1e-12);
    if (x > 0.5 + 1e-9) CHECK(second >= -1e-12);
  }
}

TEST_CASE("eta0 tangency") {
  const double eta0 = solve_eta0();
  CHECK(std::abs(eta0 - 0.2) <= 1e-9);
  const double residual = f_skew_derivative(eta0) * (1 - eta0) - (1 - f_skew(eta0));
  CHECK(std::abs(residual) <= 1e-9);

  // Both sides of the tangency equation evaluated independently at 1/5.
  const double lhs = f_skew_derivative(0.2);
  const double rhs = (1.0 - f_skew(0.2)) / 0.8;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  CHECK(lhs == doctest::Approx(1.8774437510817341).epsilon(1e-12));
}

TEST_CASE("g_function") {
  CHECK(g_function(0.1) == f_skew(0.1));
  CHECK(g_function(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  const double eta0 = solve_eta0();
  CHECK(g_function(0.6) == doctest::Approx(chord_oracle(0.6, eta0)).epsilon(1e-12));
  CHECK(g_function(0.6) == doctest::Approx(0.2490224995673063).epsilon(1e-9));
  // Continuity at the tangency point.
  CHECK(std::abs(g_function(eta0 - 1e-12) - g_function(eta0 + 1e-12)) <= 1e-9);
  CHECK_THROWS_AS(g_function(-0.5), std::domain_error);
}

TEST_CASE("upper concave envelope") {
  SUBCASE("concave input is its own envelope") {
    const GridFunction h = GridFunction::tabulate(513, [](double x) {
      return binary_entropy(x);
    });
    const EnvelopeResult env = upper_concave_envelope(h);
    for (std::size_t i = 0; i < h.n_points(); ++i) {
      CHECK(env.envelope.values[i] == h.values[i]);
      CHECK(env.contact[i] == 1);
    }
  }
  SUBCASE("v-shape hulls to the top chord") {
    const GridFunction v = GridFunction::tabulate(101, [](double x) {
      return std::abs(2.0 * x - 1.0);
    });
    const EnvelopeResult env = upper_concave_envelope(v);
    for (std::size_t i = 0; i < v.n_points(); ++i) {
      CHECK(env.envelope.values[i] == doctest::Approx(1.0).epsilon(1e-15));
      const bool endpoint = i == 0 || i + 1 == v.n_points();
      CHECK(static_cast<bool>(env.contact[i]) == endpoint);
    }
  }
  SUBCASE("f_skew envelope matches the closed form") {
    const std::size_t n = 4097;
    const GridFunction f = GridFunction::tabulate(n, f_skew);
    const EnvelopeResult env = upper_concave_envelope(f);
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sup = std::max(sup, std::abs(env.envelope.values[i] - g_function(f.x_at(i))));
    }
    CHECK(sup <= 2e-4);
  }
  SUBCASE("dominance, concavity, idempotence") {
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
      GridFunction fn;
      fn.values.resize(257);
      for (double& v : fn.values) v = rng.next_range(-1.0, 1.0);
      const EnvelopeResult env = upper_concave_envelope(fn);
      for (std::size_t i = 0; i < fn.n_points(); ++i) {
        CHECK(env.envelope.values[i] >= fn.values[i]);
      }
      for (std::size_t i = 1; i + 1 < fn.n_points(); ++i) {
        const double second = env.envelope.values[i + 1] -
                              2.0 * env.envelope.values[i] +
                              env.envelope.values[i - 1];
        CHECK(second <= 1e-12);
      }
      // Re-enveloping reproduces the values up to re-hulled interpolation
      // rounding (a couple of ulps on chord interiors; exact at vertices).
      const EnvelopeResult env2 = upper_concave_envelope(env.envelope);
      for (std::size_t i = 0; i < fn.n_points(); ++i) {
        CHECK(std::abs(env2.envelope.values[i] - env.envelope.values[i]) <= 1e-14);
      }
    }
  }
  SUBCASE("idempotence is exact when no chord interpolation is involved") {
    const GridFunction h = GridFunction::tabulate(257, [](double x) {
      return binary_entropy(x);
    });
    const EnvelopeResult env = upper_concave_envelope(h);
    const EnvelopeResult env2 = upper_concave_envelope(env.envelope);
    for (std::size_t i = 0; i < h.n_points(); ++i) {
      CHECK(env2.envelope.values[i] == env.envelope.values[i]);
    }
    const GridFunction v = GridFunction::tabulate(65, [](double x) {
      return std::abs(2.0 * x - 1.0);
    });
    const EnvelopeResult venv = upper_concave_envelope(v);
    const EnvelopeResult venv2 = upper_concave_envelope(venv.envelope);
    for (std::size_t i = 0; i < v.n_points(); ++i) {
      CHECK(venv2.envelope.values[i] == venv.envelope.values[i]);
    }
  }
  SUBCASE("non-finite samples are rejected") {
    GridFunction bad;
    bad.values = {0.0, std::nan(""), 1.0};
    CHECK_THROWS_AS(upper_concave_envelope(bad), std::invalid_argument);
    GridFunction tiny;
    tiny.values = {0.0};
    CHECK_THROWS_AS(upper_concave_envelope(tiny), std::invalid_argument);
  }
  SUBCASE("contact region of f_skew ends at eta0") {
    const std::size_t n = 4097;
    const double h = 1.0 / static_cast<double>(n - 1);
    const GridFunction f = GridFunction::tabulate(n, f_skew);
    const EnvelopeResult env = upper_concave_envelope(f);
    const double eta0 = solve_eta0();
    std::size_t first_noncontact = n;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = f.x_at(i);
      if (x <= eta0 - h) CHECK(env.contact[i] == 1);
      if (!env.contact[i] && first_noncontact == n) first_noncontact = i;
      // The hull meets the input again only at the right endpoint.
      if (x > eta0 + h && i + 1 < n) CHECK(env.contact[i] == 0);
    }
    REQUIRE(first_noncontact < n);
    // Left edge of the non-contact region brackets eta0 within one grid step.
    CHECK(std::abs(f.x_at(first_noncontact) - eta0) <= h + 1e-12);
    // Gap is identically zero below eta0.
    for (std::size_t i = 0; i < n; ++i) {
      if (f.x_at(i) <= eta0) {
        CHECK(env.envelope.values[i] - f.values[i] <= 1e-6);
      }
    }
  }
}

TEST_CASE("aux_sup_binary") {
  const std::size_t n = 4097;
  const GridFunction f = GridFunction::tabulate(n, f_skew);

  SUBCASE("contact region evaluates to the function") {
    // 0.1 falls between grid points; the interpolation chord undershoots the
    // strictly concave f by O(h^2).
    CHECK(std::abs(aux_sup_binary(f, 0.1) - f_skew(0.1)) <= 1e-6);
    // 0.125 is exactly on the 4097-point grid and below the tangency point.
    CHECK(aux_sup_binary(f, 0.125) == doctest::Approx(f_skew(0.125)).epsilon(1e-12));
  }
  SUBCASE("chord region evaluates to the closed form") {
    CHECK(aux_sup_binary(f, 0.6) ==
          doctest::Approx(g_function(0.6)).epsilon(1e-7));
    CHECK(aux_sup_binary(f, 0.6) == doctest::Approx(0.2490224995673063).epsilon(1e-6));
  }
  SUBCASE("concave input evaluates to itself on the grid") {
    const GridFunction h = GridFunction::tabulate(513, [](double x) {
      return binary_entropy(x);
    });
    CHECK(aux_sup_binary(h, 0.25) == doctest::Approx(binary_entropy(0.25)).epsilon(1e-12));
  }
  SUBCASE("dominates the interpolated function") {
    Rng rng(29);
    GridFunction fn;
    fn.values.resize(129);
    for (double& v : fn.values) v = rng.next_range(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const double x = rng.next_unit();
      const double pos = x * 128.0;
      const std::size_t i0 = std::min<std::size_t>(127, static_cast<std::size_t>(pos));
      const double t = pos - static_cast<double>(i0);
      const double interp = fn.values[i0] + (fn.values[i0 + 1] - fn.values[i0]) * t;
      CHECK(aux_sup_binary(fn, x) >= interp - 1e-9);
    }
  }
  SUBCASE("domain error") {
    CHECK_THROWS_AS(aux_sup_binary(f, 1.5), std::domain_error);
  }
}
