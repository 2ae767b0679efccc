#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "bcbounds/bounds.hpp"
#include "bcbounds/prob.hpp"
#include "test_support.hpp"

using namespace bcb;
using testsupport::mi_direct_oracle;
using testsupport::random_channel;
using testsupport::random_simplex;
using testsupport::random_uvx_joint;

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  // Direct evaluation of the defining formula.
  const double expected = -0.1 * std::log2(0.1) - 0.9 * std::log2(0.9);
  CHECK(binary_entropy(0.1) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(binary_entropy(0.1) == doctest::Approx(0.468996).epsilon(1e-5));

  CHECK_THROWS_AS(binary_entropy(-0.01), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.01), std::domain_error);
  CHECK_NOTHROW(binary_entropy(-1e-13));  // inside the validation slack
  CHECK_NOTHROW(binary_entropy(1.0 + 1e-13));
}

TEST_CASE("pmf entropy") {
  CHECK(entropy(Pmf({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(entropy(Pmf({1.0, 0.0, 0.0})) == 0.0);
  CHECK(entropy(Pmf({0.5, 0.25, 0.25})) == doctest::Approx(1.5).epsilon(1e-12));
  for (std::size_t n = 1; n <= 64; ++n) {
    CHECK(entropy(Pmf::uniform(n)) ==
          doctest::Approx(std::log2(static_cast<double>(n))).epsilon(1e-12));
  }
}

TEST_CASE("pmf validation") {
  CHECK_THROWS_AS(Pmf({0.5, -0.1, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(Pmf({0.5, 0.4}), std::invalid_argument);
  CHECK_NOTHROW(Pmf({0.5, 0.5 + 5e-13}));
  CHECK_THROWS_AS(Pmf(std::vector<double>{}), std::invalid_argument);
  CHECK(Pmf::point_mass(4, 2)[2] == 1.0);
}

TEST_CASE("transition matrix validation and output dist") {
  CHECK_THROWS_WITH_AS(TransitionMatrix(2, 2, {0.5, 0.4, 1.0, 0.0}),
                       doctest::Contains("row 0"), std::invalid_argument);
  TransitionMatrix tm(2, 2, {0.75, 0.25, 0.5, 0.5});
  const Pmf out = tm.output_dist(Pmf({0.4, 0.6}));
  CHECK(out[0] == doctest::Approx(0.4 * 0.75 + 0.6 * 0.5).epsilon(1e-15));
}

TEST_CASE("marginalize") {
  Rng rng(11);
  const JointPmf j = random_uvx_joint(rng, 3, 2, 4);

  SUBCASE("keep all is the identity") {
    const JointPmf m = j.marginal({Var::U, Var::V, Var::X});
    CHECK(m.table() == j.table());
    CHECK(m.axes() == j.axes());
  }
  SUBCASE("product joint recovers the factor") {
    const std::vector<double> pu = random_simplex(rng, 3);
    const std::vector<double> px = random_simplex(rng, 4);
    std::vector<double> table(12);
    for (std::size_t u = 0; u < 3; ++u) {
      for (std::size_t x = 0; x < 4; ++x) table[u * 4 + x] = pu[u] * px[x];
    }
    const JointPmf prod({Var::U, Var::X}, {3, 4}, table);
    const JointPmf m = prod.marginal({Var::U});
    for (std::size_t u = 0; u < 3; ++u) {
      CHECK(m.table()[u] == doctest::Approx(pu[u]).epsilon(1e-14));
    }
  }
  SUBCASE("mass preserved") {
    const JointPmf m = j.marginal({Var::V, Var::X});
    CHECK(m.mass() == doctest::Approx(j.mass()).epsilon(1e-14));
  }
  SUBCASE("unknown variable") {
    CHECK_THROWS_AS(j.marginal({Var::W}), std::invalid_argument);
  }
}

TEST_CASE("mutual information") {
  SUBCASE("independent variables") {
    Rng rng(5);
    const std::vector<double> pu = random_simplex(rng, 3);
    const std::vector<double> pv = random_simplex(rng, 4);
    std::vector<double> table(12);
    for (std::size_t u = 0; u < 3; ++u) {
      for (std::size_t v = 0; v < 4; ++v) table[u * 4 + v] = pu[u] * pv[v];
    }
    const JointPmf j({Var::U, Var::V}, {3, 4}, table);
    CHECK(std::abs(mutual_information(j, {Var::U}, {Var::V})) <= 1e-12);
  }
  SUBCASE("copied axis gives the entropy") {
    const std::vector<double> pu = {0.2, 0.3, 0.5};
    std::vector<double> table(9, 0.0);
    for (std::size_t u = 0; u < 3; ++u) table[u * 3 + u] = pu[u];
    const JointPmf j({Var::U, Var::V}, {3, 3}, table);
    CHECK(mutual_information(j, {Var::U}, {Var::V}) ==
          doctest::Approx(entropy(Pmf(pu))).epsilon(1e-12));
  }
  SUBCASE("matches the direct-sum oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const JointPmf j = random_uvx_joint(rng, 2, 2, 2);
      const double via_entropies = mutual_information(j, {Var::U}, {Var::V});
      const double via_oracle = mi_direct_oracle(j, {Var::U}, {Var::V});
      CHECK(via_entropies == doctest::Approx(via_oracle).epsilon(1e-12));
      const double cond = mutual_information(j, {Var::U}, {Var::V}, {Var::X});
      const double cond_oracle =
          testsupport::cmi_direct_oracle(j, Var::U, Var::V, Var::X);
      CHECK(cond == doctest::Approx(cond_oracle).epsilon(1e-11));
      CHECK(cond >= -1e-10);
    }
  }
  SUBCASE("symmetry is exact") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const JointPmf j = random_uvx_joint(rng, 3, 2, 2);
      CHECK(mutual_information(j, {Var::U}, {Var::V}, {Var::X}) ==
            mutual_information(j, {Var::V}, {Var::U}, {Var::X}));
    }
  }
  SUBCASE("overlapping sets are rejected") {
    Rng rng(3);
    const JointPmf j = random_uvx_joint(rng, 2, 2, 2);
    CHECK_THROWS_AS(mutual_information(j, {Var::U}, {Var::U}), std::invalid_argument);
    CHECK_THROWS_AS(mutual_information(j, {Var::U}, {Var::V}, {Var::V}),
                    std::invalid_argument);
  }
}

TEST_CASE("extend through channel") {
  SUBCASE("noiseless channel copies X") {
    TransitionMatrix ident(2, 2, {1.0, 0.0, 0.0, 1.0});
    BroadcastChannel ch(ident, ident);
    const JointPmf j({Var::X}, {2}, {0.3, 0.7});
    const JointPmf e = extend_through_channel(j, ch, Var::Y1);
    CHECK(mutual_information(e, {Var::X}, {Var::Y1}) ==
          doctest::Approx(entropy(Pmf({0.3, 0.7}))).epsilon(1e-12));
  }
  SUBCASE("skew channel output marginal") {
    const BroadcastChannel ch = bssc(0.5);
    const JointPmf j({Var::X}, {2}, {0.5, 0.5});
    const JointPmf e = extend_through_channel(j, ch, Var::Y1);
    const JointPmf py1 = e.marginal({Var::Y1});
    CHECK(py1.table()[0] == doctest::Approx(0.25).epsilon(1e-15));
    const JointPmf e2 = extend_through_channel(j, ch, Var::Y2);
    CHECK(e2.marginal({Var::Y2}).table()[1] == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("constant rows make the output independent") {
    TransitionMatrix constant(2, 3, {0.2, 0.5, 0.3, 0.2, 0.5, 0.3});
    BroadcastChannel ch(constant, constant);
    const JointPmf j({Var::X}, {2}, {0.6, 0.4});
    const JointPmf e = extend_through_channel(j, ch, Var::Y1);
    CHECK(std::abs(mutual_information(e, {Var::X}, {Var::Y1})) <= 1e-12);
  }
  SUBCASE("marginal over existing axes is preserved") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const JointPmf j = random_uvx_joint(rng, 3, 2, 3);
      const BroadcastChannel ch = random_channel(rng, 3, 2, 3);
      const JointPmf e = extend_through_channel(j, ch, Var::Y2);
      const JointPmf back = e.marginal({Var::U, Var::V, Var::X});
      for (std::size_t i = 0; i < j.table().size(); ++i) {
        CHECK(back.table()[i] == doctest::Approx(j.table()[i]).epsilon(1e-14));
      }
    }
  }
  SUBCASE("size mismatch is rejected") {
    const BroadcastChannel ch = bssc(0.5);
    const JointPmf j({Var::X}, {3}, {0.2, 0.3, 0.5});
    CHECK_THROWS_AS(extend_through_channel(j, ch, Var::Y1), std::invalid_argument);
  }
}

TEST_CASE("data processing on randomized instances") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t nx = 2 + rng.next_u64() % 2;
    const JointPmf j = random_uvx_joint(rng, 2 + rng.next_u64() % 2, 2, nx);
    const BroadcastChannel ch = random_channel(rng, nx, 2, 3);
    const JointPmf e = extend_through_channel(j, ch, Var::Y1);
    const double ix = mutual_information(e, {Var::X}, {Var::Y1});
    CHECK(mutual_information(e, {Var::U}, {Var::Y1}) <= ix + 1e-10);
    CHECK(mutual_information(e, {Var::U, Var::V}, {Var::Y1}) <= ix + 1e-10);
    const double ix_v = mutual_information(e, {Var::X}, {Var::Y1}, {Var::V});
    CHECK(mutual_information(e, {Var::U}, {Var::Y1}, {Var::V}) <= ix_v + 1e-10);
  }
}
