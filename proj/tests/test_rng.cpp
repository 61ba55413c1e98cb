#include "doctest.h"
#include "selinf/rng.hpp"

#include <cmath>

using namespace selinf;

TEST_CASE("same (seed, stream) reproduces the same draws") {
  RngStream a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  RngStream c(42, 7), d(42, 7);
  for (int i = 0; i < 100; ++i) CHECK(c.normal() == d.normal());
}

TEST_CASE("different streams and seeds decorrelate") {
  RngStream a(42, 0), b(42, 1), c(43, 0);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 64; ++i) {
    const auto x = a.next_u64();
    if (x == b.next_u64()) ++same_ab;
    if (x == c.next_u64()) ++same_ac;
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("uniforms stay inside the open unit interval") {
  RngStream r(1, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform01();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("normal moments") {
  RngStream r(5, 3);
  const long n = 200000;
  double s = 0.0, s2 = 0.0;
  for (long i = 0; i < n; ++i) {
    const double x = r.normal();
    s += x;
    s2 += x * x;
  }
  const double mean = s / n, var = s2 / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("chi-square moments across dof regimes") {
  for (double dof : {1.0, 2.0, 7.5, 1587.0}) {
    RngStream r(9, 1);
    const long n = 50000;
    double s = 0.0, s2 = 0.0;
    for (long i = 0; i < n; ++i) {
      const double x = r.chisq(dof);
      CHECK(x >= 0.0);
      s += x;
      s2 += x * x;
    }
    const double mean = s / n, var = s2 / n - mean * mean;
    CHECK(mean == doctest::Approx(dof).epsilon(0.05));
    CHECK(var == doctest::Approx(2.0 * dof).epsilon(0.12));
  }
}

TEST_CASE("normal_vector matches scalar draws") {
  RngStream a(11, 2), b(11, 2);
  const Eigen::VectorXd v = a.normal_vector(10);
  for (int i = 0; i < 10; ++i) CHECK(v(i) == b.normal());
}
