#include <cmath>
#include <vector>

#include "doctest.h"
#include "hillduffing/duffing.hpp"
#include "hillduffing/error.hpp"
#include "oracles.hpp"

using namespace hd::duffing;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DuffingParams(0.0), hd::DomainError);
  CHECK_THROWS_AS(DuffingParams(1.0, 0.0), hd::DomainError);
  CHECK_THROWS_AS(DuffingParams(1.0, -2.0), hd::DomainError);
  CHECK_THROWS_AS(DuffingParams(std::nan("")), hd::DomainError);
  CHECK_THROWS_AS(energy(DuffingParams(1.0, 4.0)), hd::DomainError);
  CHECK(DuffingParams(1e6).modulus().value() < 1.0 / std::sqrt(2.0));
}

TEST_CASE("solution at reference times") {
  for (double d : {0.3, 1.0, -2.0}) {
    for (double w : {1.0, 4.0}) {
      const DuffingParams p(d, w);
      CHECK(solution(p, 0.0) == doctest::Approx(d).epsilon(1e-15));
      CHECK(velocity(p, 0.0) == 0.0);
      CHECK(std::abs(solution(p, 0.5 * period(p)) + d) < 1e-12);
    }
  }
  const DuffingParams p(1.0);
  CHECK(std::abs(std::abs(velocity(p, 0.25 * period(p))) - std::sqrt(1.5)) < 1e-12);
}

TEST_CASE("period against the energy-integral oracle") {
  for (double d : {0.01, 0.5, 1.0, 3.0, 10.0, 100.0}) {
    CHECK(std::abs(period(DuffingParams(d)) - oracle::duffing_period(d)) < 1e-12 * oracle::duffing_period(d));
  }
  CHECK(std::abs(period(DuffingParams(2.0, 4.0)) - 2.0 * oracle::duffing_period(2.0)) < 1e-12);
  CHECK(period(DuffingParams(-1.5)) == period(DuffingParams(1.5)));
  // frozen (mpmath, 30 digits)
  CHECK(std::abs(period(DuffingParams(1.0)) - 4.7680220291024608) < 1e-13);
}

TEST_CASE("energy") {
  CHECK(energy(0.0) == 0.0);
  CHECK(energy(DuffingParams(1.0)) == doctest::Approx(0.75));
  CHECK(phase_energy(0.0, std::sqrt(1.5)) == doctest::Approx(0.75));
  auto g = oracle::rng(10);
  for (int i = 0; i < 200; ++i) {
    const double d = oracle::uniform(g, 0.05, 5.0);
    const DuffingParams p(d);
    const double t = oracle::uniform(g, -30.0, 30.0);
    CHECK(std::abs(phase_energy(solution(p, t), velocity(p, t)) - energy(p)) < 1e-9 * (1 + energy(p)));
  }
}

TEST_CASE("property: period strictly decreasing in delta") {
  double prev = period(DuffingParams(0.1));
  for (int i = 2; i <= 100; ++i) {
    const double v = period(DuffingParams(0.1 * i));
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("property: ODE residual by finite differences") {
  auto g = oracle::rng(11);
  const double h = 1e-4;
  for (int i = 0; i < 100; ++i) {
    const double d = oracle::uniform(g, 0.1, 3.0);
    const double w = oracle::uniform(g, 0.25, 7.0);
    const DuffingParams p(d, w);
    const double t = oracle::uniform(g, 0.0, 20.0);
    const double y = solution(p, t);
    const double ydd = (solution(p, t + h) - 2 * y + solution(p, t - h)) / (h * h);
    CHECK(std::abs(ydd + (y + y * y * y) / w) < 1e-7 * (1 + d * d * d));
  }
}

TEST_CASE("property: even in t, zero mean") {
  auto g = oracle::rng(12);
  for (int i = 0; i < 50; ++i) {
    const DuffingParams p(oracle::uniform(g, 0.1, 4.0), oracle::uniform(g, 0.5, 5.0));
    const double t = oracle::uniform(g, 0.0, 25.0);
    CHECK(std::abs(solution(p, t) - solution(p, -t)) < 1e-10);
    const double T = period(p);
    const double mean = oracle::kronrod([&](double s) { return solution(p, s); }, 0.0, T) / T;
    CHECK(std::abs(mean) < 1e-8);
  }
}
