#include <doctest.h>

#include <random>

#include "supcon/actuator.hpp"

using namespace supcon;

TEST_SUITE("actuator") {
  TEST_CASE("defaults validate") {
    const ActuatorParams p;
    CHECK_NOTHROW(validate(p));
  }

  TEST_CASE("validate names the failing field") {
    ActuatorParams p;
    p.a1 = 1.0;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("a1"), DomainError);
    p = ActuatorParams{};
    p.a2 = 0.0;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("a2"), DomainError);
    p = ActuatorParams{};
    p.a3 = -0.1;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("a3"), DomainError);
    p = ActuatorParams{};
    p.dt = 0.0;
    CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("dt"), DomainError);
  }

  TEST_CASE("step at the passive fixed point") {
    const ActuatorParams p;
    CHECK(step(p, 25.0, 0.0) == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(step(p, 25.0, 1.0) == doctest::Approx(35.0).epsilon(1e-12));
    CHECK(step(p, 25.0, 0.5) == doctest::Approx(30.0).epsilon(1e-12));
  }

  TEST_CASE("step rejects duty outside [0,1]") {
    const ActuatorParams p;
    CHECK_THROWS_AS(step(p, 25.0, -0.01), DomainError);
    CHECK_THROWS_AS(step(p, 25.0, 1.01), DomainError);
  }

  TEST_CASE("step is monotone in the input") {
    const ActuatorParams p;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uw(0.0, 120.0);
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const double w = uw(rng);
      double u1 = uu(rng);
      double u2 = uu(rng);
      if (u1 > u2) std::swap(u1, u2);
      CHECK(step(p, w, u1) <= step(p, w, u2));
    }
  }

  TEST_CASE("constant duty converges to the affine equilibrium") {
    const ActuatorParams p;
    CHECK(equilibrium(p, 0.0) == doctest::Approx(25.0).epsilon(1e-12));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
      const double u = uu(rng);
      double w = 25.0;
      for (int k = 0; k < 1000; ++k) w = step(p, w, u);
      CHECK(w == doctest::Approx(equilibrium(p, u)).epsilon(1e-9));
    }
  }

  TEST_CASE("augmented matrices transcribe the coefficients") {
    const AugmentedSystem sys = augmented_matrices(ActuatorParams{});
    CHECK(sys.A(0, 0) == 0.95);
    CHECK(sys.A(0, 1) == 1.25);
    CHECK(sys.A(1, 0) == 0.0);
    CHECK(sys.A(1, 1) == 1.0);
    CHECK(sys.B(0) == 10.0);
    CHECK(sys.B(1) == 0.0);
  }

  TEST_CASE("matrix form agrees with the scalar step") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ua1(0.1, 0.99);
    std::uniform_real_distribution<double> ua2(0.1, 40.0);
    std::uniform_real_distribution<double> ua3(0.0, 5.0);
    std::uniform_real_distribution<double> uw(-20.0, 150.0);
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
      ActuatorParams p;
      p.a1 = ua1(rng);
      p.a2 = ua2(rng);
      p.a3 = ua3(rng);
      const AugmentedSystem sys = augmented_matrices(p);
      const double w = uw(rng);
      const double u = uu(rng);
      const Eigen::Vector2d next = sys.A * augmented(w) + sys.B * u;
      CHECK(next(0) == doctest::Approx(step(p, w, u)).epsilon(1e-12));
      CHECK(next(1) == 1.0);
    }
  }

  TEST_CASE("calibrate recovers the generator on a clean log") {
    const ActuatorParams truth;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    std::vector<CalibrationSample> log;
    double w = 25.0;
    for (int k = 0; k < 50; ++k) {
      const double u = uu(rng);
      const double next = step(truth, w, u);
      log.push_back({w, u, next});
      w = next;
    }
    const ActuatorParams fit = calibrate(log, truth.dt);
    CHECK(fit.a1 == doctest::Approx(truth.a1).epsilon(1e-8));
    CHECK(fit.a2 == doctest::Approx(truth.a2).epsilon(1e-8));
    CHECK(fit.a3 == doctest::Approx(truth.a3).epsilon(1e-8));
    CHECK(fit.dt == truth.dt);
    CHECK(prediction_rms(fit, log) < 1e-8);
  }

  TEST_CASE("calibrate rejects a log with no excitation") {
    std::vector<CalibrationSample> log;
    for (int k = 0; k < 20; ++k) log.push_back({40.0, 0.5, 40.0});
    CHECK_THROWS_AS(calibrate(log, 0.1), RankDeficient);
  }

  TEST_CASE("calibrate rejects an unstable fit") {
    // Data generated by w' = 1.02 w + 5 u + 1: the best fit has a1 > 1.
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    std::vector<CalibrationSample> log;
    double w = 25.0;
    for (int k = 0; k < 40; ++k) {
      const double u = uu(rng);
      const double next = 1.02 * w + 5.0 * u + 1.0;
      log.push_back({w, u, next});
      w = next;
    }
    CHECK_THROWS_WITH_AS(calibrate(log, 0.1), doctest::Contains("a1"), DomainError);
  }

  TEST_CASE("calibrate needs at least three samples") {
    std::vector<CalibrationSample> log = {{25.0, 0.0, 25.0}, {25.0, 1.0, 35.0}};
    CHECK_THROWS_AS(calibrate(log, 0.1), RankDeficient);
  }
}
