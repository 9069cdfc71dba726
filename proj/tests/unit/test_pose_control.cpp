#include <doctest.h>

#include <random>

#include "supcon/pose_control.hpp"

using namespace supcon;

TEST_SUITE("pose_control") {
  TEST_CASE("saturation clamps symmetrically") {
    CHECK(sat(0.5) == 0.5);
    CHECK(sat(-0.25) == -0.25);
    CHECK(sat(1.0) == 1.0);
    CHECK(sat(-1.0) == -1.0);
    CHECK(sat(7.0) == 1.0);
    CHECK(sat(-7.0) == -1.0);
    CHECK(sat(0.0) == 0.0);
  }

  TEST_CASE("signed command splits across the antagonistic pair") {
    const Eigen::Vector2d pos = siso_map(0.3);
    CHECK(pos(0) == 0.3);
    CHECK(pos(1) == 0.0);
    const Eigen::Vector2d neg = siso_map(-0.4);
    CHECK(neg(0) == 0.0);
    CHECK(neg(1) == 0.4);
    CHECK(siso_map(0.0) == Eigen::Vector2d::Zero());
    CHECK(siso_map(1.0)(0) == 1.0);
    CHECK(siso_map(-1.0)(1) == 1.0);
    CHECK_THROWS_WITH_AS(siso_map(1.2), doctest::Contains("siso_map"),
                         DomainError);
    CHECK_THROWS_AS(siso_map(-1.0000001), DomainError);
  }

  TEST_CASE("at most one channel ever pulls") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> mu(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
      const Eigen::Vector2d v = siso_map(mu(rng));
      CHECK(v.minCoeff() >= 0.0);
      CHECK(v.maxCoeff() <= 1.0);
      CHECK(v(0) * v(1) == 0.0);
    }
  }

  TEST_CASE("fresh pi step matches the hand computation") {
    PiAwState s;  // kp 0.02, ki 0.01, kaw 1
    const PiAwResult r = pi_aw_step(s, 10.0, 0.1);
    CHECK(r.state.integral == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.mu == doctest::Approx(0.21).epsilon(1e-14));
    CHECK(r.state.last_eta == doctest::Approx(0.21).epsilon(1e-14));
    CHECK(r.state.last_mu == r.mu);
  }

  TEST_CASE("saturated pi step clamps and the next step bleeds") {
    PiAwState s;
    const PiAwResult r1 = pi_aw_step(s, 300.0, 0.1);
    CHECK(r1.mu == 1.0);
    CHECK(r1.state.integral == doctest::Approx(30.0).epsilon(1e-14));
    CHECK(r1.state.last_eta == doctest::Approx(6.3).epsilon(1e-14));
    const PiAwResult r2 = pi_aw_step(r1.state, 0.0, 0.1);
    // integral 30 + 1.0*(1 - 6.3)*0.1 = 29.47
    CHECK(r2.state.integral == doctest::Approx(29.47).epsilon(1e-13));
    CHECK(r2.mu == doctest::Approx(0.2947).epsilon(1e-13));
  }

  TEST_CASE("an externally clamped command feeds back through last_mu") {
    PiAwState s;
    s.integral = 30.0;
    s.last_eta = 6.3;
    s.last_mu = 0.05;  // the loop realized far less than requested
    const PiAwResult r = pi_aw_step(s, 0.0, 0.1);
    CHECK(r.state.integral == doctest::Approx(29.375).epsilon(1e-13));
    CHECK(r.mu == doctest::Approx(0.29375).epsilon(1e-13));
  }

  TEST_CASE("back calculation recovers from saturation no later") {
    PiAwState with;
    with.kaw = 2.0;
    PiAwState without;
    without.kaw = 0.0;
    for (int k = 0; k < 50; ++k) {
      with = pi_aw_step(with, 100.0, 0.1).state;
      without = pi_aw_step(without, 100.0, 0.1).state;
    }
    CHECK(with.integral < without.integral);
    int steps_with = 0;
    int steps_without = 0;
    while (pi_aw_step(with, -50.0, 0.1).mu >= 1.0 && steps_with < 1000) {
      with = pi_aw_step(with, -50.0, 0.1).state;
      ++steps_with;
    }
    while (pi_aw_step(without, -50.0, 0.1).mu >= 1.0 && steps_without < 1000) {
      without = pi_aw_step(without, -50.0, 0.1).state;
      ++steps_without;
    }
    CHECK(steps_with < steps_without);
  }

  TEST_CASE("pi gains must be nonnegative and dt positive") {
    PiAwState s;
    s.kp = -0.1;
    CHECK_THROWS_WITH_AS(pi_aw_step(s, 0.0, 0.1), doctest::Contains("pi_aw.kp"),
                         DomainError);
    s = PiAwState{};
    s.kaw = -1.0;
    CHECK_THROWS_WITH_AS(pi_aw_step(s, 0.0, 0.1),
                         doctest::Contains("pi_aw.kaw"), DomainError);
    CHECK_THROWS_WITH_AS(pi_aw_step(PiAwState{}, 0.0, 0.0),
                         doctest::Contains("controller.dt"), DomainError);
  }

  TEST_CASE("fresh sliding step matches the hand computation") {
    SmcState s;  // lambda 0.5, ki 0.05, phi 20
    const SmcResult r = smc_step(s, 10.0, 0.1);
    // de = 100, surface = 100 + 10 + 0.05 = 110.05, saturates
    CHECK(r.mu == 1.0);
    CHECK(r.state.integral == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.state.last_error == 10.0);
  }

  TEST_CASE("inside the boundary layer the response is proportional") {
    SmcState s;
    s.last_error = 10.0;
    s.integral = 1.0;
    const SmcResult r = smc_step(s, 10.5, 0.1);
    // de = 5, surface = 5 + 10.5 + 0.05*2.05 = 15.6025
    CHECK(r.mu == doctest::Approx(0.780125).epsilon(1e-12));
    SmcState wide = s;
    wide.phi = 100.0;
    const SmcResult rw = smc_step(wide, 10.5, 0.1);
    CHECK(rw.mu == doctest::Approx(0.156025).epsilon(1e-12));
  }

  TEST_CASE("a thin boundary layer acts like a sign function") {
    SmcState s;
    s.phi = 1e-6;
    double sign = 1.0;
    for (int k = 0; k < 20; ++k) {
      const SmcResult r = smc_step(s, sign * 0.5, 0.1);
      CHECK(r.mu == sign);
      s = r.state;
      sign = -sign;
    }
  }

  TEST_CASE("steady error keeps integral action pushing") {
    // Step 0 carries a derivative kick; from step 1 on the error is flat and
    // only the integral term moves, so mu must ratchet upward.
    SmcState s;
    double first_flat = 0.0;
    double prev_mu = 0.0;
    for (int k = 0; k < 30; ++k) {
      const SmcResult r = smc_step(s, 2.0, 0.1);
      s = r.state;
      if (k == 1) first_flat = r.mu;
      if (k > 1) CHECK(r.mu >= prev_mu);
      prev_mu = r.mu;
    }
    CHECK(prev_mu > first_flat);
    CHECK(prev_mu < 1.0);
  }

  TEST_CASE("sliding gains are validated by name") {
    SmcState s;
    s.lambda = 0.0;
    CHECK_THROWS_WITH_AS(smc_step(s, 0.0, 0.1), doctest::Contains("smc.lambda"),
                         DomainError);
    s = SmcState{};
    s.phi = 0.0;
    CHECK_THROWS_WITH_AS(smc_step(s, 0.0, 0.1), doctest::Contains("smc.phi"),
                         DomainError);
    s = SmcState{};
    s.ki = -0.5;
    CHECK_THROWS_WITH_AS(smc_step(s, 0.0, 0.1), doctest::Contains("smc.ki"),
                         DomainError);
  }
}
