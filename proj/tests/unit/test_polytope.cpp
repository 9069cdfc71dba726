#include <doctest.h>

#include <random>

#include "supcon/actuator.hpp"
#include "supcon/polytope.hpp"
#include "supcon/supervisor.hpp"

using namespace supcon;

namespace {

Eigen::VectorXd point2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

HPolyhedron box2(double x_lo, double x_hi, double y_lo, double y_hi) {
  HPolyhedron p;
  p.H.resize(4, 2);
  p.H << 1, 0, -1, 0, 0, 1, 0, -1;
  p.h.resize(4);
  p.h << x_hi, -x_lo, y_hi, -y_lo;
  return p;
}

// Random 2x2 with spectral radius below 0.95, built from eigenvalues and a
// well-conditioned similarity.
Eigen::Matrix2d random_stable(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lam(-0.9, 0.9);
  std::uniform_real_distribution<double> ang(0.2, 1.4);
  Eigen::Matrix2d d = Eigen::Matrix2d::Zero();
  d(0, 0) = lam(rng);
  d(1, 1) = lam(rng);
  Eigen::Matrix2d t;
  const double c1 = std::cos(ang(rng));
  const double s1 = std::sin(ang(rng));
  t << c1, -s1, s1, c1;
  return t * d * t.inverse();
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("safe set transcribes the operating band") {
    const HPolyhedron s = safe_set(40.0);
    REQUIRE(s.rows() == 4);
    REQUIRE(s.dim() == 2);
    CHECK(s.H(0, 0) == -1.0);
    CHECK(s.H(1, 1) == -1.0);
    CHECK(s.H(2, 0) == 1.0);
    CHECK(s.H(3, 1) == 1.0);
    CHECK(s.h(0) == 40.0);
    CHECK(s.h(1) == 0.0);
    CHECK(s.contains(point2(0, 0)));
    CHECK(s.contains(point2(-40, 0)));
    CHECK(s.contains(point2(-17.3, 0)));
    CHECK_FALSE(s.contains(point2(1, 0)));
    CHECK_FALSE(s.contains(point2(-41, 0)));
    CHECK_FALSE(s.contains(point2(-10, 0.5)));
  }

  TEST_CASE("safe set needs a positive band") {
    CHECK_THROWS_AS(safe_set(0.0), DomainError);
    CHECK_THROWS_AS(safe_set(-3.0), DomainError);
  }

  TEST_CASE("pre image under identity is unchanged") {
    const HPolyhedron s = safe_set(40.0);
    const HPolyhedron p = pre_image(Eigen::Matrix2d::Identity(), s);
    CHECK(set_equal(p, s));
    CHECK(p.rows() == 4);
  }

  TEST_CASE("pre image composes the rows with the map") {
    const HPolyhedron s = safe_set(40.0);
    const Eigen::Matrix2d a_cl = error_matrix(ActuatorParams{}, 0.2);
    const HPolyhedron p = pre_image(a_cl, s);
    // H * A_cl for A_cl = [[0.76, 1.0], [0, 0.8]].
    Eigen::MatrixXd expect(4, 2);
    expect << -0.76, -1.0, 0.0, -0.8, 0.76, 1.0, 0.0, 0.8;
    CHECK((p.H - expect).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((p.h - s.h).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("pre image under a doubling map halves the band") {
    const HPolyhedron p = pre_image(2.0 * Eigen::Matrix2d::Identity(), safe_set(40.0));
    CHECK(p.contains(point2(-19, 0)));
    CHECK_FALSE(p.contains(point2(-21, 0)));
  }

  TEST_CASE("pre image checks dimensions") {
    CHECK_THROWS_AS(pre_image(Eigen::MatrixXd::Identity(3, 3), safe_set(40.0)),
                    DimensionMismatch);
  }

  TEST_CASE("minimize drops dominated rows") {
    HPolyhedron p;
    p.H.resize(2, 1);
    p.H << 1, 1;
    p.h.resize(2);
    p.h << 0, 1;  // x <= 0 subsumes x <= 1
    const HPolyhedron m = minimize(p);
    REQUIRE(m.rows() == 1);
    CHECK(m.h(0) == 0.0);
  }

  TEST_CASE("minimize keeps the safe set intact") {
    const HPolyhedron m = minimize(safe_set(40.0));
    CHECK(m.rows() == 4);
    CHECK(set_equal(m, safe_set(40.0)));
  }

  TEST_CASE("minimize reports empty polyhedra") {
    HPolyhedron p;
    p.H.resize(2, 1);
    p.H << 1, -1;
    p.h.resize(2);
    p.h << 0, -1;  // x <= 0, x >= 1
    CHECK_THROWS_AS(minimize(p), EmptySet);
  }

  TEST_CASE("minimize preserves membership") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> off(0.5, 4.0);
    std::uniform_real_distribution<double> coord(-6.0, 6.0);
    std::uniform_real_distribution<double> dir(-1.0, 1.0);
    for (int rep = 0; rep < 40; ++rep) {
      // A box plus random extra halfplanes through the outside.
      HPolyhedron p = box2(-off(rng), off(rng), -off(rng), off(rng));
      const int extra = static_cast<int>(rng() % 6);
      for (int i = 0; i < extra; ++i) {
        Eigen::Vector2d n(dir(rng), dir(rng));
        if (n.norm() < 1e-3) n << 1, 0;
        n.normalize();
        HPolyhedron grown;
        grown.H.resize(p.rows() + 1, 2);
        grown.H << p.H, n.transpose();
        grown.h.resize(p.rows() + 1);
        grown.h << p.h, off(rng) + 4.0;  // never cuts the box
        p = grown;
      }
      const HPolyhedron m = minimize(p);
      CHECK(m.rows() <= p.rows());
      for (int i = 0; i < 250; ++i) {
        const Eigen::VectorXd e = point2(coord(rng), coord(rng));
        CHECK(p.contains(e) == m.contains(e));
      }
    }
  }

  TEST_CASE("subset ordering on nested boxes") {
    const HPolyhedron inner = box2(-1, 1, -1, 1);
    const HPolyhedron outer = box2(-2, 2, -1.5, 3);
    CHECK(is_subset(inner, outer));
    CHECK_FALSE(is_subset(outer, inner));
    CHECK(is_subset(inner, inner));
  }

  TEST_CASE("half planes order by their offsets") {
    HPolyhedron a;
    a.H.resize(1, 1);
    a.H << 1;
    a.h.resize(1);
    a.h << 0;
    HPolyhedron b = a;
    b.h << 1;
    CHECK(is_subset(a, b));
    CHECK_FALSE(is_subset(b, a));
  }

  TEST_CASE("an empty set is a subset of anything") {
    HPolyhedron empty;
    empty.H.resize(2, 2);
    empty.H << 1, 0, -1, 0;
    empty.h.resize(2);
    empty.h << -1, -1;
    CHECK(is_subset(empty, box2(-1, 1, -1, 1)));
  }

  TEST_CASE("set equality ignores row order and redundancy") {
    const HPolyhedron s = safe_set(40.0);
    HPolyhedron shuffled;
    shuffled.H.resize(5, 2);
    shuffled.H << s.H.row(2), s.H.row(0), s.H.row(3), s.H.row(1), Eigen::RowVector2d(1, 0);
    shuffled.h.resize(5);
    shuffled.h << s.h(2), s.h(0), s.h(3), s.h(1), 7.0;  // extra loose row
    CHECK(set_equal(s, shuffled));
    CHECK_FALSE(set_equal(s, safe_set(41.0)));
  }

  TEST_CASE("one step closure certifies the contraction") {
    const HPolyhedron s = safe_set(40.0);
    const Eigen::Matrix2d a_cl = error_matrix(ActuatorParams{}, 0.2);
    CHECK(is_subset(s, pre_image(a_cl, s)));
    CHECK(set_equal(intersect(pre_image(a_cl, s), s), s));
    const InvariantSetResult res = max_invariant_set(a_cl, s);
    CHECK(res.iterations == 1);
    CHECK(res.spectral_radius == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(set_equal(res.invariant_set, s));
  }

  TEST_CASE("identity map fixes every set immediately") {
    const InvariantSetResult res = max_invariant_set(Eigen::Matrix2d::Identity(), safe_set(40.0));
    CHECK(res.iterations == 1);
    CHECK(set_equal(res.invariant_set, safe_set(40.0)));
  }

  TEST_CASE("slow refinements hit the iteration cap") {
    // A tilted contraction on a box keeps shaving corners for a few rounds.
    Eigen::Matrix2d rot;
    const double c = std::cos(1.1);
    const double s = std::sin(1.1);
    rot << c, -s, s, c;
    const Eigen::Matrix2d a = 0.97 * rot;
    const HPolyhedron box = box2(-1, 1, -0.2, 0.2);
    CHECK_THROWS_AS(max_invariant_set(a, box, 1), NoConvergence);
    try {
      max_invariant_set(a, box, 1);
    } catch (const NoConvergence& e) {
      CHECK(e.iterations == 1);
      CHECK(e.last.rows() >= 4);
      CHECK(is_subset(e.last, box));
    }
  }

  TEST_CASE("random contractions leave their fixed point invariant") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> off(0.3, 3.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int rep = 0; rep < 25; ++rep) {
      const Eigen::Matrix2d a = random_stable(rng);
      const HPolyhedron box = box2(-off(rng), off(rng), -off(rng), off(rng));
      const InvariantSetResult res = max_invariant_set(a, box, 60);
      // Sample the invariant set by shrinking box draws onto it, then check
      // one-step containment.
      int tested = 0;
      for (int i = 0; i < 400 && tested < 100; ++i) {
        Eigen::VectorXd e = point2((2 * unit(rng) - 1) * 3.0, (2 * unit(rng) - 1) * 3.0);
        double t_max = 1.0;
        for (int r = 0; r < res.invariant_set.rows(); ++r) {
          const double num = res.invariant_set.H.row(r).dot(e);
          if (num > 1e-12) t_max = std::min(t_max, res.invariant_set.h(r) / num);
        }
        if (t_max <= 0.0) continue;
        e *= t_max * unit(rng);
        REQUIRE(res.invariant_set.contains(e, 1e-7));
        CHECK(res.invariant_set.contains(a * e, 1e-7));
        ++tested;
      }
      CHECK(tested > 0);
    }
  }

  TEST_CASE("text form round trips") {
    const HPolyhedron s = safe_set(40.0);
    const std::string text = to_text(s);
    CHECK(text.substr(0, 4) == "2 4\n");
    const HPolyhedron back = polyhedron_from_text(text);
    REQUIRE(back.rows() == s.rows());
    CHECK((back.H - s.H).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.h - s.h).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("text parser rejects malformed input") {
    CHECK_THROWS_AS(polyhedron_from_text(""), IoError);
    CHECK_THROWS_AS(polyhedron_from_text("2 2\n1 0 0\n"), IoError);
    CHECK_THROWS_AS(polyhedron_from_text("0 1\n"), IoError);
  }
}
