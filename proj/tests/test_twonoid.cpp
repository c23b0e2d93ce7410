#include <array>
#include <cmath>

#include "bryant/error.hpp"
#include "bryant/fuchsian.hpp"
#include "bryant/twonoid.hpp"
#include "doctest.h"

using namespace bryant;

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(Vec3 a, Vec3 b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

double dot3(Vec3 a, Vec3 b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross3(Vec3 a, Vec3 b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Vec3 ball_point(const TwonoidData& t, cplx z) {
  return to_poincare_ball(lorentz_from_herm(immersion_F(t, z)));
}

}  // namespace

TEST_CASE("the displayed end exponent comes out of the pairing") {
  const TwonoidData t = TwonoidData::from(0.0, 0.3, 0.3, 0.0);
  CHECK(std::abs(t.w - cplx(-0.09)) <= 1e-15);
  CHECK(std::abs(t.lambda - 0.4) <= 1e-12);
  const TwonoidData t6 =
      TwonoidData::from(std::sqrt(0.11), 0.0, 0.0, std::sqrt(0.11));
  CHECK(std::abs(t6.lambda - 0.6) <= 1e-12);
}

TEST_CASE("the closed-form frame has determinant 1 and solves its system") {
  const TwonoidData t4 = TwonoidData::from(0.0, 0.3, 0.3, 0.0);
  const TwonoidData t6 =
      TwonoidData::from(std::sqrt(0.11), 0.0, 0.0, std::sqrt(0.11));
  const cplx pts[] = {{0.7, 0.2},   {-0.4, 0.9}, {1.8, -1.1},
                      {0.05, -0.02}, {-2.5, -0.1}, {12.0, 5.0}};
  for (const TwonoidData* t : {&t4, &t6}) {
    for (cplx z : pts) {
      const TwonoidJet j = twonoid_jet(*t, z);
      CHECK(std::abs(det(j.psi) - 1.0) <= 1e-10);
      const Mat2 rhs = spinor_system(*t, z) * j.psi;
      CHECK(max_abs(j.psi_z - rhs) / max_abs(rhs) <= 1e-12);
      const double h = 1e-6;
      const Mat2 fd = (twonoid_psi(*t, z + h) - twonoid_psi(*t, z - h)) *
                      (1.0 / (2.0 * h));
      CHECK(max_abs(fd - rhs) / max_abs(rhs) <= 1e-8);
    }
  }
}

TEST_CASE("closed-form monodromy matches transport around the puncture") {
  const TwonoidData t4 = TwonoidData::from(0.0, 0.3, 0.3, 0.0);
  const TwonoidData t6 =
      TwonoidData::from(std::sqrt(0.11), 0.0, 0.0, std::sqrt(0.11));
  for (const TwonoidData* t : {&t4, &t6}) {
    const cplx base{0.5, 0.0};
    const Mat2 psiB = twonoid_psi(*t, base);
    const auto A = [&](cplx z) { return spinor_system(*t, z); };
    const Mat2 got = ode_transport(
        A, base, psiB, PathSpec::circle_loop(0.0, 0.5, base, 1, 16, {0.0}));
    const Mat2 want = psiB * twonoid_monodromy(*t);
    CHECK(max_abs(got - want) / max_abs(want) <= 1e-6);
  }
}

TEST_CASE("monodromy is unitary exactly when the exponent is real") {
  const TwonoidData t4 = TwonoidData::from(0.0, 0.3, 0.3, 0.0);
  CHECK(unitarity_defect(twonoid_monodromy(t4)) <= 1e-10);
  // pairing -1/2 puts the exponent at i/2, across the reality boundary
  const TwonoidData tc = TwonoidData::from(0.0, 1.0, 0.5, 0.0);
  CHECK(std::abs(tc.lambda - cplx(0.0, 0.5)) <= 1e-12);
  CHECK(unitarity_defect(twonoid_monodromy(tc)) >= 1e-3);
  // geometric face of the same dichotomy: F continuous across the branch
  // cut only in the unitary case
  const Mat2 up = immersion_F(t4, {-1.0, 1e-9}).m;
  const Mat2 dn = immersion_F(t4, {-1.0, -1e-9}).m;
  CHECK(max_abs(dn - up) / max_abs(up) <= 1e-8);
  const Mat2 upc = immersion_F(tc, {-1.0, 1e-9}).m;
  const Mat2 dnc = immersion_F(tc, {-1.0, -1e-9}).m;
  CHECK(max_abs(dnc - upc) / max_abs(upc) >= 1e-3);
}

TEST_CASE("fixed-radius circles map to circles in the ball") {
  const TwonoidData t4 = TwonoidData::from(0.0, 0.3, 0.3, 0.0);
  for (double r : {0.3, 0.7, 1.9}) {
    const int n = 24;
    std::array<Vec3, 3> probe;
    for (int k = 0; k < 3; ++k) {
      const double th = 2.0 * std::numbers::pi * (k * 5 % n) / n;
      probe[k] = ball_point(t4, r * std::exp(cplx(0.0, th)));
    }
    const Vec3 u = sub(probe[1], probe[0]), v = sub(probe[2], probe[0]);
    Vec3 nrm = cross3(u, v);
    const double nl = std::sqrt(dot3(nrm, nrm));
    nrm = {nrm[0] / nl, nrm[1] / nl, nrm[2] / nl};
    // circumcenter in the plane: [uu uv; uv vv][s;t] = [uu/2; vv/2]
    const double uu = dot3(u, u), vv = dot3(v, v), uv = dot3(u, v);
    const double det2 = uu * vv - uv * uv;
    const double s = 0.5 * vv * (uu - uv) / det2;
    const double tt = 0.5 * uu * (vv - uv) / det2;
    const Vec3 center = {probe[0][0] + s * u[0] + tt * v[0],
                         probe[0][1] + s * u[1] + tt * v[1],
                         probe[0][2] + s * u[2] + tt * v[2]};
    const Vec3 d0 = sub(probe[0], center);
    const double rho = std::sqrt(dot3(d0, d0));
    for (int k = 0; k < n; ++k) {
      const double th = 2.0 * std::numbers::pi * k / n;
      const Vec3 b = ball_point(t4, r * std::exp(cplx(0.0, th)));
      CHECK(std::abs(dot3(sub(b, probe[0]), nrm)) <= 1e-6);
      const Vec3 d = sub(b, center);
      CHECK(std::abs(std::sqrt(dot3(d, d)) - rho) <= 1e-6);
    }
  }
}

TEST_CASE("half-integer exponents require an explicit dressing") {
  const double s75 = std::sqrt(0.75);  // pairing 3/4 puts lambda at 1
  try {
    (void)TwonoidData::from(s75, 0.0, 0.0, s75);
    FAIL("expected HalfIntegerLambda");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HalfIntegerLambda);
  }
  const TwonoidData th =
      TwonoidData::from(s75, 0.0, 0.0, s75, Mat2::identity());
  CHECK(max_abs(twonoid_monodromy(th) + Mat2::identity()) <= 1e-10);
  const Mat2 Ah{std::sqrt(2.0), 1.0, 1.0, std::sqrt(2.0)};
  const TwonoidData th2 = TwonoidData::from(s75, 0.0, 0.0, s75, Ah);
  const TwonoidJet j = twonoid_jet(th2, {0.7, 0.2});
  CHECK(std::abs(det(j.psi) - 1.0) <= 1e-10);
  CHECK(max_abs(j.psi_z - spinor_system(th2, {0.7, 0.2}) * j.psi) /
            max_abs(j.psi) <=
        1e-12);
}

TEST_CASE("degenerate pairings and bad dressings are rejected") {
  try {
    (void)TwonoidData::from(1.0, 0.0, 1.0, 0.0);  // pairing 0
    FAIL("expected DegenerateData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateData);
  }
  try {
    (void)TwonoidData::from(0.0, 1.0, 0.25, 0.0);  // pairing -1/4
    FAIL("expected DegenerateData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateData);
    CHECK(std::string(e.what()).find("lambda") != std::string::npos);
  }
  try {
    (void)TwonoidData::from(0.0, 0.3, 0.3, 0.0, Mat2{1.0, 1.0, 0.0, 1.0});
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
  CHECK_THROWS_AS((void)TwonoidData::from(0.0, 0.3, 0.3, 0.0,
                                          Mat2{2.0, 0.0, 0.0, 2.0}),
                  std::invalid_argument);
  const TwonoidData t4 = TwonoidData::from(0.0, 0.3, 0.3, 0.0);
  CHECK_THROWS_AS((void)twonoid_psi(t4, 0.0), std::invalid_argument);
}
