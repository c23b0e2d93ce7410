#include <cmath>
#include <random>

#include "bryant/error.hpp"
#include "bryant/trinoid.hpp"
#include "doctest.h"

using namespace bryant;

namespace {

double rel(const Mat2& a, const Mat2& b) {
  return max_abs(a - b) / max_abs(b);
}

}  // namespace

TEST_CASE("bundle reproduces the closed-form unitarizer") {
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
  CHECK(std::abs(tb.r - 1.255343991815) <= 1e-9);
  CHECK(tb.unitary_defect <= 1e-8);
  CHECK(tb.validation_defect <= 1e-7);
  // dressed-solution determinant, constant over the domain
  CHECK(std::abs(tb.det_psi - cplx(-115.192249050, 39.670856389)) <=
        1e-6 * std::abs(tb.det_psi));
  CHECK(std::abs(det(tb.R) - 1.0) <= 1e-12);
}

TEST_CASE("representation selection picks the nearest singular end") {
  CHECK(representation_at({0.1, 0.0}) == Branch::zero);
  CHECK(representation_at({0.9, 0.05}) == Branch::one);
  CHECK(representation_at({5.0, 0.0}) == Branch::infinity);
  CHECK(representation_at({1.4, 0.0}) == Branch::one);
  CHECK(representation_at({1.8, 0.0}) == Branch::infinity);
  CHECK(representation_at({-0.3, 0.4}) == Branch::zero);
}

TEST_CASE("all canonical representations define the same frame") {
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
  const TrinoidBundle tb2 =
      make_trinoid_bundle(trinoid_from_d(0.2, 0.21, 0.22));
  const double im = std::sqrt(0.3125);  // |z| = |z-1| on the 0/1 seam
  for (const TrinoidBundle* b : {&tb, &tb2}) {
    CHECK(rel(psi_eval_with_branch(*b, {0.5, im}, Branch::one),
              psi_eval_with_branch(*b, {0.5, im}, Branch::zero)) <= 1e-7);
    CHECK(rel(psi_eval_with_branch(*b, {0.5, -im}, Branch::one),
              psi_eval_with_branch(*b, {0.5, -im}, Branch::zero)) <= 1e-7);
    CHECK(rel(psi_eval_with_branch(*b, {2.5, 1.5}, Branch::infinity),
              psi_eval_with_branch(*b, {2.5, 1.5}, Branch::zero)) <= 1e-7);
    CHECK(rel(psi_eval_with_branch(*b, {2.5, -1.5}, Branch::infinity),
              psi_eval_with_branch(*b, {2.5, -1.5}, Branch::zero)) <= 1e-7);
  }
}

TEST_CASE("the immersion is continuous across the branch cuts") {
  // Psi itself jumps by unitary right factors across the real axis; the
  // surface F = Psi Psi* must not see them.
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
  for (double x : {0.37, 2.2, -1.3}) {
    const Mat2 up = immersion_F(tb, {x, 1e-9}).m;
    const Mat2 dn = immersion_F(tb, {x, -1e-9}).m;
    CHECK(rel(dn, up) <= 1e-8);
  }
}

TEST_CASE("continuation around each puncture returns the immersion") {
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
  const cplx base{0.2, 0.0};
  const Mat2 psiB = psi_eval(tb, base);
  const Mat2 fB = psiB * adjoint(psiB);
  const auto A = [&](cplx z) { return spinor_system(tb.data, z); };
  for (Branch br : {Branch::zero, Branch::one, Branch::infinity}) {
    const Mat2 ret = ode_transport(A, base, psiB, monodromy_loop(br));
    CHECK(rel(ret * adjoint(ret), fB) <= 1e-6);
  }
}

TEST_CASE("the frame solves the spinor system") {
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
  const cplx pts[] = {{0.3, 0.25}, {-0.7, -0.6}, {2.1, 1.3}, {0.52, -0.48},
                      {1.4, 0.9},  {-0.2, 0.35}, {0.9, -1.1}, {3.0, -0.6}};
  for (cplx z : pts) {
    const PsiJet j = psi_jet(tb, z);
    const Mat2 rhs = spinor_system(tb.data, z) * j.psi;
    CHECK(max_abs(j.psi_z - rhs) / max_abs(j.psi_z) <= 1e-10);
    const double h = 1e-6;
    const Branch rep = representation_at(z);
    const Mat2 fd = (psi_eval_with_branch(tb, z + h, rep) -
                     psi_eval_with_branch(tb, z - h, rep)) *
                    (1.0 / (2.0 * h));
    CHECK(max_abs(fd - rhs) / max_abs(fd) <= 1e-6);
  }
}

TEST_CASE("the immersion lies on the unit-determinant sheet") {
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> ur(-2.5, 2.5);
  int used = 0;
  while (used < 20) {
    const cplx z{ur(rng), ur(rng)};
    if (std::abs(z) < 0.05 || std::abs(z - 1.0) < 0.05) continue;
    ++used;
    const Herm2 F = immersion_F(tb, z);
    CHECK(std::abs(det(F.m) - 1.0) <= 1e-8);
    CHECK(F.defect <= 1e-12);
    CHECK(trace(F.m).real() > 0.0);
  }
}

TEST_CASE("real spinor data produces a mirror-symmetric surface") {
  const TrinoidBundle tb = make_trinoid_bundle(symmetric_family(0.2));
  for (cplx z : {cplx{0.3, 0.4}, cplx{-0.8, 1.1}, cplx{2.2, -0.7}}) {
    const Herm2 F = immersion_F(tb, z);
    const Herm2 Fc = immersion_F(tb, std::conj(z));
    CHECK(max_abs(Fc.m - conj(F.m)) / max_abs(F.m) <= 1e-8);
  }
}

TEST_CASE("non-unitarizable data is rejected with its margin") {
  try {
    (void)make_trinoid_bundle(trinoid_from_d(0.9, 0.01, 0.015));
    FAIL("expected NotUnitarizable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnitarizable);
    CHECK(std::string(e.what()).find("margin") != std::string::npos);
  }
}
