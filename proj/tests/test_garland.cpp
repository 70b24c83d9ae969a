#include <doctest.h>

#include "toroidal/errors.hpp"
#include "toroidal/garland.hpp"

using namespace toroidal;
using namespace toroidal::garland;

TEST_SUITE("garland") {
TEST_CASE("low-order coefficients") {
  auto p = garland_coeffs(3);
  CHECK(p[0] == GarlandPoly::constant(Rational(1)));
  CHECK(p[1] == GarlandPoly::symbol(1).scaled(Rational(-1)));
  GarlandPoly h1 = GarlandPoly::symbol(1), h2 = GarlandPoly::symbol(2), h3 = GarlandPoly::symbol(3);
  CHECK(p[2] == (h1 * h1 - h2).scaled(Rational(1, 2)));
  // -(h1^3 - 3 h1 h2 + 2 h3) / 6
  CHECK(p[3] == (h1 * h1 * h1 - (h1 * h2).scaled(Rational(3)) + h3.scaled(Rational(2))).scaled(Rational(-1, 6)));
}

TEST_CASE("coefficients are homogeneous of weighted degree s") {
  auto p = garland_coeffs(8);
  for (int s = 0; s <= 8; ++s) CHECK(p[s].grade() == s);
  CHECK_THROWS_AS((void)(GarlandPoly::symbol(1) + GarlandPoly::symbol(2)).grade(), InvalidArgument);
}

TEST_CASE("P(u) times its inverse series is one") {
  auto p = garland_coeffs(7);
  auto q = inverse_coeffs(7);
  for (int s = 0; s <= 7; ++s) {
    GarlandPoly sum;
    for (int j = 0; j <= s; ++j) sum = sum + p[j] * q[s - j];
    CHECK(sum == GarlandPoly::constant(Rational(s == 0 ? 1 : 0)));
  }
}

TEST_CASE("bridge to symmetric functions") {
  auto p = garland_coeffs(8);
  for (int s = 0; s <= 8; ++s) {
    bool faithful = false;
    auto img = garland_to_symfun(p[s], 8, 1, &faithful);
    CHECK(faithful);
    CHECK(img == symfun::elementary(s, 8).scaled(Rational(s % 2 == 0 ? 1 : -1)));
    // h[j] -> -p_j lands on h_s
    CHECK(garland_to_symfun(p[s], 8, -1) == symfun::complete(s, 8));
  }
  bool faithful = true;
  (void)garland_to_symfun(p[4], 2, 1, &faithful);
  CHECK_FALSE(faithful);
}

TEST_CASE("negative control: the bridge sign matters") {
  auto p = garland_coeffs(3);
  CHECK_FALSE(garland_to_symfun(p[3], 3) == symfun::elementary(3, 3));
}

TEST_CASE("symbol indices start at one") { CHECK_THROWS_AS(GarlandPoly::symbol(0), InvalidArgument); }
}
