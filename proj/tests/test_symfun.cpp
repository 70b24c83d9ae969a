#include <doctest.h>

#include <functional>

#include "toroidal/errors.hpp"
#include "toroidal/symfun.hpp"

using namespace toroidal;
using namespace toroidal::symfun;
using toroidal::series::Series;

namespace {

// e_r by summing over r-subsets of the variables.
Polynomial brute_elementary(int r, int n) {
  Polynomial p;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (left == 0) {
      p[e] += Rational(1);
      return;
    }
    if (i == n) return;
    e[i] = 1;
    rec(i + 1, left - 1);
    e[i] = 0;
    rec(i + 1, left);
  };
  rec(0, r);
  return p;
}

// h_r by summing over all exponent vectors of total degree r.
Polynomial brute_complete(int r, int n) {
  Polynomial p;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      p[e] += Rational(1);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, r);
  return p;
}

}  // namespace

TEST_SUITE("symfun") {
TEST_CASE("basis elements against direct expansion") {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= 5; ++r) {
      CHECK(elementary(r, n).expand() == brute_elementary(r, n));
      CHECK(complete(r, n).expand() == brute_complete(r, n));
    }
  }
  Polynomial p3 = power_sum(3, 2).expand();
  CHECK(p3.size() == 2);
  CHECK(p3.at({3, 0}) == 1);
  CHECK(p3.at({0, 3}) == 1);
  CHECK(elementary(4, 3).is_zero());
}

TEST_CASE("expansions are symmetric") {
  for (int r = 1; r <= 4; ++r) {
    CHECK(is_symmetric(elementary(r, 4).expand(), 4));
    CHECK(is_symmetric((power_sum(r, 4) * complete(2, 4)).expand(), 4));
  }
  Polynomial skew;
  skew[{1, 0, 0}] = Rational(1);
  CHECK_FALSE(is_symmetric(skew, 3));
}

TEST_CASE("products agree with expanded products") {
  SymFunction a = elementary(2, 3) + power_sum(1, 3).scaled(Rational(3));
  SymFunction b = complete(2, 3);
  CHECK((a * b).expand() == poly_mul(a.expand(), b.expand()));
}

TEST_CASE("partitions") {
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(6, 2).size() == 4);
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : partitions(n)) {
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.z() >= 1);
    }
  }
  CHECK(Partition({2, 1, 1}).z() == 4);
  CHECK(Partition({3, 3}).z() == 18);
  CHECK(Partition({1, 2}).parts == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Partition({2, -1}), InvalidArgument);
  // sum over partitions of n of n!/z_lambda counts permutations
  for (int n = 1; n <= 6; ++n) {
    Rational total(0);
    for (const auto& p : partitions(n)) total += Rational(factorial(n)) / Rational(p.z());
    CHECK(total == Rational(factorial(n)));
  }
}

TEST_CASE("Newton and generating-function identities") {
  CHECK(newton_e_check(1, 1));
  CHECK(newton_e_check(2, 3));
  CHECK(newton_e_check(3, 4));
  for (int n = 1; n <= 8; ++n) {
    CHECK(newton_e_check(n, 8));
    CHECK(newton_h_check(n, 8));
    CHECK(eh_check(n, 8));
  }
  auto em = expand_E_minus(4, 4);
  CHECK(em[0] == SymFunction::constant(4, Rational(1)));
  CHECK(em[1] == power_sum(1, 4).scaled(Rational(-1)));
  CHECK(em[3] == elementary(3, 4).scaled(Rational(-1)));
  auto hp = expand_H(4, 4);
  for (int n = 0; n <= 4; ++n) CHECK(hp[n] == complete(n, 4));
}

TEST_CASE("negative control: a sign flip breaks E(-t)") {
  auto em = expand_E_minus(3, 3);
  CHECK_FALSE(em[3] == elementary(3, 3));
}

TEST_CASE("symmetric-power Hilbert series") {
  Series s = sym_power_hilbert(2, {"t2"}, 2, false);
  CHECK(s.coeff({0}) == 1);
  CHECK(s.coeff({1}) == 1);
  CHECK(s.coeff({2}) == 2);
  Series one = sym_power_hilbert(0, {"t2"}, 3, false);
  CHECK(one.coeff({0}) == 1);
  CHECK(one.size() == 1);
  auto totals = by_total_degree(sym_power_hilbert(1, {"t2", "t3"}, 2, false), 2);
  CHECK(totals == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  CHECK_THROWS_AS(sym_power_hilbert(2, {"t2"}, 2, true), InvalidArgument);
}

TEST_CASE("Laurent symmetric powers count multisets") {
  // Two factors from t^-1, 1, t: sums -2..2 with counts 1,1,2,1,1.
  Series s = sym_power_hilbert(2, {"t2"}, 0, true, std::pair<int, int>{-1, 1});
  std::vector<int> want{1, 1, 2, 1, 1};
  for (int d = -2; d <= 2; ++d) CHECK(s.coeff({d}) == want[d + 2]);
}

TEST_CASE("block map of the generators") {
  BlockLayout one({2}, 1);
  BlockPoly x = phi_generator_image(0, {1}, one);
  BlockPoly x2 = phi_generator_image(0, {2}, one);
  CHECK(x * x - x2 == block_elementary(0, 2, {1}, one).scaled(Rational(2)));
  CHECK(phi_generator_image(0, {0}, one) == BlockPoly::constant(one, Rational(2)));
  CHECK(phi_derivation_image(one).is_zero());
  CHECK(phi_central_image(one).is_zero());
  BlockLayout single({1}, 1);
  BlockPoly y = phi_generator_image(0, {1}, single);
  CHECK(y.terms().size() == 1);
  CHECK_THROWS_AS(phi_generator_image(1, {1}, one), InvalidArgument);
}
}
