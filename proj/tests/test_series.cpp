#include <doctest.h>

#include <functional>

#include "toroidal/errors.hpp"
#include "toroidal/series.hpp"

using namespace toroidal;
using namespace toroidal::series;

namespace {

// Partitions of n with parts <= max_part, each part k coming in `colours` colours.
long long coloured_partitions(int n, int colours) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int c = 0; c < colours; ++c) {
      for (int m = k; m <= n; ++m) p[m] += p[m - k];
    }
  }
  return p[n];
}

}  // namespace

TEST_SUITE("series") {
TEST_CASE("product formula matches coloured partition counts") {
  for (int colours = 1; colours <= 3; ++colours) {
    std::vector<std::pair<Monomial, int>> gens;
    for (int k = 1; k <= 12; ++k) gens.emplace_back(Monomial{{"q", k}}, colours);
    Series s = product_formula(gens, Window({"q"}, {{0, 12}}));
    for (int m = 0; m <= 12; ++m) CHECK(s.coeff({m}) == coloured_partitions(m, colours));
  }
}

TEST_CASE("geometric inverse times (1 - g) is one") {
  Window w({"x", "y"}, {{0, 6}, {0, 4}});
  for (auto g : {Monomial{{"x", 1}}, Monomial{{"x", 2}, {"y", 1}}, Monomial{{"y", 3}}}) {
    Series inv = geom_inverse(g, w);
    Series lin = Series::one(w);
    lin.add_term(w.to_exponents(g), {}, Rational(-1));
    CHECK(inv * lin == Series::one(w));
  }
}

TEST_CASE("negative multiplicity gives a finite product") {
  Window w({"q"}, {{0, 5}});
  Series s = product_formula({{Monomial{{"q", 1}}, -2}}, w);
  CHECK(s.coeff({0}) == 1);
  CHECK(s.coeff({1}) == -2);
  CHECK(s.coeff({2}) == 1);
  CHECK(s.coeff({3}) == 0);
}

TEST_CASE("multiplication truncates to the common window") {
  Series a(Window({"q"}, {{0, 3}}));
  Series b(Window({"q"}, {{0, 5}}));
  a.add_term({2}, {}, Rational(1));
  b.add_term({2}, {}, Rational(1));
  b.add_term({1}, {}, Rational(1));
  Series c = a * b;
  CHECK(c.window().bounds()[0] == std::pair<int, int>{0, 3});
  CHECK(c.coeff({3}) == 1);
  CHECK(c.size() == 1);
}

TEST_CASE("variables are matched by name") {
  Series a(Window({"x", "y"}, {{0, 2}, {0, 2}}));
  a.add_term({1, 0}, {}, Rational(1));
  Series b(Window({"y", "x"}, {{0, 2}, {0, 2}}));
  b.add_term({1, 0}, {}, Rational(1));
  Series c = a * b;
  CHECK(c.coeff(Monomial{{"x", 1}, {"y", 1}}) == 1);
}

TEST_CASE("errors") {
  Series a(Window({"q"}, {{0, 2}}));
  CHECK_THROWS_AS(a.add_term({3}, {}, Rational(1)), OutOfWindow);
  CHECK_THROWS_AS((void)a.coeff(std::vector<int>{-1}), OutOfWindow);
  Series b(Window({"u"}, {{0, 2}}));
  CHECK_THROWS_AS((void)(a * b), WindowMismatch);
  Series c(Window({"q"}, {{0, 2}}), 1);
  CHECK_THROWS_AS((void)(a + c), WindowMismatch);
  CHECK_THROWS_AS(geom_inverse(Monomial{{"q", -1}}, Window({"q"}, {{-3, 3}})), Divergence);
  CHECK_THROWS_AS(Window({"q", "q"}, {{0, 1}, {0, 1}}), InvalidArgument);
}

TEST_CASE("weights add under multiplication") {
  Window w({"q"}, {{0, 4}});
  Series a(w, 1), b(w, 1);
  a.add_term({1}, {2}, Rational(1));
  b.add_term({2}, {-2}, Rational(3));
  b.add_term({1}, {1}, Rational(1));
  Series c = a * b;
  CHECK(c.coeff({3}, {0}) == 3);
  CHECK(c.coeff({2}, {3}) == 1);
  CHECK(c.forget_weights().coeff({3}) == 3);
  CHECK(c.weight_slice({3}).coeff({2}) == 1);
}

TEST_CASE("slice and embed") {
  Window w({"q", "u"}, {{0, 3}, {-1, 1}});
  Series s(w);
  s.add_term({2, -1}, {}, Rational(5));
  s.add_term({1, 0}, {}, Rational(7));
  Series t = s.slice("u", -1);
  CHECK(t.window().vars() == std::vector<std::string>{"q"});
  CHECK(t.coeff({2}) == 5);
  CHECK(t.size() == 1);
  Series e = t.embedded(Window({"p", "r"}, {{0, 5}, {0, 1}}), {{"q", "p"}});
  CHECK(e.coeff({2, 0}) == 5);
}

TEST_CASE("json is deterministic and exact") {
  Series s(Window({"q"}, {{0, 2}}));
  s.add_term({1}, {}, Rational(-3, 2));
  CHECK(s.to_json() == R"({"variables":["q"],"window":{"q":[0,2]},"terms":[{"weight":null,"exp":{"q":1},"num":-3,"den":2}]})");
}
}
