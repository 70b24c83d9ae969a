#include <doctest.h>

#include "toroidal/errors.hpp"
#include "toroidal/rootsys.hpp"
#include "toroidal/weylmod.hpp"

using namespace toroidal;
using namespace toroidal::weylmod;

namespace {

struct Fixture {
  Fixture(char t, int l, int n) : space(fock::Lattice(rootsys::build_root_system(t, l), n)), model(space) {}
  FockSpace space;
  WeylModel model;
};

bool all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    if (!c.pass) MESSAGE(c.suite << " / " << c.name << ": " << c.detail);
  }
  return r.passed();
}

}  // namespace

TEST_SUITE("weylmod") {
TEST_CASE("affine Cartan matrices") {
  Fixture a1('A', 1, 2);
  CHECK(a1.model.cartan() == IntMatrix{{2, -2}, {-2, 2}});
  Fixture a2('A', 2, 2);
  CHECK(a2.model.cartan() == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
}

TEST_CASE("torus degrees move to m-bar through the matrix") {
  Fixture f('A', 1, 3);
  CHECK(f.model.mbar_of({2, 5}) == IntVec{-5, 2});
}

TEST_CASE("ad powers agree with iterated commutators") {
  Fixture f('A', 1, 2);
  OpExpr x = f.model.op(f.model.e(1, {1}));
  OpExpr y = f.model.op(f.model.f(0, {0}));
  FockVector v = f.space.vacuum();
  v = f.space.heisenberg_apply(0, -1, v);
  fock::ActionCache cache(f.space);
  OpExpr iter = y;
  for (int k = 1; k <= 3; ++k) {
    iter = commutator(x, iter);
    CHECK(apply(ad_power(x, k, y), v, cache) == apply(iter, v, cache));
  }
  CHECK(apply(divided_power(x, 2), v, cache) == fock::fv_scaled(apply(x * x, v, cache), Rational(1, 2)));
}

TEST_CASE("highest-weight relations") {
  Fixture f('A', 1, 2);
  CHECK(all_pass(highest_weight_check(f.model, 3)));
  Fixture g('A', 2, 3);
  CHECK(all_pass(highest_weight_check(g.model, 3, 1)));
}

TEST_CASE("too small a slice names the needed energy") {
  Fixture f('A', 1, 2);
  try {
    highest_weight_check(f.model, 0);
    FAIL("expected SliceExhausted");
  } catch (const SliceExhausted& e) {
    CHECK(e.have_emax == 0);
    CHECK(e.need_emax == 1);
  }
}

TEST_CASE("bracket fidelity on a small slice") {
  Fixture f('A', 1, 2);
  SliceConfig cfg;
  cfg.emax = 3;
  cfg.samples = 30;
  CHECK(all_pass(bracket_check(f.space, cfg)));
  Fixture g('A', 2, 3);
  cfg.emax = 2;
  cfg.samples = 10;
  cfg.mwindow = {{-1, 1}, {-1, 1}};
  CHECK(all_pass(bracket_check(g.space, cfg)));
}

TEST_CASE("negative control: the bracket sign is detected") {
  Fixture f('A', 1, 2);
  ToroidalElement x = ToroidalElement::root_vector({1}, {1, 0});
  ToroidalElement y = ToroidalElement::root_vector({-1}, {0, -1});
  ToroidalElement b = f.space.algebra().bracket(x, y);
  FockVector v = f.space.vacuum();
  v = f.space.heisenberg_apply(1, -1, v);
  FockVector xy = f.space.toroidal_apply(x, f.space.toroidal_apply(y, v));
  FockVector yx = f.space.toroidal_apply(y, f.space.toroidal_apply(x, v));
  FockVector good = f.space.toroidal_apply(b, v);
  CHECK(fock::fv_sub(xy, yx) == good);
  CHECK_FALSE(good.empty());
  CHECK_FALSE(fock::fv_sub(xy, yx) == fock::fv_scaled(good, Rational(-1)));
}

TEST_CASE("automorphism suite") {
  Fixture f('A', 2, 3);
  CHECK(all_pass(automorphism_check(f.space.algebra(), 40, 5)));
}

TEST_CASE("presentation on a small slice") {
  Fixture f('A', 1, 2);
  SliceConfig cfg;
  cfg.emax = 3;
  cfg.per_family = 2;
  cfg.mwindow = {{-1, 1}};
  CHECK(all_pass(presentation_check(f.model, cfg)));
}

TEST_CASE("Garland identities") {
  Fixture f('A', 1, 2);
  CHECK(all_pass(garland_identity_check(f.model, 2)));
  CHECK(all_pass(garland_bridge_check(8)));
}

TEST_CASE("negative control: the Garland sign is detected") {
  Fixture f('A', 1, 2);
  // E^(1) F_0^(1) v = -P_1 v with E = x_a t_1^2 t_2, F_0 = x_{-a} t_1^{-2}.
  fock::ActionCache cache(f.space);
  IntVec alpha{1}, minus{-1};
  OpExpr e = f.model.op(f.model.root(alpha, {2, 1}));
  OpExpr fo = f.model.op(f.model.root(minus, {-2, 0}));
  OpExpr h1 = f.model.op(f.model.cartan_elem(alpha, {0, 1}) + f.model.central(0, {0, 1}).scaled(Rational(2)));
  FockVector v = f.model.vacuum();
  FockVector lhs = apply(e * fo, v, cache);
  FockVector p1 = apply(h1.scaled(Rational(-1)), v, cache);
  CHECK_FALSE(lhs.empty());
  CHECK(lhs == fock::fv_scaled(p1, Rational(-1)));
  CHECK_FALSE(lhs == p1);
}

TEST_CASE("zhat reduction") {
  // |a| = 1: r Zhat(r, j)
  auto one = zhat_reduce(3, {1}, 2, 2);
  CHECK(one.size() == 1);
  CHECK(one.at({{3, 2}}) == 3);
  CHECK(zhat_reduce(1, {2}, 2, 2).empty());
  // r = 2, a = (2): sum_{m=1}^{1} (1/1) * 1 Zhat(1,2) * 1 Zhat(1,2)
  auto two = zhat_reduce(2, {2}, 2, 2);
  CHECK(two.size() == 1);
  CHECK(two.at({{1, 2}, {1, 2}}) == 1);
  CHECK(zhat_degree({{1, 2}, {3, 3}}, 3) == std::pair<int, IntVec>{4, {1, 1}});
  CHECK_THROWS_AS(zhat_reduce(0, {1}, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(zhat_reduce(2, {0}, 2, 2), InvalidArgument);
}

TEST_CASE("central rewriting lemma") {
  Fixture f('A', 1, 2);
  CHECK(all_pass(lemma_action_check(f.model, 4, 2)));
  CHECK(all_pass(zhat_check(f.model, 4, 2)));
  Fixture g('A', 1, 3);
  CHECK(all_pass(lemma_action_check(g.model, 3, 2)));
}

TEST_CASE("negative control: the local quotient is proper") {
  Fixture f('A', 1, 2);
  // t_1^-2 t_2 K_1 v = 2 Zhat(2,2) v lies outside the span of lower degrees,
  // and so does twice the correct right-hand side minus the left.
  FockVector v = f.model.vacuum();
  FockVector lhs = f.model.act(f.model.central(0, {-2, 1}), v);
  LocalQuotient n(f.model, {1}, 2, {0});
  CHECK_FALSE(n.contains(lhs));
  FockVector rhs = fock::fv_scaled(zhat_apply(f.model, {{2, 2}}, v), Rational(1));
  CHECK(n.contains(fock::fv_sub(lhs, rhs)));
  CHECK_FALSE(n.contains(fock::fv_sub(lhs, fock::fv_scaled(rhs, Rational(2)))));
}

TEST_CASE("character chain") {
  Fixture f('A', 1, 2);
  CHECK(all_pass(character_check(f.model, 4, 2)));
  Fixture g('A', 1, 3);
  CHECK(all_pass(character_check(g.model, 3, 1)));
}

TEST_CASE("basic representation dimensions") {
  Fixture f('A', 1, 2);
  CharTable t = l_zero_char(f.space, 4);
  CHECK(t.to_csv() == "q1,dim\n0,1\n1,3\n2,4\n3,7\n4,13\n");
  CHECK(t.series.coeff({1}, {2}) == 1);
  CHECK(t.series.coeff({1}, {0}) == 1);
}

TEST_CASE("character tables reject bad data") {
  Fixture f('A', 1, 2);
  CharTable t = l_zero_char(f.space, 3);
  CharTable bad = t;
  bad.series.add_term({2}, {0}, Rational(-5));
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  CharTable half = t;
  half.series.add_term({3}, {0}, Rational(1, 2));
  CHECK_THROWS_AS(half.validate(), InvalidArgument);
  CheckResult r = character_compare(t, half, "perturbed");
  CHECK_FALSE(r.pass);
  CHECK(r.detail.find("q1^3") != std::string::npos);
  CHECK_THROWS_AS(character_compare(t, fock_character(f.space, 3, {{0, 0}}), "vars"), WindowMismatch);
}

TEST_CASE("closed form and spanning tables agree as files") {
  Fixture f('A', 2, 2);
  CHECK(closed_form(f.space, 4, 2, true).to_csv() == spanning_character(f.space, 4, 2).to_csv());
}

TEST_CASE("symmetric-function suite") { CHECK(all_pass(symfun_check({8, 6, 4, 8}))); }

TEST_CASE("JSON-lines report") {
  Report r;
  r.add(CheckResult{"s", "a", true, 3, "x\"y"});
  r.add(CheckResult{"s", "b", false, 0, ""});
  CHECK(r.to_jsonl() ==
        "{\"suite\":\"s\",\"check\":\"a\",\"pass\":true,\"checked\":3,\"detail\":\"x\\\"y\"}\n"
        "{\"suite\":\"s\",\"check\":\"b\",\"pass\":false,\"checked\":0,\"detail\":\"\"}\n");
  CHECK_FALSE(r.passed());
}
}
