#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "toroidal/errors.hpp"
#include "toroidal/fock.hpp"
#include "toroidal/rootsys.hpp"

using namespace toroidal;
using namespace toroidal::fock;
using toroidal::series::Series;

namespace {

Lattice lat(char t, int l, int n) { return Lattice(rootsys::build_root_system(t, l), n); }

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

std::vector<IntVec> box_short_vectors(const Lattice& L, int emax, int bound) {
  std::vector<IntVec> out;
  IntVec v(L.rank());
  std::function<void(int)> rec = [&](int i) {
    if (i == L.rank()) {
      if (L.norm(v) <= 2 * emax) out.push_back(v);
      return;
    }
    for (int x = -bound; x <= bound; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

TorBasis random_basis(std::mt19937& rng, const ToroidalAlgebra& alg) {
  const auto& rs = alg.lattice().root_system();
  const int n = alg.nvars();
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  IntVec m(n);
  for (int& x : m) x = pick(-2, 2);
  switch (pick(0, 5)) {
    case 0:
    case 1:
    case 2: {
      auto roots = rs.roots();
      return TorBasis{Kind::Root, roots[pick(0, static_cast<int>(roots.size()) - 1)], m};
    }
    case 3:
      return TorBasis{Kind::Cartan, {pick(0, rs.rank - 1)}, m};
    case 4:
      return TorBasis{Kind::Central, {pick(0, n - 1)}, m};
    default:
      return TorBasis{Kind::Deriv, {pick(0, n - 1)}, {}};
  }
}

}  // namespace

TEST_SUITE("fock") {
TEST_CASE("cocycle is bimultiplicative and skew up to the form") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 3}, {'D', 4}}) {
    Lattice L = lat(t, l, 2);
    Cocycle eps(L);
    auto vs = box_short_vectors(L, 2, 1);
    for (const auto& a : vs) {
      for (const auto& b : vs) {
        int sign = L.fin(a, b) % 2 == 0 ? 1 : -1;
        CHECK(eps.eval(a, b) * eps.eval(b, a) == sign);
        for (const auto& c : std::vector<IntVec>{vs.front(), vs.back()}) {
          IntVec bc(l);
          for (int i = 0; i < l; ++i) bc[i] = b[i] + c[i];
          CHECK(eps.eval(a, bc) == eps.eval(a, b) * eps.eval(a, c));
        }
      }
    }
  }
  Cocycle a1(lat('A', 1, 2));
  CHECK(a1.simple(0, 0) == 1);
}

TEST_CASE("lattice guards") {
  CHECK_THROWS_AS(lat('G', 2, 2), NotSimplyLaced);
  CHECK_THROWS_AS(lat('B', 3, 2), NotSimplyLaced);
  CHECK_THROWS_AS(lat('A', 1, 1), InvalidArgument);
  Lattice L = lat('A', 2, 3);
  CHECK(L.generators() == 4);
  LatticeVector d1 = L.make({0, 0}, {1, 0}, {0, 0});
  LatticeVector dd = L.make({0, 0}, {0, 0}, {1, 0});
  CHECK(L.pair(d1, dd) == 1);
  CHECK(L.pair(d1, d1) == 0);
}

TEST_CASE("Jacobi identity on sampled triples") {
  for (auto [t, l, n] : std::vector<std::tuple<char, int, int>>{{'A', 1, 2}, {'A', 2, 2}, {'A', 1, 3}}) {
    ToroidalAlgebra alg(lat(t, l, n));
    std::mt19937 rng(7);
    for (int s = 0; s < 150; ++s) {
      auto x = ToroidalElement::basis(n, random_basis(rng, alg));
      auto y = ToroidalElement::basis(n, random_basis(rng, alg));
      auto z = ToroidalElement::basis(n, random_basis(rng, alg));
      auto jac = alg.bracket(x, alg.bracket(y, z)) + alg.bracket(y, alg.bracket(z, x)) + alg.bracket(z, alg.bracket(x, y));
      CHECK(jac.is_zero());
      CHECK(alg.bracket(x, y) == alg.bracket(y, x).scaled(Rational(-1)));
    }
  }
}

TEST_CASE("central relation sum m_i t^m K_i = 0") {
  ToroidalElement x(3);
  IntVec m{2, -1, 3};
  for (int i = 0; i < 3; ++i) x.add(TorBasis{Kind::Central, {i}, m}, Rational(m[i]));
  CHECK(x.is_zero());
  ToroidalElement y = ToroidalElement::central(0, m);
  CHECK(y.terms().count(TorBasis{Kind::Central, {0}, m}) == 0);
}

TEST_CASE("structure constants against the cocycle") {
  ToroidalAlgebra alg(lat('A', 3, 2));
  const auto& rs = alg.lattice().root_system();
  for (const auto& a : rs.roots()) {
    for (const auto& b : rs.roots()) {
      IntVec s(3);
      for (int i = 0; i < 3; ++i) s[i] = a[i] + b[i];
      if (!rs.is_root(s)) continue;
      CHECK(std::abs(alg.structure_constant(a, b)) == 1);
      CHECK(alg.structure_constant(a, b) == -alg.structure_constant(b, a));
    }
  }
}

TEST_CASE("automorphism and its inverse") {
  for (int n = 2; n <= 4; ++n) {
    ToroidalAlgebra alg(lat('A', 1, n));
    IntMatrix a = affine_swap_matrix(n);
    CHECK(std::abs(determinant(a)) == 1);
    IntMatrix a2 = matmul(a, a);
    CHECK(matmul(a2, a2) == identity_matrix(n));
    IntMatrix b = inverse_unimodular(a);
    std::mt19937 rng(3);
    for (int s = 0; s < 60; ++s) {
      auto x = ToroidalElement::basis(n, random_basis(rng, alg));
      CHECK(gl_automorphism_apply(b, gl_automorphism_apply(a, x)) == x);
    }
  }
  CHECK_THROWS_AS(gl_automorphism_apply({{2, 0}, {0, 1}}, ToroidalElement(2)), InvalidArgument);
}

TEST_CASE("short vectors against a box search") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 3}, {'D', 4}}) {
    FockSpace space(lat(t, l, 2));
    for (int e = 0; e <= 3; ++e) {
      auto got = space.short_vectors(e);
      auto want = box_short_vectors(space.lattice(), e, 4);
      CHECK(std::set<IntVec>(got.begin(), got.end()) == std::set<IntVec>(want.begin(), want.end()));
      CHECK(got.size() == want.size());
    }
  }
}

TEST_CASE("fixed-mbar dimensions are theta times coloured partitions") {
  for (auto [t, l, n] : std::vector<std::tuple<char, int, int>>{{'A', 1, 2}, {'A', 2, 2}, {'A', 1, 3}}) {
    FockSpace space(lat(t, l, n));
    const int emax = 5;
    std::vector<std::pair<int, int>> win(n - 1, {1, 1});
    std::vector<long long> got(emax + 1, 0);
    for (const auto& b : space.enumerate_basis(emax, win)) ++got[b.energy];
    for (int e = 0; e <= emax; ++e) {
      long long want = 0;
      for (const auto& beta : box_short_vectors(space.lattice(), e, 3)) {
        want += coloured_partitions(e - space.lattice().norm(beta) / 2, l + n - 1);
      }
      CHECK(got[e] == want);
    }
  }
  FockSpace a1(lat('A', 1, 2));
  std::vector<long long> want{1, 4, 9, 20, 42};
  std::vector<long long> got(5, 0);
  for (const auto& b : a1.enumerate_basis(4, {{0, 0}})) ++got[b.energy];
  CHECK(got == want);
}

TEST_CASE("basis order is by energy first") {
  FockSpace space(lat('A', 1, 2));
  auto basis = space.enumerate_basis(4, {{-1, 1}});
  for (std::size_t i = 1; i < basis.size(); ++i) {
    CHECK(basis[i - 1] < basis[i]);
    CHECK(basis[i - 1].energy <= basis[i].energy);
  }
}

TEST_CASE("Heisenberg commutators") {
  FockSpace space(lat('A', 2, 3));
  const int g = space.generators();
  FockVector v = space.vacuum();
  v = space.heisenberg_apply(0, -1, v);
  v = space.heisenberg_apply(2, -2, v);
  for (int a = 0; a < g; ++a) {
    for (int b = 0; b < g; ++b) {
      for (int k = 1; k <= 2; ++k) {
        FockVector ab = space.heisenberg_apply(a, k, space.heisenberg_apply(b, -k, v));
        FockVector ba = space.heisenberg_apply(b, -k, space.heisenberg_apply(a, k, v));
        FockVector want = fv_scaled(v, Rational(k * space.lattice().gen_pair(a, b)));
        CHECK(fv_sub(ab, ba) == want);
      }
    }
  }
  CHECK_THROWS_AS(space.heisenberg_apply(g, -1, v), InvalidArgument);
}

TEST_CASE("vacuum and character") {
  FockSpace space(lat('A', 1, 2));
  FockVector v = space.vacuum();
  CHECK(v.size() == 1);
  CHECK(v.begin()->first.energy == 0);
  Series ch = space.graded_character(3, {{0, 0}});
  CHECK(ch.forget_weights().coeff({1, 0}) == 4);
  CHECK(ch.coeff({1, 0}, {2}) == 1);
  CHECK(ch.coeff({1, 0}, {0}) == 2);
}
}
