#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "toroidal/errors.hpp"
#include "toroidal/rootsys.hpp"

using namespace toroidal;
using namespace toroidal::rootsys;

namespace {

std::size_t expected_positive(char t, int l) {
  switch (t) {
    case 'A':
      return l * (l + 1) / 2;
    case 'B':
    case 'C':
      return l * l;
    case 'D':
      return l * (l - 1);
    case 'E':
      return l == 6 ? 36 : l == 7 ? 63 : 120;
    case 'F':
      return 24;
    case 'G':
      return 6;
  }
  return 0;
}

// Simply-laced oracle: the roots are exactly the lattice vectors of norm 2.
std::set<IntVec> norm_two_vectors(const RootSystem& rs, int bound) {
  std::set<IntVec> out;
  IntVec v(rs.rank);
  std::function<void(int)> rec = [&](int i) {
    if (i == rs.rank) {
      if (pairing(rs, v, v) == 2) out.insert(v);
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

}  // namespace

TEST_SUITE("rootsys") {
TEST_CASE("positive root counts for every type up to rank 8") {
  for (auto [t, l] : all_types_up_to(8)) {
    RootSystem rs = build_root_system(t, l);
    CAPTURE(rs.label());
    CHECK(rs.num_positive_roots() == expected_positive(t, l));
    CHECK(rs.roots().size() == 2 * rs.num_positive_roots());
    CHECK(bilinear(rs, rs.theta, rs.theta) == 2);
    for (const auto& r : rs.positive_roots) CHECK(height(r) <= height(rs.theta));
  }
}

TEST_CASE("simply-laced roots are the norm-two vectors") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 3}, {'D', 4}, {'A', 4}}) {
    RootSystem rs = build_root_system(t, l);
    auto all = rs.roots();
    CHECK(std::set<IntVec>(all.begin(), all.end()) == norm_two_vectors(rs, 2));
  }
}

TEST_CASE("root strings are closed under reflections") {
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 3}, {'F', 4}, {'G', 2}, {'E', 6}}) {
    RootSystem rs = build_root_system(t, l);
    for (const auto& r : rs.roots()) {
      for (int i = 0; i < l; ++i) {
        // s_i(r) = r - <r, a_i^vee> a_i
        IntVec s = r;
        int c = 0;
        for (int j = 0; j < l; ++j) c += r[j] * rs.cartan[j][i];
        s[i] -= c;
        CHECK(rs.is_root(s));
      }
    }
  }
}

TEST_CASE("highest roots in fundamental coordinates") {
  CHECK(to_fundamental(build_root_system('A', 1), build_root_system('A', 1).theta) == IntVec{2});
  CHECK(to_fundamental(build_root_system('A', 3), build_root_system('A', 3).theta) == IntVec{1, 0, 1});
  RootSystem d4 = build_root_system('D', 4);
  IntVec f = to_fundamental(d4, d4.theta);
  CHECK(std::count(f.begin(), f.end(), 1) == 1);
  CHECK(std::count(f.begin(), f.end(), 0) == 3);
}

TEST_CASE("simply-laced detection") {
  CHECK(is_simply_laced(build_root_system('E', 8)));
  CHECK_FALSE(is_simply_laced(build_root_system('G', 2)));
  CHECK_FALSE(is_simply_laced(build_root_system('B', 2)));
}

TEST_CASE("invalid type or rank") {
  CHECK_THROWS_AS(build_root_system('A', 0), InvalidArgument);
  CHECK_THROWS_AS(build_root_system('E', 5), InvalidArgument);
  CHECK_THROWS_AS(build_root_system('G', 3), InvalidArgument);
  CHECK_THROWS_AS(build_root_system('X', 2), InvalidArgument);
}
}
