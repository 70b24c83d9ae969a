#pragma once

#include <string>
#include <vector>

#include "toroidal/rational.hpp"

namespace toroidal::rootsys {

using IntVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;
using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Finite-type root data. Roots are integer vectors in the simple-root basis;
// the form is normalized so that the highest root has squared length 2.
struct RootSystem {
  char type = 'A';
  int rank = 0;
  IntMatrix cartan;  // cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)
  RatMatrix form;    // (a_i, a_j)
  std::vector<IntVec> positive_roots;  // sorted by height, then lexicographically
  IntVec theta;

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
  std::size_t num_positive_roots() const { return positive_roots.size(); }
  // All roots, positive ones followed by their negatives.
  std::vector<IntVec> roots() const;
  // Index into roots(), or -1.
  int root_index(const IntVec& r) const;
  bool is_root(const IntVec& r) const { return root_index(r) >= 0; }
};

// Weight in fundamental-weight coordinates, with an optional level along
// the affine fundamental weight.
struct Weight {
  IntVec fundamental;
  int level = 0;
};

RootSystem build_root_system(char type, int rank);
std::vector<std::pair<char, int>> all_types_up_to(int max_rank);

Rational bilinear(const RootSystem& rs, const RatVec& x, const RatVec& y);
Rational bilinear(const RootSystem& rs, const IntVec& x, const IntVec& y);
// Integer-valued form on the root lattice of a simply-laced system.
int pairing(const RootSystem& rs, const IntVec& x, const IntVec& y);

bool is_simply_laced(const RootSystem& rs);
int height(const IntVec& root);

// <x, a_i^vee> for each i: fundamental-weight coordinates of a root-lattice vector.
IntVec to_fundamental(const RootSystem& rs, const IntVec& root_coords);
// Root-basis coordinates of a weight (inverse Cartan transform).
RatVec to_root_coords(const RootSystem& rs, const Weight& w);

}  // namespace toroidal::rootsys
