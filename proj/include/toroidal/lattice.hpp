#pragma once

#include <vector>

#include "toroidal/rootsys.hpp"

namespace toroidal::fock {

using rootsys::IntMatrix;
using rootsys::IntVec;
using rootsys::RootSystem;

// Element of Gamma = Q_fin + sum Z delta_i + sum Z d_i (i < n). Vectors of Q
// have an empty or zero d part.
struct LatticeVector {
  IntVec beta;
  IntVec delta;
  IntVec d;

  auto operator<=>(const LatticeVector&) const = default;
};

class Lattice {
 public:
  // Throws NotSimplyLaced for B, C, F, G and InvalidArgument for n < 2.
  Lattice(RootSystem rs, int n);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank; }
  int nvars() const { return n_; }
  // Number of Heisenberg generators alpha_1..alpha_l, delta_1..delta_{n-1}.
  int generators() const { return rs_.rank + n_ - 1; }

  int fin(const IntVec& x, const IntVec& y) const;
  int norm(const IntVec& x) const { return fin(x, x); }
  // The full form on Gamma: (delta_i, alpha) = 0, (delta_i, delta_j) = 0,
  // (delta_i, d_j) = delta_ij, (d_i, d_j) = 0.
  int pair(const LatticeVector& x, const LatticeVector& y) const;
  // Gram entry of two Heisenberg generators.
  int gen_pair(int g, int h) const;

  LatticeVector make(IntVec beta, IntVec delta = {}, IntVec d = {}) const;

 private:
  RootSystem rs_;
  int n_;
  IntMatrix gram_;
};

// Bimultiplicative sign on Q_fin fixed by its values on simple roots:
// eps(a_i, a_j) = 1 for i <= j and (-1)^{(a_i,a_j)} for i > j. Delta and d
// parts never contribute.
class Cocycle {
 public:
  explicit Cocycle(const Lattice& lat);

  int simple(int i, int j) const { return table_[i][j]; }
  int eval(const IntVec& a, const IntVec& b) const;
  int eval(const LatticeVector& a, const LatticeVector& b) const { return eval(a.beta, b.beta); }

 private:
  IntMatrix table_;
};

}  // namespace toroidal::fock
