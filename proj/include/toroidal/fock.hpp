#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/algebra.hpp"
#include "toroidal/lattice.hpp"
#include "toroidal/series.hpp"

namespace toroidal::fock {

// Heisenberg letter g(-depth) packed as depth * 64 + g. Generators 0..l-1 are
// alpha_1..alpha_l, generators l..l+n-2 are delta_1..delta_{n-1}.
inline int letter(int depth, int gen) { return depth * 64 + gen; }
inline int letter_depth(int code) { return code / 64; }
inline int letter_gen(int code) { return code % 64; }

// e^{beta + delta_mbar} (x) (product of letters). Ordered by energy, then
// mbar, beta and the sorted letter list.
struct FockBasis {
  int energy = 0;
  IntVec mbar;
  IntVec beta;
  std::vector<int> heis;

  auto operator<=>(const FockBasis&) const = default;
};

using FockVector = std::map<FockBasis, Rational>;

void fv_add(FockVector& v, const FockBasis& b, const Rational& c);
void fv_axpy(FockVector& out, const FockVector& v, const Rational& c);
FockVector fv_scaled(const FockVector& v, const Rational& c);
FockVector fv_sub(const FockVector& a, const FockVector& b);
int fv_max_energy(const FockVector& v);

// Polynomial in creation operators: sorted letter list -> coefficient.
using HeisPoly = std::map<std::vector<int>, Rational>;

// The level-one module V(0) = e^Q (x) S(a_-) for the toroidal algebra in n
// variables, with t_n the affine variable.
class FockSpace {
 public:
  explicit FockSpace(Lattice lat);
  FockSpace(const FockSpace&) = delete;
  FockSpace& operator=(const FockSpace&) = delete;

  const Lattice& lattice() const { return alg_.lattice(); }
  const ToroidalAlgebra& algebra() const { return alg_; }
  int rank() const { return lattice().rank(); }
  int nvars() const { return lattice().nvars(); }
  int generators() const { return lattice().generators(); }

  FockBasis make_basis(IntVec beta, IntVec mbar = {}, std::vector<int> heis = {}) const;
  std::string to_string(const FockBasis& b) const;
  std::string to_string(const FockVector& v) const;
  FockVector vacuum() const;

  // a(k) for a single generator; k < 0 creates, k > 0 differentiates, k = 0
  // acts by (a, gamma).
  FockVector heisenberg_apply(int gen, int k, const FockVector& v) const;
  // X_r(beta + delta_mbar): coefficient of z^{-r} in the vertex operator.
  FockVector vertex_apply(const IntVec& beta, const IntVec& mbar, int r, const FockVector& v) const;
  // T_r^a(delta_mbar) for a = sum_g coeffs[g] * generator g: coefficient of
  // z^{-r-1} in :a(z) X(delta_mbar, z):.
  FockVector normal_ordered_apply(const IntVec& coeffs, const IntVec& mbar, int r, const FockVector& v) const;

  FockVector toroidal_apply(const TorBasis& x, const FockBasis& b) const;
  FockVector toroidal_apply(const ToroidalElement& x, const FockVector& v) const;

  // All basis vectors with energy <= emax and mbar inside the window.
  std::vector<FockBasis> enumerate_basis(int emax, const std::vector<std::pair<int, int>>& mwindow) const;
  // Root-lattice vectors with (beta,beta)/2 <= emax.
  std::vector<IntVec> short_vectors(int emax) const;
  // Variables q (energy) and u1..u_{n-1} (delta degree); weight labels are
  // fundamental coordinates of the finite weight.
  series::Series graded_character(int emax, const std::vector<std::pair<int, int>>& mwindow) const;

  // Coefficient of z^l in exp(sum_k a(-k) z^k / k).
  const HeisPoly& schur(const IntVec& coeffs, int l) const;

 private:
  void vertex_basis(const IntVec& beta, const IntVec& mbar, int r, const FockBasis& b, const Rational& c,
                    FockVector& out) const;
  void delta_vertex(const IntVec& mbar, int s, const FockBasis& b, const Rational& c, FockVector& out) const;
  void normal_ordered_basis(const IntVec& coeffs, const IntVec& mbar, int r, const FockBasis& b,
                            const Rational& c, FockVector& out) const;
  // (a, gamma) for a generator combination and a finite part.
  int zero_mode(const IntVec& coeffs, const IntVec& beta) const;
  // (a, g) for a generator combination and a single generator.
  int gen_form(const IntVec& coeffs, int g) const;

  ToroidalAlgebra alg_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<IntVec, int>, HeisPoly> schur_cache_;
};

// Memoizes basis-level actions of a fixed set of elements. Not thread safe;
// intended to live for one check.
class ActionCache {
 public:
  explicit ActionCache(const FockSpace& space) : space_(space) {}
  FockVector apply(const ToroidalElement& x, const FockVector& v);
  FockVector apply(const TorBasis& x, const FockBasis& b);

 private:
  const FockSpace& space_;
  std::map<std::pair<TorBasis, FockBasis>, FockVector> memo_;
};

}  // namespace toroidal::fock
