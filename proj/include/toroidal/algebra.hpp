#pragma once

#include <map>
#include <string>
#include <vector>

#include "toroidal/lattice.hpp"
#include "toroidal/rational.hpp"

namespace toroidal::fock {

enum class Kind { Root = 0, Cartan = 1, Central = 2, Deriv = 3 };

// Basis element of the toroidal algebra:
//   Root:    x_alpha (x) t^m   label = alpha (simple-root coordinates)
//   Cartan:  h_i (x) t^m       label = {i}
//   Central: t^m K_i           label = {i}
//   Deriv:   d_i               label = {i}, m empty
// Indices are 0-based.
struct TorBasis {
  Kind kind = Kind::Root;
  IntVec label;
  IntVec m;

  auto operator<=>(const TorBasis&) const = default;
};

// Finite linear combination of basis elements. Central terms are kept in the
// canonical form where, for m != 0, K_p with p the first index with m_p != 0
// never appears (it is eliminated using sum_i m_i t^m K_i = 0).
class ToroidalElement {
 public:
  ToroidalElement() = default;
  explicit ToroidalElement(int n) : n_(n) {}

  static ToroidalElement basis(int n, const TorBasis& b, const Rational& c = Rational(1));
  static ToroidalElement root_vector(const IntVec& alpha, const IntVec& m);
  static ToroidalElement cartan(int i, const IntVec& m);
  // h (x) t^m for h = sum_i coeffs[i] h_i.
  static ToroidalElement cartan_combination(const IntVec& coeffs, const IntVec& m);
  static ToroidalElement central(int i, const IntVec& m);
  static ToroidalElement derivation(int n, int i);

  int nvars() const { return n_; }
  const std::map<TorBasis, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ToroidalElement operator+(const ToroidalElement& o) const;
  ToroidalElement operator-(const ToroidalElement& o) const;
  ToroidalElement scaled(const Rational& c) const;
  bool operator==(const ToroidalElement& o) const { return terms_ == o.terms_; }

  void add(const TorBasis& b, const Rational& c);
  // Inserts without eliminating central terms. Elements built this way are
  // still valid inputs to actions, but == no longer means equality in the
  // algebra.
  void add_raw(const TorBasis& b, const Rational& c);
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<TorBasis, Rational> terms_;
};

// Bracket of the toroidal algebra over a simply-laced g in the Chevalley
// basis whose signs come from the cocycle: x_beta for beta > 0 corresponds to
// e^beta and x_{-beta} to eps(beta,-beta) e^{-beta}.
class ToroidalAlgebra {
 public:
  explicit ToroidalAlgebra(Lattice lat);

  const Lattice& lattice() const { return lat_; }
  const Cocycle& cocycle() const { return eps_; }
  int nvars() const { return lat_.nvars(); }

  // Sign c_alpha relating x_alpha to the lattice vertex operator.
  int root_sign(const IntVec& alpha) const;
  // N_{alpha,beta} with [x_alpha, x_beta] = N x_{alpha+beta} when alpha+beta is a root.
  int structure_constant(const IntVec& alpha, const IntVec& beta) const;

  ToroidalElement bracket(const ToroidalElement& x, const ToroidalElement& y) const;
  ToroidalElement bracket(const TorBasis& a, const TorBasis& b) const;

 private:
  void loop_bracket(const TorBasis& a, const TorBasis& b, const Rational& c, ToroidalElement& out) const;

  Lattice lat_;
  Cocycle eps_;
};

int determinant(const IntMatrix& a);
IntMatrix inverse_unimodular(const IntMatrix& a);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int n);
// Rows: (0,...,0,-1), e_2, ..., e_{n-1}, (1,0,...,0). Exchanges the roles of
// t_1 and t_n.
IntMatrix affine_swap_matrix(int n);

// x (x) t^m -> x (x) t^{m A^T}, t^m K_i -> sum_r a_{ri} t^{m A^T} K_r,
// d_i -> sum_r b_{ir} d_r with B = A^{-1}. Throws unless det A = +-1. With
// canonical = false the image terms are inserted with add_raw.
ToroidalElement gl_automorphism_apply(const IntMatrix& a, const ToroidalElement& x, bool canonical = true);

}  // namespace toroidal::fock
