#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/algebra.hpp"
#include "toroidal/fock.hpp"
#include "toroidal/report.hpp"
#include "toroidal/series.hpp"

namespace toroidal::weylmod {

using fock::FockBasis;
using fock::FockSpace;
using fock::FockVector;
using fock::IntMatrix;
using fock::IntVec;
using fock::Kind;
using fock::TorBasis;
using fock::ToroidalElement;

// Linear combination of words in operators. A word is stored left to right,
// so its last letter acts first.
struct Word {
  Rational coeff;
  std::vector<ToroidalElement> letters;
};

class OpExpr {
 public:
  OpExpr() = default;
  static OpExpr identity();
  static OpExpr single(const ToroidalElement& x);

  const std::vector<Word>& words() const { return words_; }
  bool uses_derivations() const;

  OpExpr operator+(const OpExpr& o) const;
  OpExpr operator-(const OpExpr& o) const;
  OpExpr operator*(const OpExpr& o) const;
  OpExpr scaled(const Rational& c) const;

 private:
  std::vector<Word> words_;
};

OpExpr commutator(const OpExpr& a, const OpExpr& b);
// (ad x)^k y = sum_p C(k,p) (-1)^p x^{k-p} y x^p.
OpExpr ad_power(const OpExpr& x, int k, const OpExpr& y);
// x^k / k!.
OpExpr divided_power(const OpExpr& x, int k);

// The module V = A^* V(0). Elements are written in the convention where t_1 is
// the affine variable (index 0 below); every element is pulled through the
// matrix A before it reaches the Fock action.
//
// Generators, with kbar in Z^{n-1} standing for the exponents of t_2..t_n:
//   e_{i,k} = x_{a_i} t^(0,k),   f_{i,k} = x_{-a_i} t^(0,k),   h_{i,k} = h_i t^(0,k)
//   e_{0,k} = x_{-theta} t^(1,k), f_{0,k} = x_theta t^(-1,k),
//   h_{0,k} = -h_theta t^(0,k) + t^(0,k) K_1
//   delta_r(s) = sum_{i >= 2} r_i t^(0,s) K_i,  d_j -> d_j.
// Node indices: 0 is the affine node, 1..l the finite simple roots.
class WeylModel {
 public:
  explicit WeylModel(const FockSpace& space);

  const FockSpace& space() const { return space_; }
  int rank() const { return space_.rank(); }
  int nvars() const { return space_.nvars(); }
  // Affine Cartan matrix of the nodes 0..l.
  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& matrix() const { return a_; }

  ToroidalElement e(int i, const IntVec& k) const;
  ToroidalElement f(int i, const IntVec& k) const;
  ToroidalElement h(int i, const IntVec& k) const;
  ToroidalElement delta(const IntVec& r, const IntVec& s) const;
  // j is 0-based: d(0) is d_1.
  ToroidalElement d(int j) const;
  // x_alpha (x) t^m, m in Z^n.
  ToroidalElement root(const IntVec& alpha, const IntVec& m) const;
  // h (x) t^m with h = sum_i coeffs[i] h_i.
  ToroidalElement cartan_elem(const IntVec& coeffs, const IntVec& m) const;
  // t^m K_i, 0-based i, without eliminating K_p.
  ToroidalElement central(int i, const IntVec& m) const;

  // Term-by-term image under A, central terms left uncanonicalized.
  ToroidalElement image(const ToroidalElement& x) const;
  OpExpr op(const ToroidalElement& x) const { return OpExpr::single(image(x)); }
  FockVector act(const ToroidalElement& x, const FockVector& v) const;
  FockVector vacuum() const { return space_.vacuum(); }
  // Fock m-bar of the torus degree kbar: (-k_n, k_2, ..., k_{n-1}).
  IntVec mbar_of(const IntVec& kbar) const;

 private:
  IntVec kvec(int first, const IntVec& k) const;
  const FockSpace& space_;
  IntMatrix a_;
  IntMatrix cartan_;
  IntVec theta_;
};

// Applies an operator expression; basis actions are memoized in `cache`.
FockVector apply(const OpExpr& x, const FockVector& v, fock::ActionCache& cache);

// --- verification suites -------------------------------------------------

struct SliceConfig {
  int emax = 6;
  std::vector<std::pair<int, int>> mwindow;  // empty: [-2,2] in every slot
  int samples = 200;                         // element pairs for bracket_check
  int per_family = 8;                        // instances per relation family
  std::uint32_t seed = 1;
};

// [x, y] acting on the slice equals the commutator of the actions. Elements
// are sampled in the Fock convention (t_n affine) with exponents in [-2,2].
Report bracket_check(const FockSpace& space, const SliceConfig& cfg);
// A([x,y]) = [A x, A y] on sampled pairs, and A(A x) equals the image under
// the squared matrix.
Report automorphism_check(const fock::ToroidalAlgebra& alg, int samples, std::uint32_t seed);
// The defining relations of the global Weyl module on v, for kbar in
// [-krange, krange]^{n-1}.
Report highest_weight_check(const WeylModel& model, int emax, int krange = 2);
// R1-R9 as operator identities on the slice, kbar and sbar sampled in
// [-2,2]^{n-1}, at most cfg.per_family instances per family.
Report presentation_check(const WeylModel& model, const SliceConfig& cfg);
// Both Garland identities for r = 1..r_max over the root and monomial
// cases listed in the implementation.
Report garland_identity_check(const WeylModel& model, int r_max);
// p^(s) under h[j] -> p_j equals (-1)^s e_s, s <= s_max, in s_max variables.
Report garland_bridge_check(int s_max);

// Newton identities for e and h, the partition-sum expansions of E(-t) and
// H(t), and E(t)H(-t) = 1, in nvars variables up to the given degrees.
struct SymfunConfig {
  int nvars = 12;
  int newton_max = 10;
  int partition_max = 6;
  int eh_order = 12;
};
Report symfun_check(const SymfunConfig& cfg = {});

// --- the local module at abar = 0 ----------------------------------------

// Generator (r, j) of the central polynomial algebra: t_1^{-r} t_j K_1, with
// r > 0 and 2 <= j <= n (1-based, as in the torus variables).
using ZhatGen = std::pair<int, int>;
// Sorted multiset of generators.
using ZhatMonomial = std::vector<ZhatGen>;
using ZhatCombination = std::map<ZhatMonomial, Rational>;

ZhatMonomial zhat_normalize(ZhatMonomial w);
// Bidegree: total r, then the multiplicity of each j = 2..n.
std::pair<int, IntVec> zhat_degree(const ZhatMonomial& w, int nvars);

// Rewrites t_1^{-r} t^a K_j v (a in Z_{>=0}^{n-1}, a_j >= 1, 1-based j >= 2)
// as a combination of Zhat monomials applied to v, valid in the local
// module at abar = 0.
ZhatCombination zhat_reduce(int r, const IntVec& a, int j, int nvars);

// Subspace of V spanned by sigma^{a-e} Zhat_e (L (x) 1) over e < a
// componentwise, e != a, at one energy and finite weight. Membership is
// exact (Gaussian elimination over the rationals).
class LocalQuotient {
 public:
  LocalQuotient(const WeylModel& model, const IntVec& a, int energy, const IntVec& beta, bool strict = true);
  bool contains(const FockVector& v) const;
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  void insert(FockVector v);
  FockVector reduce(FockVector v) const;
  std::map<FockBasis, FockVector> pivots_;  // leading basis element -> row
};

// The Zhat generator acting on V.
FockVector zhat_apply(const WeylModel& model, const ZhatMonomial& w, const FockVector& v);

// Identities (i) and (ii) of the central rewriting lemma, for r <= r_max and
// all nonzero a >= 0 with |a| <= k_max, checked modulo LocalQuotient.
Report lemma_action_check(const WeylModel& model, int r_max, int k_max);
// zhat_reduce agrees with the Fock action modulo LocalQuotient.
Report zhat_check(const WeylModel& model, int r_max, int k_max);

// --- characters ------------------------------------------------------------

enum class Provenance { Enumerated, ClosedForm, Spanning };
std::string to_string(Provenance p);

struct CharTable {
  series::Series series;
  Provenance provenance = Provenance::Enumerated;
  std::string label;

  // Throws InvalidArgument unless every coefficient is a nonnegative integer.
  void validate() const;
  std::string to_json() const;
  // Rows: exponent vector and weight label, one coefficient per line.
  std::string to_csv() const;
};

// ch L(Lambda_0) to q1-order emax, enumerated from C[Q_fin] (x) S(a_-^0).
// Weight labels are fundamental coordinates of the finite weight.
CharTable l_zero_char(const FockSpace& space, int emax);
// sum_beta e^beta q1^{(beta,beta)/2} prod (1-q1^k)^{-l}, with the lattice sum
// taken over an explicit box.
CharTable l_zero_closed_form(const FockSpace& space, int emax);
// ch L(Lambda_0) times the Hilbert series of the Zhat algebra, in q1..qn, with
// q2..qn in [0, deg]. The Zhat part is enumerated monomial by monomial.
CharTable spanning_character(const FockSpace& space, int emax, int deg);
// e^{Lambda_0} prod (1-q1^k)^{-l} prod_{m>0, i>=2} (1-q1^m q_i)^{-1}. With
// theta = true the factor is multiplied by the lattice theta series, which
// gives the full character; without it the result is the weight-zero part.
CharTable closed_form(const FockSpace& space, int emax, int deg, bool theta);
// Graded dimensions of the local module at abar = 0 computed in V: for each
// torus degree a, dim span(e <= a) - dim span(e < a) from LocalQuotient.
CharTable local_fock_character(const WeylModel& model, int emax, int deg);
// The Fock character (graded_character) and the predicted u-slice
// ch L(Lambda_0) prod (1-q^k)^{-(n-1)} over the same window.
CharTable fock_character(const FockSpace& space, int emax, const std::vector<std::pair<int, int>>& mwindow);
CharTable fock_slice_closed_form(const FockSpace& space, int emax);

// Equality on the common window; reports the first differing coefficient.
// Throws WindowMismatch if variables or weight ranks differ.
CheckResult character_compare(const CharTable& a, const CharTable& b, const std::string& name);

// (a)-(c) of the character chain: L0 vs theta closed form, each u-slice of the
// Fock character, spanning vs closed form (weight-zero and full), and the
// local Fock character vs the spanning series.
Report character_check(const WeylModel& model, int order, int deg);

// --- suite dispatch ----------------------------------------------------------

struct SuiteOptions {
  SliceConfig slice;
  int rmax = -1;  // -1: 3 for garland, 6 for lemma-action
  int kmax = 3;
  int order = 6;
  int window = 2;
};

// brackets | automorphism | presentation | highest-weight | lemma-action |
// garland | characters | symfun | all. Throws InvalidArgument for other names.
Report run_suite(const WeylModel& model, const std::string& suite, const SuiteOptions& opt = {});
const std::vector<std::string>& suite_names();

}  // namespace toroidal::weylmod
