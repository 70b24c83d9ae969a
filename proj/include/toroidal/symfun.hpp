#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/rational.hpp"
#include "toroidal/series.hpp"

namespace toroidal::symfun {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::map<int, int> multiplicities() const;
  Partition conjugate() const;
  Integer z() const;
  int epsilon() const { return (size() - length()) % 2 == 0 ? 1 : -1; }

  auto operator<=>(const Partition&) const = default;
};

// Partitions of n with at most max_parts parts (all if max_parts < 0), in
// reverse lexicographic order.
std::vector<Partition> partitions(int n, int max_parts = -1);

// Exact polynomial in N variables keyed by full exponent vectors.
using Polynomial = std::map<std::vector<int>, Rational>;

Polynomial poly_add(const Polynomial& a, const Polynomial& b, const Rational& scale_b = Rational(1));
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
// Swaps variables i and i+1.
Polynomial poly_transpose(const Polynomial& p, int i);

// Symmetric polynomial in N variables. It is stored by its coefficients on
// the monomial symmetric functions m_lambda, i.e. the coefficient of the
// dominant monomial x^lambda; expand() gives the full polynomial.
class SymFunction {
 public:
  SymFunction() = default;
  explicit SymFunction(int nvars, std::string basis = "") : n_(nvars), basis_(std::move(basis)) {}

  static SymFunction constant(int nvars, const Rational& c);
  static SymFunction monomial(const Partition& lambda, int nvars);

  int nvars() const { return n_; }
  const std::string& basis() const { return basis_; }
  const std::map<std::vector<int>, Rational>& coefficients() const { return coeffs_; }
  Rational coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;

  SymFunction operator+(const SymFunction& o) const;
  SymFunction operator-(const SymFunction& o) const;
  SymFunction operator*(const SymFunction& o) const;
  SymFunction scaled(const Rational& c) const;
  bool operator==(const SymFunction& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

  Polynomial expand() const;
  std::string to_string() const;

  void add(const std::vector<int>& parts, const Rational& c);

 private:
  int n_ = 1;
  std::string basis_;
  std::map<std::vector<int>, Rational> coeffs_;
};

SymFunction elementary(int r, int nvars);
SymFunction complete(int r, int nvars);
SymFunction power_sum(int r, int nvars);
SymFunction power_sum_product(const Partition& lambda, int nvars);

bool is_symmetric(const Polynomial& p, int nvars);

// n e_n = sum_{r=1}^n (-1)^{r-1} p_r e_{n-r}
bool newton_e_check(int n, int nvars);
// n h_n = sum_{r=1}^n p_r h_{n-r}
bool newton_h_check(int n, int nvars);
// sum_{r=0}^n (-1)^r e_r h_{n-r} = 0 for n >= 1
bool eh_check(int n, int nvars);

// Coefficients of E(-t) for degrees 0..order, each computed from the
// partition sum  sum_{|lambda|=n} (-1)^{2|lambda|-l(lambda)} p_lambda / z_lambda.
std::vector<SymFunction> expand_E_minus(int order, int nvars);
// Coefficients of H(t) from sum_{|lambda|=n} p_lambda / z_lambda.
std::vector<SymFunction> expand_H(int order, int nvars);

// The generating function sum_n c_n t^n, written out in t, x1..xN.
series::Series to_series(const std::vector<SymFunction>& coeffs, int order);

// Number of r-element multisets of monomials in `vars` with a given exponent
// sum. Polynomial case: factors have exponents in [0, max_deg] and sums are
// reported in the box [0, max_deg]^k. Laurent case: factors have exponents in
// `factor_window` and sums lie in r times that window.
series::Series sym_power_hilbert(int r, const std::vector<std::string>& vars, int max_deg, bool laurent,
                                 std::optional<std::pair<int, int>> factor_window = std::nullopt);
// Totals of a single-weight series by total degree 0..max_total.
std::vector<Rational> by_total_degree(const series::Series& s, int max_total);

// Polynomial ring on tensor slots: block i (0..l) has r_i slots, each carrying
// a copy of the loop variables t2..tn.
class BlockLayout {
 public:
  BlockLayout(std::vector<int> mults, int loop_vars);
  int blocks() const { return static_cast<int>(mults_.size()); }
  int slots(int block) const { return mults_.at(block); }
  int loop_vars() const { return k_; }
  int nvars() const { return total_ * k_; }
  int index(int block, int slot, int var) const;
  bool operator==(const BlockLayout&) const = default;

 private:
  std::vector<int> mults_;
  std::vector<int> offset_;
  int k_;
  int total_ = 0;
};

class BlockPoly {
 public:
  explicit BlockPoly(BlockLayout layout) : layout_(std::move(layout)) {}
  static BlockPoly constant(const BlockLayout& layout, const Rational& c);

  const BlockLayout& layout() const { return layout_; }
  const Polynomial& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BlockPoly operator+(const BlockPoly& o) const;
  BlockPoly operator-(const BlockPoly& o) const;
  BlockPoly operator*(const BlockPoly& o) const;
  BlockPoly scaled(const Rational& c) const;
  bool operator==(const BlockPoly& o) const { return layout_ == o.layout_ && terms_ == o.terms_; }

  void add(const std::vector<int>& exp, const Rational& c);

 private:
  BlockLayout layout_;
  Polynomial terms_;
};

// Image of a_i^vee (x) a: the sum over the r_i slots of block i of the monomial a.
BlockPoly phi_generator_image(int block, const std::vector<int>& a, const BlockLayout& layout);
// d_1 and t^m K_j have zero image.
BlockPoly phi_derivation_image(const BlockLayout& layout);
BlockPoly phi_central_image(const BlockLayout& layout);
// Elementary symmetric polynomial of degree s in the block-i slot values of a.
BlockPoly block_elementary(int block, int s, const std::vector<int>& a, const BlockLayout& layout);

}  // namespace toroidal::symfun
