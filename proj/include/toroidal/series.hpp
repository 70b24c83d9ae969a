#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/rational.hpp"

namespace toroidal::series {

// A named-variable monomial, optionally labelled by a finite weight in
// fundamental-weight coordinates.
struct Monomial {
  std::map<std::string, int> exponents;
  std::optional<std::vector<int>> weight;

  Monomial() = default;
  Monomial(std::initializer_list<std::pair<const std::string, int>> e) : exponents(e) { prune(); }
  explicit Monomial(std::map<std::string, int> e, std::optional<std::vector<int>> w = std::nullopt)
      : exponents(std::move(e)), weight(std::move(w)) {
    prune();
  }

  void prune();
};

// Per-variable inclusive exponent bounds; the variable order fixes the
// exponent-vector layout of every series over this window.
class Window {
 public:
  Window() = default;
  Window(std::vector<std::string> vars, std::vector<std::pair<int, int>> bounds);
  static Window box(const std::vector<std::string>& vars, int lo, int hi);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::pair<int, int>>& bounds() const { return bounds_; }
  std::size_t size() const { return vars_.size(); }
  int index_of(const std::string& var) const;
  bool contains(const std::vector<int>& exp) const;
  Window intersect(const Window& other) const;
  std::vector<int> to_exponents(const Monomial& m) const;

  bool operator==(const Window&) const = default;

 private:
  std::vector<std::string> vars_;
  std::vector<std::pair<int, int>> bounds_;
};

struct TermKey {
  std::vector<int> exp;
  std::vector<int> weight;
  auto operator<=>(const TermKey&) const = default;
};

// Sparse truncated Laurent series with exact coefficients. A character
// series carries a weight label of fixed length on every term.
class Series {
 public:
  Series() = default;
  explicit Series(Window window, int weight_rank = -1) : window_(std::move(window)), weight_rank_(weight_rank) {}

  static Series one(Window window, int weight_rank = -1);

  const Window& window() const { return window_; }
  bool is_character() const { return weight_rank_ >= 0; }
  int weight_rank() const { return weight_rank_; }
  const std::map<TermKey, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c·x^exp·e^weight; throws OutOfWindow when exp lies outside the window.
  void add_term(const std::vector<int>& exp, const std::vector<int>& weight, const Rational& c);
  void add_term(const Monomial& m, const Rational& c);
  // Same, but silently drops terms outside the window (explicit truncation).
  void accumulate(const std::vector<int>& exp, const std::vector<int>& weight, const Rational& c);

  Rational coeff(const Monomial& m) const;
  Rational coeff(const std::vector<int>& exp, const std::vector<int>& weight = {}) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series scaled(const Rational& c) const;
  bool operator==(const Series& o) const;

  // Sums over weight labels.
  Series forget_weights() const;
  // Plain series of the terms carrying exactly this weight label.
  Series weight_slice(const std::vector<int>& weight) const;
  // Terms whose exponent in `var` equals `value`, as a series over the
  // remaining variables.
  Series slice(const std::string& var, int value) const;
  // Re-expresses the series over a larger window; `rename` maps old variable
  // names to new ones. Terms falling outside the new window are dropped.
  Series embedded(const Window& target, const std::map<std::string, std::string>& rename = {}) const;

  std::string to_json() const;

 private:
  void check_compatible(const Series& o, const char* op) const;
  Series realigned(const Window& target) const;

  Window window_;
  int weight_rank_ = -1;
  std::map<TermKey, Rational> terms_;
};

Series series_mul(const Series& a, const Series& b);
Series geom_inverse(const Monomial& g, const Window& window, int weight_rank = -1);
Series product_formula(const std::vector<std::pair<Monomial, int>>& generators, const Window& window,
                       int weight_rank = -1);
Rational coeff(const Series& s, const Monomial& m);

}  // namespace toroidal::series
