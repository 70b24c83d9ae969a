#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "toroidal/rational.hpp"
#include "toroidal/symfun.hpp"

namespace toroidal::garland {

// Polynomial in commuting current symbols h[1], h[2], ...; a key lists the
// exponents of h[1], h[2], ... with trailing zeros removed.
class GarlandPoly {
 public:
  using Key = std::vector<int>;

  static GarlandPoly constant(const Rational& c);
  static GarlandPoly symbol(int j);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Key& k) const;
  // Weighted degree sum_j j * deg_{h[j]}; -1 for zero, throws if inhomogeneous.
  int grade() const;
  bool is_homogeneous() const;

  GarlandPoly operator+(const GarlandPoly& o) const;
  GarlandPoly operator-(const GarlandPoly& o) const;
  GarlandPoly operator*(const GarlandPoly& o) const;
  GarlandPoly scaled(const Rational& c) const;
  bool operator==(const GarlandPoly& o) const { return terms_ == o.terms_; }

  void add(Key k, const Rational& c);
  std::string to_string() const;

  // Ring homomorphism h[j] -> image(j) into any commutative ring T with
  // T(Rational) and +, * available.
  template <class T>
  T substitute(const std::function<T(int)>& image, const T& one) const;

 private:
  std::map<Key, Rational> terms_;
};

// p^(0..s_max) from s p^(s) = -sum_{j=1}^s h[j] p^(s-j).
std::vector<GarlandPoly> garland_coeffs(int s_max);
// Coefficients of exp(+sum_j h[j] u^j / j) up to order s_max.
std::vector<GarlandPoly> inverse_coeffs(int s_max);

// h[j] -> sign * p_j in N variables. When N is below the grade the image
// loses information; `faithful` (if given) reports whether N suffices.
symfun::SymFunction garland_to_symfun(const GarlandPoly& p, int nvars, int sign = 1, bool* faithful = nullptr);

// h[j] -> image of a_i^vee (x) a^j under the block map.
symfun::BlockPoly phi_garland_image(const GarlandPoly& p, int block, const std::vector<int>& a,
                                    const symfun::BlockLayout& layout);

template <class T>
T GarlandPoly::substitute(const std::function<T(int)>& image, const T& one) const {
  std::map<int, T> cache;
  auto img = [&](int j) -> const T& {
    auto it = cache.find(j);
    if (it == cache.end()) it = cache.emplace(j, image(j)).first;
    return it->second;
  };
  T out = one.scaled(Rational(0));
  for (const auto& [k, c] : terms_) {
    T term = one.scaled(c);
    for (std::size_t j = 0; j < k.size(); ++j) {
      for (int e = 0; e < k[j]; ++e) term = term * img(static_cast<int>(j) + 1);
    }
    out = out + term;
  }
  return out;
}

}  // namespace toroidal::garland
