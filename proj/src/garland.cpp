#include "toroidal/garland.hpp"

#include <algorithm>
#include <sstream>

#include "toroidal/errors.hpp"

namespace toroidal::garland {

namespace {

int key_grade(const GarlandPoly::Key& k) {
  int g = 0;
  for (std::size_t j = 0; j < k.size(); ++j) g += static_cast<int>(j + 1) * k[j];
  return g;
}

}  // namespace

GarlandPoly GarlandPoly::constant(const Rational& c) {
  GarlandPoly p;
  p.add({}, c);
  return p;
}

GarlandPoly GarlandPoly::symbol(int j) {
  if (j < 1) throw InvalidArgument("current symbol index must be positive");
  Key k(j, 0);
  k[j - 1] = 1;
  GarlandPoly p;
  p.add(k, Rational(1));
  return p;
}

void GarlandPoly::add(Key k, const Rational& c) {
  while (!k.empty() && k.back() == 0) k.pop_back();
  if (c == 0) return;
  Rational& slot = terms_[k];
  slot += c;
  if (slot == 0) terms_.erase(k);
}

Rational GarlandPoly::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool GarlandPoly::is_homogeneous() const {
  int g = -1;
  for (const auto& [k, c] : terms_) {
    int kg = key_grade(k);
    if (g >= 0 && kg != g) return false;
    g = kg;
  }
  return true;
}

int GarlandPoly::grade() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw InvalidArgument("grade of an inhomogeneous current polynomial");
  return key_grade(terms_.begin()->first);
}

GarlandPoly GarlandPoly::operator+(const GarlandPoly& o) const {
  GarlandPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

GarlandPoly GarlandPoly::operator-(const GarlandPoly& o) const { return *this + o.scaled(Rational(-1)); }

GarlandPoly GarlandPoly::scaled(const Rational& c) const {
  GarlandPoly out;
  for (const auto& [k, v] : terms_) out.add(k, v * c);
  return out;
}

GarlandPoly GarlandPoly::operator*(const GarlandPoly& o) const {
  GarlandPoly out;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      Key k(std::max(ka.size(), kb.size()), 0);
      for (std::size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
      for (std::size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
      out.add(k, ca * cb);
    }
  }
  return out;
}

std::string GarlandPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << toroidal::to_string(c);
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      os << "*h[" << j + 1 << "]";
      if (k[j] > 1) os << "^" << k[j];
    }
  }
  return os.str();
}

namespace {

std::vector<GarlandPoly> exp_coeffs(int s_max, int sign) {
  std::vector<GarlandPoly> p;
  p.push_back(GarlandPoly::constant(Rational(1)));
  for (int s = 1; s <= s_max; ++s) {
    GarlandPoly acc;
    for (int j = 1; j <= s; ++j) acc = acc + GarlandPoly::symbol(j) * p[s - j];
    p.push_back(acc.scaled(Rational(sign, s)));
  }
  return p;
}

}  // namespace

std::vector<GarlandPoly> garland_coeffs(int s_max) { return exp_coeffs(s_max, -1); }

std::vector<GarlandPoly> inverse_coeffs(int s_max) { return exp_coeffs(s_max, 1); }

symfun::SymFunction garland_to_symfun(const GarlandPoly& p, int nvars, int sign, bool* faithful) {
  if (faithful) {
    int top = 0;
    for (const auto& [k, c] : p.terms()) top = std::max(top, key_grade(k));
    *faithful = top <= nvars;
  }
  std::function<symfun::SymFunction(int)> img = [&](int j) {
    return symfun::power_sum(j, nvars).scaled(Rational(sign));
  };
  return p.substitute(img, symfun::SymFunction::constant(nvars, Rational(1)));
}

symfun::BlockPoly phi_garland_image(const GarlandPoly& p, int block, const std::vector<int>& a,
                                    const symfun::BlockLayout& layout) {
  std::function<symfun::BlockPoly(int)> img = [&](int j) {
    std::vector<int> aj(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) aj[i] = a[i] * j;
    return symfun::phi_generator_image(block, aj, layout);
  };
  return p.substitute(img, symfun::BlockPoly::constant(layout, Rational(1)));
}

}  // namespace toroidal::garland
