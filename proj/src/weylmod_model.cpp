#include <json.hpp>

#include "toroidal/errors.hpp"
#include "toroidal/weylmod.hpp"

namespace toroidal {

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string Report::to_jsonl() const {
  std::string out;
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["suite"] = c.suite;
    j["check"] = c.name;
    j["pass"] = c.pass;
    j["checked"] = c.checked;
    j["detail"] = c.detail;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace toroidal

namespace toroidal::weylmod {

OpExpr OpExpr::identity() {
  OpExpr o;
  o.words_.push_back(Word{Rational(1), {}});
  return o;
}

OpExpr OpExpr::single(const ToroidalElement& x) {
  OpExpr o;
  o.words_.push_back(Word{Rational(1), {x}});
  return o;
}

bool OpExpr::uses_derivations() const {
  for (const auto& w : words_) {
    for (const auto& x : w.letters) {
      for (const auto& [t, c] : x.terms()) {
        if (t.kind == Kind::Deriv) return true;
      }
    }
  }
  return false;
}

OpExpr OpExpr::operator+(const OpExpr& o) const {
  OpExpr out = *this;
  out.words_.insert(out.words_.end(), o.words_.begin(), o.words_.end());
  return out;
}

OpExpr OpExpr::operator-(const OpExpr& o) const { return *this + o.scaled(Rational(-1)); }

OpExpr OpExpr::operator*(const OpExpr& o) const {
  OpExpr out;
  for (const auto& a : words_) {
    for (const auto& b : o.words_) {
      Word w{a.coeff * b.coeff, a.letters};
      w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
      if (w.coeff != 0) out.words_.push_back(std::move(w));
    }
  }
  return out;
}

OpExpr OpExpr::scaled(const Rational& c) const {
  OpExpr out;
  if (c == 0) return out;
  for (const auto& w : words_) out.words_.push_back(Word{w.coeff * c, w.letters});
  return out;
}

OpExpr commutator(const OpExpr& a, const OpExpr& b) { return a * b - b * a; }

OpExpr ad_power(const OpExpr& x, int k, const OpExpr& y) {
  OpExpr out;
  std::vector<OpExpr> pw{OpExpr::identity()};
  for (int p = 1; p <= k; ++p) pw.push_back(pw.back() * x);
  long long binom = 1;
  for (int p = 0; p <= k; ++p) {
    Rational c(p % 2 == 0 ? binom : -binom);
    out = out + (pw[k - p] * y * pw[p]).scaled(c);
    binom = binom * (k - p) / (p + 1);
  }
  return out;
}

OpExpr divided_power(const OpExpr& x, int k) {
  OpExpr out = OpExpr::identity();
  long long fact = 1;
  for (int p = 1; p <= k; ++p) {
    out = out * x;
    fact *= p;
  }
  return out.scaled(Rational(1, fact));
}

FockVector apply(const OpExpr& x, const FockVector& v, fock::ActionCache& cache) {
  FockVector out;
  for (const auto& w : x.words()) {
    FockVector cur = v;
    for (auto it = w.letters.rbegin(); it != w.letters.rend() && !cur.empty(); ++it) cur = cache.apply(*it, cur);
    fock::fv_axpy(out, cur, w.coeff);
  }
  return out;
}

WeylModel::WeylModel(const FockSpace& space)
    : space_(space), a_(fock::affine_swap_matrix(space.nvars())), theta_(space.lattice().root_system().theta) {
  const int l = rank();
  std::vector<IntVec> parts;
  IntVec minus_theta = theta_;
  for (int& x : minus_theta) x = -x;
  parts.push_back(minus_theta);
  for (int i = 0; i < l; ++i) {
    IntVec ai(l, 0);
    ai[i] = 1;
    parts.push_back(ai);
  }
  cartan_.assign(l + 1, IntVec(l + 1, 0));
  for (int i = 0; i <= l; ++i) {
    for (int j = 0; j <= l; ++j) cartan_[i][j] = space.lattice().fin(parts[i], parts[j]);
  }
}

IntVec WeylModel::kvec(int first, const IntVec& k) const {
  if (static_cast<int>(k.size()) != nvars() - 1) throw InvalidArgument("torus degree must have n-1 entries");
  IntVec m(nvars(), 0);
  m[0] = first;
  for (int i = 1; i < nvars(); ++i) m[i] = k[i - 1];
  return m;
}

ToroidalElement WeylModel::root(const IntVec& alpha, const IntVec& m) const {
  ToroidalElement x(nvars());
  x.add_raw(TorBasis{Kind::Root, alpha, m}, Rational(1));
  return x;
}

ToroidalElement WeylModel::cartan_elem(const IntVec& coeffs, const IntVec& m) const {
  ToroidalElement x(nvars());
  for (int i = 0; i < rank(); ++i) {
    if (coeffs.at(i) != 0) x.add_raw(TorBasis{Kind::Cartan, {i}, m}, Rational(coeffs[i]));
  }
  return x;
}

ToroidalElement WeylModel::central(int i, const IntVec& m) const {
  ToroidalElement x(nvars());
  x.add_raw(TorBasis{Kind::Central, {i}, m}, Rational(1));
  return x;
}

ToroidalElement WeylModel::e(int i, const IntVec& k) const {
  if (i == 0) {
    IntVec mt = theta_;
    for (int& x : mt) x = -x;
    return root(mt, kvec(1, k));
  }
  IntVec a(rank(), 0);
  a.at(i - 1) = 1;
  return root(a, kvec(0, k));
}

ToroidalElement WeylModel::f(int i, const IntVec& k) const {
  if (i == 0) return root(theta_, kvec(-1, k));
  IntVec a(rank(), 0);
  a.at(i - 1) = -1;
  return root(a, kvec(0, k));
}

ToroidalElement WeylModel::h(int i, const IntVec& k) const {
  if (i == 0) {
    IntVec mt = theta_;
    for (int& x : mt) x = -x;
    return cartan_elem(mt, kvec(0, k)) + central(0, kvec(0, k));
  }
  IntVec c(rank(), 0);
  c.at(i - 1) = 1;
  return cartan_elem(c, kvec(0, k));
}

ToroidalElement WeylModel::delta(const IntVec& r, const IntVec& s) const {
  ToroidalElement x(nvars());
  IntVec m = kvec(0, s);
  for (int i = 1; i < nvars(); ++i) {
    if (r.at(i - 1) != 0) x.add_raw(TorBasis{Kind::Central, {i}, m}, Rational(r[i - 1]));
  }
  return x;
}

ToroidalElement WeylModel::d(int j) const {
  if (j < 0 || j >= nvars()) throw InvalidArgument("derivation index out of range");
  ToroidalElement x(nvars());
  x.add_raw(TorBasis{Kind::Deriv, {j}, {}}, Rational(1));
  return x;
}

ToroidalElement WeylModel::image(const ToroidalElement& x) const { return fock::gl_automorphism_apply(a_, x, false); }

FockVector WeylModel::act(const ToroidalElement& x, const FockVector& v) const {
  return space_.toroidal_apply(image(x), v);
}

IntVec WeylModel::mbar_of(const IntVec& kbar) const {
  IntVec m = kvec(0, kbar);
  IntVec out(nvars() - 1, 0);
  for (int j = 0; j < nvars() - 1; ++j) {
    for (int k = 0; k < nvars(); ++k) out[j] += a_[j][k] * m[k];
  }
  return out;
}

}  // namespace toroidal::weylmod
