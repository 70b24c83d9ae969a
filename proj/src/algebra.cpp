#include "toroidal/algebra.hpp"

#include <sstream>

#include "toroidal/errors.hpp"

namespace toroidal::fock {

namespace {

bool all_zero(const IntVec& v) {
  for (int x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntVec add_vec(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec neg_vec(const IntVec& a) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

ToroidalElement ToroidalElement::basis(int n, const TorBasis& b, const Rational& c) {
  ToroidalElement x(n);
  x.add(b, c);
  return x;
}

ToroidalElement ToroidalElement::root_vector(const IntVec& alpha, const IntVec& m) {
  return basis(static_cast<int>(m.size()), TorBasis{Kind::Root, alpha, m});
}

ToroidalElement ToroidalElement::cartan(int i, const IntVec& m) {
  return basis(static_cast<int>(m.size()), TorBasis{Kind::Cartan, {i}, m});
}

ToroidalElement ToroidalElement::cartan_combination(const IntVec& coeffs, const IntVec& m) {
  ToroidalElement x(static_cast<int>(m.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) x.add(TorBasis{Kind::Cartan, {static_cast<int>(i)}, m}, Rational(coeffs[i]));
  }
  return x;
}

ToroidalElement ToroidalElement::central(int i, const IntVec& m) {
  return basis(static_cast<int>(m.size()), TorBasis{Kind::Central, {i}, m});
}

ToroidalElement ToroidalElement::derivation(int n, int i) { return basis(n, TorBasis{Kind::Deriv, {i}, {}}); }

void ToroidalElement::add_raw(const TorBasis& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ToroidalElement::add(const TorBasis& b, const Rational& c) {
  if (b.kind != Kind::Deriv && static_cast<int>(b.m.size()) != n_) {
    throw InvalidArgument("toroidal element: exponent vector has length " + std::to_string(b.m.size()) +
                          ", expected " + std::to_string(n_));
  }
  if (b.kind == Kind::Central && !all_zero(b.m)) {
    int p = 0;
    while (b.m[p] == 0) ++p;
    if (b.label[0] == p) {
      // t^m K_p = -(1/m_p) sum_{i != p} m_i t^m K_i
      for (int i = 0; i < n_; ++i) {
        if (i == p || b.m[i] == 0) continue;
        add_raw(TorBasis{Kind::Central, {i}, b.m}, -c * Rational(b.m[i], b.m[p]));
      }
      return;
    }
  }
  add_raw(b, c);
}

ToroidalElement ToroidalElement::operator+(const ToroidalElement& o) const {
  ToroidalElement out = *this;
  if (out.n_ == 0) out.n_ = o.n_;
  for (const auto& [b, c] : o.terms_) out.add_raw(b, c);
  return out;
}

ToroidalElement ToroidalElement::operator-(const ToroidalElement& o) const { return *this + o.scaled(Rational(-1)); }

ToroidalElement ToroidalElement::scaled(const Rational& c) const {
  ToroidalElement out(n_);
  if (c == 0) return out;
  for (const auto& [b, v] : terms_) out.terms_.emplace(b, v * c);
  return out;
}

std::string ToroidalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << toroidal::to_string(c) << "*";
    switch (b.kind) {
      case Kind::Root:
        os << "x" << vec_str(b.label) << "t^" << vec_str(b.m);
        break;
      case Kind::Cartan:
        os << "h" << b.label[0] + 1 << "t^" << vec_str(b.m);
        break;
      case Kind::Central:
        os << "t^" << vec_str(b.m) << "K" << b.label[0] + 1;
        break;
      case Kind::Deriv:
        os << "d" << b.label[0] + 1;
        break;
    }
  }
  return os.str();
}

ToroidalAlgebra::ToroidalAlgebra(Lattice lat) : lat_(std::move(lat)), eps_(lat_) {}

int ToroidalAlgebra::root_sign(const IntVec& alpha) const {
  bool positive = false;
  for (int x : alpha) {
    if (x != 0) {
      positive = x > 0;
      break;
    }
  }
  if (positive) return 1;
  IntVec beta = neg_vec(alpha);
  return eps_.eval(beta, alpha);
}

int ToroidalAlgebra::structure_constant(const IntVec& alpha, const IntVec& beta) const {
  IntVec s = add_vec(alpha, beta);
  if (!lat_.root_system().is_root(s)) return 0;
  return root_sign(alpha) * root_sign(beta) * eps_.eval(alpha, beta) * root_sign(s);
}

void ToroidalAlgebra::loop_bracket(const TorBasis& a, const TorBasis& b, const Rational& c,
                                   ToroidalElement& out) const {
  IntVec m = add_vec(a.m, b.m);
  const int l = lat_.rank();
  Rational form(0);
  if (a.kind == Kind::Cartan && b.kind == Kind::Cartan) {
    IntVec ei(l, 0), ej(l, 0);
    ei[a.label[0]] = 1;
    ej[b.label[0]] = 1;
    form = lat_.fin(ei, ej);
  } else if (a.kind == Kind::Cartan && b.kind == Kind::Root) {
    IntVec ei(l, 0);
    ei[a.label[0]] = 1;
    out.add(TorBasis{Kind::Root, b.label, m}, c * lat_.fin(ei, b.label));
  } else if (a.kind == Kind::Root && b.kind == Kind::Cartan) {
    IntVec ej(l, 0);
    ej[b.label[0]] = 1;
    out.add(TorBasis{Kind::Root, a.label, m}, -c * lat_.fin(ej, a.label));
  } else {
    IntVec s = add_vec(a.label, b.label);
    if (all_zero(s)) {
      for (int i = 0; i < l; ++i) {
        if (a.label[i] != 0) out.add(TorBasis{Kind::Cartan, {i}, m}, c * a.label[i]);
      }
      form = 1;
    } else if (int nab = structure_constant(a.label, b.label); nab != 0) {
      out.add(TorBasis{Kind::Root, s, m}, c * nab);
    }
  }
  if (form != 0) {
    for (int i = 0; i < lat_.nvars(); ++i) {
      if (a.m[i] != 0) out.add(TorBasis{Kind::Central, {i}, m}, c * form * a.m[i]);
    }
  }
}

ToroidalElement ToroidalAlgebra::bracket(const TorBasis& a, const TorBasis& b) const {
  ToroidalElement out(lat_.nvars());
  if (a.kind == Kind::Deriv) {
    if (b.kind != Kind::Deriv) out.add(b, Rational(b.m[a.label[0]]));
    return out;
  }
  if (b.kind == Kind::Deriv) return bracket(b, a).scaled(Rational(-1));
  if (a.kind == Kind::Central || b.kind == Kind::Central) return out;
  loop_bracket(a, b, Rational(1), out);
  return out;
}

ToroidalElement ToroidalAlgebra::bracket(const ToroidalElement& x, const ToroidalElement& y) const {
  ToroidalElement out(lat_.nvars());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      ToroidalElement t = bracket(a, b);
      for (const auto& [k, v] : t.terms()) out.add(k, v * ca * cb);
    }
  }
  return out;
}

int determinant(const IntMatrix& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw InvalidArgument("determinant: matrix is not square");
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return static_cast<int>(numerator64(det));
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  int det = determinant(a);
  if (det != 1 && det != -1) {
    throw InvalidArgument("matrix is not unimodular (det = " + std::to_string(det) + ")");
  }
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (int k = 0; k < 2 * n; ++k) m[col][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  IntMatrix b(n, IntVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b[i][j] = static_cast<int>(numerator64(m[i][n + j]));
  }
  return b;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  int n = static_cast<int>(a.size()), k = static_cast<int>(b.size()), p = static_cast<int>(b[0].size());
  IntMatrix c(n, IntVec(p, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) {
      for (int t = 0; t < k; ++t) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

IntMatrix identity_matrix(int n) {
  IntMatrix id(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix affine_swap_matrix(int n) {
  if (n < 2) throw InvalidArgument("affine_swap_matrix needs n >= 2");
  IntMatrix a(n, IntVec(n, 0));
  a[0][n - 1] = -1;
  for (int i = 1; i + 1 < n; ++i) a[i][i] = 1;
  a[n - 1][0] = 1;
  return a;
}

ToroidalElement gl_automorphism_apply(const IntMatrix& a, const ToroidalElement& x, bool canonical) {
  int n = static_cast<int>(a.size());
  if (x.nvars() != n) throw InvalidArgument("automorphism: matrix size does not match the element");
  IntMatrix b = inverse_unimodular(a);
  auto image = [&](const IntVec& m) {
    IntVec out(n, 0);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) out[j] += a[j][k] * m[k];
    }
    return out;
  };
  ToroidalElement out(n);
  auto put = [&](const TorBasis& t, const Rational& c) {
    if (canonical) {
      out.add(t, c);
    } else {
      out.add_raw(t, c);
    }
  };
  for (const auto& [t, c] : x.terms()) {
    switch (t.kind) {
      case Kind::Root:
      case Kind::Cartan:
        put(TorBasis{t.kind, t.label, image(t.m)}, c);
        break;
      case Kind::Central: {
        IntVec m = image(t.m);
        for (int r = 0; r < n; ++r) {
          if (a[r][t.label[0]] != 0) put(TorBasis{Kind::Central, {r}, m}, c * a[r][t.label[0]]);
        }
        break;
      }
      case Kind::Deriv:
        for (int r = 0; r < n; ++r) {
          if (b[t.label[0]][r] != 0) put(TorBasis{Kind::Deriv, {r}, {}}, c * b[t.label[0]][r]);
        }
        break;
    }
  }
  return out;
}

}  // namespace toroidal::fock
