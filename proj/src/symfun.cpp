#include "toroidal/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "toroidal/errors.hpp"

namespace toroidal::symfun {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int x : parts) {
    if (x < 0) throw InvalidArgument("partition with negative part");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int x : parts) ++m[x];
  return m;
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  for (int j = 1; j <= parts.front(); ++j) {
    int count = 0;
    for (int x : parts) count += x >= j;
    c.parts.push_back(count);
  }
  return c;
}

Integer Partition::z() const {
  Integer z = 1;
  for (auto [i, m] : multiplicities()) {
    for (int k = 0; k < m; ++k) z *= i;
    z *= factorial(m);
  }
  return z;
}

std::vector<Partition> partitions(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b, const Rational& scale_b) {
  Polynomial out = a;
  for (const auto& [e, c] : b) {
    Rational& slot = out[e];
    slot += c * scale_b;
    if (slot == 0) out.erase(e);
  }
  return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

Polynomial poly_transpose(const Polynomial& p, int i) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    std::vector<int> f = e;
    std::swap(f[i], f[i + 1]);
    out[f] = c;
  }
  return out;
}

SymFunction SymFunction::constant(int nvars, const Rational& c) {
  SymFunction f(nvars);
  f.add({}, c);
  return f;
}

SymFunction SymFunction::monomial(const Partition& lambda, int nvars) {
  SymFunction f(nvars, "m");
  if (lambda.length() <= nvars) f.add(lambda.parts, Rational(1));
  return f;
}

void SymFunction::add(const std::vector<int>& parts, const Rational& c) {
  if (c == 0) return;
  Rational& slot = coeffs_[parts];
  slot += c;
  if (slot == 0) coeffs_.erase(parts);
}

Rational SymFunction::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda.parts);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int SymFunction::degree() const {
  int d = -1;
  for (const auto& [p, c] : coeffs_) d = std::max(d, std::accumulate(p.begin(), p.end(), 0));
  return d;
}

SymFunction SymFunction::operator+(const SymFunction& o) const {
  if (n_ != o.n_) throw InvalidArgument("symmetric functions in different numbers of variables");
  SymFunction out = *this;
  out.basis_.clear();
  for (const auto& [p, c] : o.coeffs_) out.add(p, c);
  return out;
}

SymFunction SymFunction::operator-(const SymFunction& o) const { return *this + o.scaled(Rational(-1)); }

SymFunction SymFunction::scaled(const Rational& c) const {
  SymFunction out(n_);
  if (c == 0) return out;
  for (const auto& [p, v] : coeffs_) out.coeffs_.emplace(p, v * c);
  return out;
}

SymFunction SymFunction::operator*(const SymFunction& o) const {
  if (n_ != o.n_) throw InvalidArgument("symmetric functions in different numbers of variables");
  SymFunction out(n_);
  if (is_zero() || o.is_zero()) return out;
  std::vector<int> degs_a, degs_b;
  for (const auto& [p, c] : coeffs_) degs_a.push_back(std::accumulate(p.begin(), p.end(), 0));
  for (const auto& [p, c] : o.coeffs_) degs_b.push_back(std::accumulate(p.begin(), p.end(), 0));
  std::sort(degs_a.begin(), degs_a.end());
  degs_a.erase(std::unique(degs_a.begin(), degs_a.end()), degs_a.end());
  std::sort(degs_b.begin(), degs_b.end());
  degs_b.erase(std::unique(degs_b.begin(), degs_b.end()), degs_b.end());
  std::vector<int> targets;
  for (int a : degs_a) {
    for (int b : degs_b) targets.push_back(a + b);
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  auto lookup = [](const std::map<std::vector<int>, Rational>& m, std::vector<int> v) -> const Rational* {
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    auto it = m.find(v);
    return it == m.end() ? nullptr : &it->second;
  };

  // Coefficient of x^lambda in the product: sum over all splittings lambda = mu + nu.
  for (int d : targets) {
    for (const Partition& lam : partitions(d, n_)) {
      std::vector<int> full(n_, 0);
      std::copy(lam.parts.begin(), lam.parts.end(), full.begin());
      int len = lam.length();
      std::vector<int> mu(n_, 0), nu(n_, 0);
      Rational total(0);
      std::function<void(int, int)> rec = [&](int i, int deg) {
        if (i == len) {
          if (!std::binary_search(degs_a.begin(), degs_a.end(), deg)) return;
          const Rational* ca = lookup(coeffs_, mu);
          if (!ca) return;
          for (int k = 0; k < len; ++k) nu[k] = full[k] - mu[k];
          const Rational* cb = lookup(o.coeffs_, nu);
          if (cb) total += *ca * *cb;
          return;
        }
        for (int x = 0; x <= full[i]; ++x) {
          mu[i] = x;
          rec(i + 1, deg + x);
        }
        mu[i] = 0;
      };
      rec(0, 0);
      if (total != 0) out.coeffs_[lam.parts] = total;
    }
  }
  return out;
}

Polynomial SymFunction::expand() const {
  Polynomial out;
  for (const auto& [p, c] : coeffs_) {
    std::vector<int> e(n_, 0);
    std::copy(p.begin(), p.end(), e.begin());
    std::sort(e.begin(), e.end());
    do {
      out[e] += c;
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

std::string SymFunction::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << toroidal::to_string(c) << "*m[";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "]";
  }
  return os.str();
}

SymFunction elementary(int r, int nvars) {
  SymFunction f(nvars, "e");
  if (r >= 0 && r <= nvars) f.add(std::vector<int>(r, 1), Rational(1));
  return f;
}

SymFunction complete(int r, int nvars) {
  SymFunction f(nvars, "h");
  for (const Partition& lam : partitions(r, nvars)) f.add(lam.parts, Rational(1));
  return f;
}

SymFunction power_sum(int r, int nvars) {
  SymFunction f(nvars, "p");
  if (r == 0) {
    f.add({}, Rational(nvars));
  } else {
    f.add({r}, Rational(1));
  }
  return f;
}

SymFunction power_sum_product(const Partition& lambda, int nvars) {
  SymFunction f = SymFunction::constant(nvars, Rational(1));
  for (int part : lambda.parts) f = f * power_sum(part, nvars);
  return f;
}

bool is_symmetric(const Polynomial& p, int nvars) {
  for (int i = 0; i + 1 < nvars; ++i) {
    if (poly_transpose(p, i) != p) return false;
  }
  return true;
}

bool newton_e_check(int n, int nvars) {
  SymFunction lhs = elementary(n, nvars).scaled(Rational(n));
  SymFunction rhs(nvars);
  for (int r = 1; r <= n; ++r) {
    SymFunction term = power_sum(r, nvars) * elementary(n - r, nvars);
    rhs = rhs + term.scaled(Rational(r % 2 == 1 ? 1 : -1));
  }
  return lhs == rhs;
}

bool newton_h_check(int n, int nvars) {
  SymFunction lhs = complete(n, nvars).scaled(Rational(n));
  SymFunction rhs(nvars);
  for (int r = 1; r <= n; ++r) rhs = rhs + power_sum(r, nvars) * complete(n - r, nvars);
  return lhs == rhs;
}

bool eh_check(int n, int nvars) {
  SymFunction sum(nvars);
  for (int r = 0; r <= n; ++r) {
    SymFunction term = elementary(r, nvars) * complete(n - r, nvars);
    sum = sum + term.scaled(Rational(r % 2 == 0 ? 1 : -1));
  }
  return sum.is_zero();
}

namespace {

std::vector<SymFunction> partition_sum(int order, int nvars, bool signed_e) {
  std::vector<SymFunction> out;
  for (int n = 0; n <= order; ++n) {
    SymFunction c(nvars);
    for (const Partition& lam : partitions(n)) {
      int sign = 1;
      if (signed_e) sign = (2 * lam.size() - lam.length()) % 2 == 0 ? 1 : -1;
      c = c + power_sum_product(lam, nvars).scaled(Rational(Integer(sign), lam.z()));
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<SymFunction> expand_E_minus(int order, int nvars) {
  if (order > nvars) throw InvalidArgument("expand_E_minus: order exceeds the number of variables");
  return partition_sum(order, nvars, true);
}

std::vector<SymFunction> expand_H(int order, int nvars) { return partition_sum(order, nvars, false); }

series::Series to_series(const std::vector<SymFunction>& coeffs, int order) {
  if (coeffs.empty()) throw InvalidArgument("to_series: no coefficients");
  int nv = coeffs.front().nvars();
  std::vector<std::string> vars{"t"};
  for (int i = 1; i <= nv; ++i) vars.push_back("x" + std::to_string(i));
  series::Series s(series::Window::box(vars, 0, order));
  for (int n = 0; n < static_cast<int>(coeffs.size()) && n <= order; ++n) {
    for (const auto& [e, c] : coeffs[n].expand()) {
      std::vector<int> exp{n};
      exp.insert(exp.end(), e.begin(), e.end());
      s.accumulate(exp, {}, c);
    }
  }
  return s;
}

series::Series sym_power_hilbert(int r, const std::vector<std::string>& vars, int max_deg, bool laurent,
                                 std::optional<std::pair<int, int>> factor_window) {
  if (r < 0) throw InvalidArgument("sym_power_hilbert: r must be nonnegative");
  if (laurent && !factor_window) {
    throw InvalidArgument("sym_power_hilbert: the Laurent case needs a per-variable exponent window");
  }
  int k = static_cast<int>(vars.size());
  int lo = laurent ? factor_window->first : 0;
  int hi = laurent ? factor_window->second : max_deg;
  series::Window win = laurent ? series::Window::box(vars, r * lo, r * hi) : series::Window::box(vars, 0, max_deg);
  series::Series out(win);

  std::vector<std::vector<int>> monos;
  std::vector<int> cur(k, lo);
  std::function<void(int)> gen = [&](int i) {
    if (i == k) {
      monos.push_back(cur);
      return;
    }
    for (int x = lo; x <= hi; ++x) {
      cur[i] = x;
      gen(i + 1);
    }
  };
  gen(0);

  std::vector<int> sum(k, 0);
  std::function<void(int, int)> pick = [&](int start, int left) {
    if (left == 0) {
      out.accumulate(sum, {}, Rational(1));
      return;
    }
    for (int m = start; m < static_cast<int>(monos.size()); ++m) {
      bool over = false;
      for (int i = 0; i < k; ++i) {
        sum[i] += monos[m][i];
        if (!laurent && sum[i] > max_deg) over = true;
      }
      if (!over) pick(m, left - 1);
      for (int i = 0; i < k; ++i) sum[i] -= monos[m][i];
    }
  };
  pick(0, r);
  return out;
}

std::vector<Rational> by_total_degree(const series::Series& s, int max_total) {
  std::vector<Rational> out(max_total + 1, Rational(0));
  for (const auto& [key, c] : s.terms()) {
    int d = std::accumulate(key.exp.begin(), key.exp.end(), 0);
    if (d >= 0 && d <= max_total) out[d] += c;
  }
  return out;
}

BlockLayout::BlockLayout(std::vector<int> mults, int loop_vars) : mults_(std::move(mults)), k_(loop_vars) {
  for (int m : mults_) {
    if (m < 0) throw InvalidArgument("block layout: negative multiplicity");
    offset_.push_back(total_);
    total_ += m;
  }
}

int BlockLayout::index(int block, int slot, int var) const {
  if (block < 0 || block >= blocks()) throw InvalidArgument("block index out of range");
  if (slot < 0 || slot >= mults_[block] || var < 0 || var >= k_) throw InvalidArgument("slot index out of range");
  return (offset_[block] + slot) * k_ + var;
}

BlockPoly BlockPoly::constant(const BlockLayout& layout, const Rational& c) {
  BlockPoly p(layout);
  p.add(std::vector<int>(layout.nvars(), 0), c);
  return p;
}

void BlockPoly::add(const std::vector<int>& exp, const Rational& c) {
  if (c == 0) return;
  Rational& slot = terms_[exp];
  slot += c;
  if (slot == 0) terms_.erase(exp);
}

BlockPoly BlockPoly::operator+(const BlockPoly& o) const {
  BlockPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add(e, c);
  return out;
}

BlockPoly BlockPoly::operator-(const BlockPoly& o) const { return *this + o.scaled(Rational(-1)); }

BlockPoly BlockPoly::scaled(const Rational& c) const {
  BlockPoly out(layout_);
  for (const auto& [e, v] : terms_) out.add(e, v * c);
  return out;
}

BlockPoly BlockPoly::operator*(const BlockPoly& o) const {
  BlockPoly out(layout_);
  out.terms_ = poly_mul(terms_, o.terms_);
  return out;
}

BlockPoly phi_generator_image(int block, const std::vector<int>& a, const BlockLayout& layout) {
  if (block < 0 || block >= layout.blocks()) throw InvalidArgument("phi: block index out of range");
  if (static_cast<int>(a.size()) != layout.loop_vars()) throw InvalidArgument("phi: monomial has wrong length");
  BlockPoly p(layout);
  for (int s = 0; s < layout.slots(block); ++s) {
    std::vector<int> e(layout.nvars(), 0);
    for (int j = 0; j < layout.loop_vars(); ++j) e[layout.index(block, s, j)] = a[j];
    p.add(e, Rational(1));
  }
  return p;
}

BlockPoly phi_derivation_image(const BlockLayout& layout) { return BlockPoly(layout); }
BlockPoly phi_central_image(const BlockLayout& layout) { return BlockPoly(layout); }

BlockPoly block_elementary(int block, int s, const std::vector<int>& a, const BlockLayout& layout) {
  BlockPoly p(layout);
  int r = layout.slots(block);
  if (s > r) return p;
  std::vector<int> pick(r, 0);
  std::fill(pick.end() - s, pick.end(), 1);
  do {
    std::vector<int> e(layout.nvars(), 0);
    for (int slot = 0; slot < r; ++slot) {
      if (!pick[slot]) continue;
      for (int j = 0; j < layout.loop_vars(); ++j) e[layout.index(block, slot, j)] = a[j];
    }
    p.add(e, Rational(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return p;
}

}  // namespace toroidal::symfun
