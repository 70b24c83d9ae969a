#include "toroidal/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toroidal/errors.hpp"

namespace toroidal::fock {

void fv_add(FockVector& v, const FockBasis& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

void fv_axpy(FockVector& out, const FockVector& v, const Rational& c) {
  if (c == 0) return;
  for (const auto& [b, x] : v) fv_add(out, b, x * c);
}

FockVector fv_scaled(const FockVector& v, const Rational& c) {
  FockVector out;
  fv_axpy(out, v, c);
  return out;
}

FockVector fv_sub(const FockVector& a, const FockVector& b) {
  FockVector out = a;
  fv_axpy(out, b, Rational(-1));
  return out;
}

int fv_max_energy(const FockVector& v) {
  int e = -1;
  for (const auto& [b, c] : v) e = std::max(e, b.energy);
  return e;
}

namespace {

std::vector<int> merge_letters(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IntVec add_vec(const IntVec& a, const IntVec& b) {
  IntVec c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

int depth_sum(const std::vector<int>& heis) {
  int s = 0;
  for (int c : heis) s += letter_depth(c);
  return s;
}

}  // namespace

FockSpace::FockSpace(Lattice lat) : alg_(std::move(lat)) {}

FockBasis FockSpace::make_basis(IntVec beta, IntVec mbar, std::vector<int> heis) const {
  if (static_cast<int>(beta.size()) != rank()) throw InvalidArgument("fock basis: wrong finite rank");
  if (mbar.empty()) mbar.assign(nvars() - 1, 0);
  if (static_cast<int>(mbar.size()) != nvars() - 1) throw InvalidArgument("fock basis: wrong delta length");
  for (int c : heis) {
    if (letter_depth(c) < 1 || letter_gen(c) >= generators()) {
      throw InvalidArgument("fock basis: bad Heisenberg letter " + std::to_string(c));
    }
  }
  std::sort(heis.begin(), heis.end());
  FockBasis b;
  b.energy = lattice().norm(beta) / 2 + depth_sum(heis);
  b.mbar = std::move(mbar);
  b.beta = std::move(beta);
  b.heis = std::move(heis);
  return b;
}

FockVector FockSpace::vacuum() const { return FockVector{{make_basis(IntVec(rank(), 0)), Rational(1)}}; }

std::string FockSpace::to_string(const FockBasis& b) const {
  std::ostringstream os;
  os << "e^(";
  for (std::size_t i = 0; i < b.beta.size(); ++i) os << (i ? "," : "") << b.beta[i];
  os << "|";
  for (std::size_t i = 0; i < b.mbar.size(); ++i) os << (i ? "," : "") << b.mbar[i];
  os << ")";
  for (int c : b.heis) {
    int g = letter_gen(c);
    if (g < rank()) {
      os << "*a" << g + 1;
    } else {
      os << "*d" << g - rank() + 1;
    }
    os << "(-" << letter_depth(c) << ")";
  }
  return os.str();
}

std::string FockSpace::to_string(const FockVector& v) const {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [b, c] : v) {
    if (!s.empty()) s += " + ";
    s += toroidal::to_string(c) + "*" + to_string(b);
  }
  return s;
}

int FockSpace::gen_form(const IntVec& coeffs, int g) const {
  int s = 0;
  for (int h = 0; h < generators(); ++h) {
    if (coeffs[h] != 0) s += coeffs[h] * lattice().gen_pair(h, g);
  }
  return s;
}

int FockSpace::zero_mode(const IntVec& coeffs, const IntVec& beta) const {
  int s = 0;
  for (int g = 0; g < rank(); ++g) {
    if (coeffs[g] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += coeffs[g] * lattice().gen_pair(g, j) * beta[j];
  }
  return s;
}

const HeisPoly& FockSpace::schur(const IntVec& coeffs, int l) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto found = schur_cache_.find({coeffs, l});
  if (found != schur_cache_.end()) return found->second;
  // l S_l = sum_{k=1}^{l} a(-k) S_{l-k}
  for (int j = 0; j <= l; ++j) {
    if (schur_cache_.count({coeffs, j})) continue;
    HeisPoly s;
    if (j == 0) {
      s[{}] = Rational(1);
    } else {
      for (int k = 1; k <= j; ++k) {
        const HeisPoly& prev = schur_cache_.at({coeffs, j - k});
        for (int g = 0; g < generators(); ++g) {
          if (coeffs[g] == 0) continue;
          int code = letter(k, g);
          for (const auto& [word, c] : prev) {
            std::vector<int> w = word;
            w.insert(std::upper_bound(w.begin(), w.end(), code), code);
            Rational& slot = s[w];
            slot += c * Rational(coeffs[g], j);
            if (slot == 0) s.erase(w);
          }
        }
      }
    }
    schur_cache_.emplace(std::make_pair(coeffs, j), std::move(s));
  }
  return schur_cache_.at({coeffs, l});
}

FockVector FockSpace::heisenberg_apply(int gen, int k, const FockVector& v) const {
  if (gen < 0 || gen >= generators()) throw InvalidArgument("heisenberg_apply: generator out of range");
  FockVector out;
  for (const auto& [b, c] : v) {
    if (k < 0) {
      FockBasis nb = b;
      int code = letter(-k, gen);
      nb.heis.insert(std::upper_bound(nb.heis.begin(), nb.heis.end(), code), code);
      nb.energy -= k;
      fv_add(out, nb, c);
    } else if (k == 0) {
      IntVec e(generators(), 0);
      e[gen] = 1;
      fv_add(out, b, c * zero_mode(e, b.beta));
    } else {
      for (std::size_t pos = 0; pos < b.heis.size(); ++pos) {
        int code = b.heis[pos];
        if (letter_depth(code) != k) continue;
        if (pos > 0 && b.heis[pos - 1] == code) continue;
        int mult = static_cast<int>(std::count(b.heis.begin(), b.heis.end(), code));
        int p = lattice().gen_pair(gen, letter_gen(code));
        if (p == 0) continue;
        FockBasis nb = b;
        nb.heis.erase(nb.heis.begin() + static_cast<long>(pos));
        nb.energy -= k;
        fv_add(out, nb, c * (k * p * mult));
      }
    }
  }
  return out;
}

void FockSpace::vertex_basis(const IntVec& beta, const IntVec& mbar, int r, const FockBasis& b, const Rational& c,
                             FockVector& out) const {
  IntVec full(beta);
  full.insert(full.end(), mbar.begin(), mbar.end());

  // exp T_+ substitutes g(-k) -> g(-k) - (alpha,g) z^{-k}.
  struct State {
    std::vector<int> kept;
    Rational coeff;
    int J;
  };
  std::vector<State> states{{{}, Rational(1), 0}};
  for (std::size_t pos = 0; pos < b.heis.size();) {
    int code = b.heis[pos];
    std::size_t end = pos;
    while (end < b.heis.size() && b.heis[end] == code) ++end;
    int mu = static_cast<int>(end - pos);
    int k = letter_depth(code);
    int p = gen_form(full, letter_gen(code));
    std::vector<State> next;
    for (const State& s : states) {
      for (int j = 0; j <= (p == 0 ? 0 : mu); ++j) {
        State t = s;
        t.coeff *= Rational(binomial(mu, j)) * rpow(Rational(-p), j);
        t.kept.insert(t.kept.end(), static_cast<std::size_t>(mu - j), code);
        t.J += k * j;
        next.push_back(std::move(t));
      }
    }
    states = std::move(next);
    pos = end;
  }

  const int norm_half = lattice().norm(beta) / 2;
  const int cross = lattice().fin(beta, b.beta);
  const int sign = alg_.cocycle().eval(beta, b.beta);
  IntVec nbeta = add_vec(b.beta, beta);
  IntVec nmbar = add_vec(b.mbar, mbar);
  for (const State& s : states) {
    int l = -r - norm_half - cross + s.J;
    if (l < 0) continue;
    const HeisPoly& poly = schur(full, l);
    for (const auto& [word, x] : poly) {
      FockBasis nb;
      nb.energy = b.energy - r;
      nb.mbar = nmbar;
      nb.beta = nbeta;
      nb.heis = merge_letters(s.kept, word);
      fv_add(out, nb, c * s.coeff * x * sign);
    }
  }
}

void FockSpace::delta_vertex(const IntVec& mbar, int s, const FockBasis& b, const Rational& c,
                             FockVector& out) const {
  if (s > 0) return;
  IntVec full(rank(), 0);
  full.insert(full.end(), mbar.begin(), mbar.end());
  const HeisPoly& poly = schur(full, -s);
  IntVec nmbar = add_vec(b.mbar, mbar);
  for (const auto& [word, x] : poly) {
    FockBasis nb;
    nb.energy = b.energy - s;
    nb.mbar = nmbar;
    nb.beta = b.beta;
    nb.heis = merge_letters(b.heis, word);
    fv_add(out, nb, c * x);
  }
}

void FockSpace::normal_ordered_basis(const IntVec& coeffs, const IntVec& mbar, int r, const FockBasis& b,
                                     const Rational& c, FockVector& out) const {
  IntVec full(rank(), 0);
  full.insert(full.end(), mbar.begin(), mbar.end());
  IntVec nmbar = add_vec(b.mbar, mbar);

  // Creation part: sum_{k=1}^{-r} a(-k) X_{r+k}(delta).
  for (int k = 1; k <= -r; ++k) {
    const HeisPoly& poly = schur(full, -r - k);
    for (int g = 0; g < generators(); ++g) {
      if (coeffs[g] == 0) continue;
      int code = letter(k, g);
      for (const auto& [word, x] : poly) {
        FockBasis nb;
        nb.energy = b.energy - r;
        nb.mbar = nmbar;
        nb.beta = b.beta;
        nb.heis = merge_letters(b.heis, word);
        nb.heis.insert(std::upper_bound(nb.heis.begin(), nb.heis.end(), code), code);
        fv_add(out, nb, c * x * coeffs[g]);
      }
    }
  }

  // Annihilation part: sum_{k >= max(0,r)} X_{r-k}(delta) a(k).
  int top = 0;
  for (int code : b.heis) top = std::max(top, letter_depth(code));
  for (int k = std::max(0, r); k <= top; ++k) {
    if (k == 0) {
      int z = zero_mode(coeffs, b.beta);
      if (z != 0) delta_vertex(mbar, r, b, c * z, out);
      continue;
    }
    for (std::size_t pos = 0; pos < b.heis.size(); ++pos) {
      int code = b.heis[pos];
      if (letter_depth(code) != k) continue;
      if (pos > 0 && b.heis[pos - 1] == code) continue;
      int p = gen_form(coeffs, letter_gen(code));
      if (p == 0) continue;
      int mult = static_cast<int>(std::count(b.heis.begin(), b.heis.end(), code));
      FockBasis nb = b;
      nb.heis.erase(nb.heis.begin() + static_cast<long>(pos));
      nb.energy -= k;
      delta_vertex(mbar, r - k, nb, c * (k * p * mult), out);
    }
  }
}

FockVector FockSpace::vertex_apply(const IntVec& beta, const IntVec& mbar, int r, const FockVector& v) const {
  if (static_cast<int>(beta.size()) != rank() || static_cast<int>(mbar.size()) != nvars() - 1) {
    throw InvalidArgument("vertex_apply: lattice vector has the wrong shape");
  }
  FockVector out;
  for (const auto& [b, c] : v) vertex_basis(beta, mbar, r, b, c, out);
  return out;
}

FockVector FockSpace::normal_ordered_apply(const IntVec& coeffs, const IntVec& mbar, int r,
                                           const FockVector& v) const {
  if (static_cast<int>(coeffs.size()) != generators() || static_cast<int>(mbar.size()) != nvars() - 1) {
    throw InvalidArgument("normal_ordered_apply: wrong coefficient or delta length");
  }
  FockVector out;
  for (const auto& [b, c] : v) normal_ordered_basis(coeffs, mbar, r, b, c, out);
  return out;
}

FockVector FockSpace::toroidal_apply(const TorBasis& x, const FockBasis& b) const {
  const int n = nvars();
  FockVector out;
  if (x.kind == Kind::Deriv) {
    int i = x.label.at(0);
    if (i < 0 || i >= n) throw InvalidArgument("derivation index out of range");
    int ev = i < n - 1 ? b.mbar[i] : -b.energy;
    fv_add(out, b, Rational(ev));
    return out;
  }
  if (static_cast<int>(x.m.size()) != n) throw InvalidArgument("toroidal element: wrong exponent length");
  IntVec mbar(x.m.begin(), x.m.end() - 1);
  int r = x.m.back();
  switch (x.kind) {
    case Kind::Root: {
      if (!lattice().root_system().is_root(x.label)) throw InvalidArgument("not a root");
      vertex_basis(x.label, mbar, r, b, Rational(alg_.root_sign(x.label)), out);
      break;
    }
    case Kind::Cartan: {
      IntVec coeffs(generators(), 0);
      coeffs.at(x.label.at(0)) = 1;
      normal_ordered_basis(coeffs, mbar, r, b, Rational(1), out);
      break;
    }
    case Kind::Central: {
      int i = x.label.at(0);
      if (i < n - 1) {
        IntVec coeffs(generators(), 0);
        coeffs[rank() + i] = 1;
        normal_ordered_basis(coeffs, mbar, r, b, Rational(1), out);
      } else {
        delta_vertex(mbar, r, b, Rational(1), out);
      }
      break;
    }
    case Kind::Deriv:
      break;
  }
  return out;
}

FockVector FockSpace::toroidal_apply(const ToroidalElement& x, const FockVector& v) const {
  FockVector out;
  for (const auto& [t, ct] : x.terms()) {
    for (const auto& [b, cb] : v) fv_axpy(out, toroidal_apply(t, b), ct * cb);
  }
  return out;
}

std::vector<IntVec> FockSpace::short_vectors(int emax) const {
  const int l = rank();
  std::vector<IntVec> out;
  if (emax < 0) return out;
  // Cholesky-type decomposition Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
  std::vector<std::vector<double>> q(l, std::vector<double>(l, 0.0));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) q[i][j] = lattice().gen_pair(i, j);
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (int k = i + 1; k < l; ++k) {
      for (int m = k; m < l; ++m) q[k][m] -= q[k][i] * q[i][m];
    }
  }
  const double bound = 2.0 * emax;
  IntVec x(l, 0);
  auto rec = [&](auto&& self, int i, double remaining) -> void {
    if (i < 0) {
      if (lattice().norm(x) <= 2 * emax) out.push_back(x);
      return;
    }
    double center = 0;
    for (int j = i + 1; j < l; ++j) center -= q[i][j] * x[j];
    double radius = std::sqrt(std::max(0.0, remaining) / q[i][i]);
    int lo = static_cast<int>(std::ceil(center - radius - 1e-9));
    int hi = static_cast<int>(std::floor(center + radius + 1e-9));
    for (int v = lo; v <= hi; ++v) {
      x[i] = v;
      double d = v - center;
      self(self, i - 1, remaining - q[i][i] * d * d);
    }
    x[i] = 0;
  };
  rec(rec, l - 1, bound + 1e-9);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void colored_partitions(int remaining, int min_code, int gens, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int d = 1; d <= remaining; ++d) {
    for (int g = 0; g < gens; ++g) {
      int code = letter(d, g);
      if (code < min_code) continue;
      cur.push_back(code);
      colored_partitions(remaining - d, code, gens, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<IntVec> window_points(const std::vector<std::pair<int, int>>& window) {
  std::vector<IntVec> pts{{}};
  for (const auto& [lo, hi] : window) {
    std::vector<IntVec> next;
    for (const IntVec& p : pts) {
      for (int v = lo; v <= hi; ++v) {
        IntVec q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    pts = std::move(next);
  }
  return pts;
}

}  // namespace

std::vector<FockBasis> FockSpace::enumerate_basis(int emax, const std::vector<std::pair<int, int>>& mwindow) const {
  if (static_cast<int>(mwindow.size()) != nvars() - 1) {
    throw InvalidArgument("enumerate_basis: delta window needs " + std::to_string(nvars() - 1) + " intervals");
  }
  std::vector<FockBasis> out;
  if (emax < 0) return out;
  std::vector<std::vector<std::vector<int>>> heis(emax + 1);
  for (int d = 0; d <= emax; ++d) {
    std::vector<int> cur;
    colored_partitions(d, 0, generators(), cur, heis[d]);
  }
  std::vector<IntVec> mbars = window_points(mwindow);
  for (const IntVec& beta : short_vectors(emax)) {
    int base = lattice().norm(beta) / 2;
    for (const IntVec& mbar : mbars) {
      for (int d = 0; base + d <= emax; ++d) {
        for (const auto& word : heis[d]) out.push_back(FockBasis{base + d, mbar, beta, word});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

series::Series FockSpace::graded_character(int emax, const std::vector<std::pair<int, int>>& mwindow) const {
  if (static_cast<int>(mwindow.size()) != nvars() - 1) {
    throw InvalidArgument("graded_character: delta window needs " + std::to_string(nvars() - 1) + " intervals");
  }
  std::vector<std::string> vars{"q"};
  std::vector<std::pair<int, int>> bounds{{0, emax}};
  for (int i = 0; i + 1 < nvars(); ++i) {
    vars.push_back("u" + std::to_string(i + 1));
    bounds.push_back(mwindow[i]);
  }
  series::Series out(series::Window(vars, bounds), rank());
  // Number of Heisenberg monomials of each depth.
  std::vector<Integer> count(std::max(emax, 0) + 1, 0);
  for (int d = 0; d <= emax; ++d) {
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    colored_partitions(d, 0, generators(), cur, words);
    count[d] = static_cast<long long>(words.size());
  }
  std::vector<IntVec> mbars = window_points(mwindow);
  for (const IntVec& beta : short_vectors(emax)) {
    int base = lattice().norm(beta) / 2;
    IntVec wt = rootsys::to_fundamental(lattice().root_system(), beta);
    for (const IntVec& mbar : mbars) {
      for (int d = 0; base + d <= emax; ++d) {
        IntVec exp{base + d};
        exp.insert(exp.end(), mbar.begin(), mbar.end());
        out.add_term(exp, wt, Rational(count[d]));
      }
    }
  }
  return out;
}

FockVector ActionCache::apply(const TorBasis& x, const FockBasis& b) {
  if (x.kind == Kind::Deriv) return space_.toroidal_apply(x, b);
  // Everything except the derivations commutes with e^{delta_mbar}, so the
  // memo is keyed on the vector moved to mbar = 0.
  FockBasis base = b;
  std::fill(base.mbar.begin(), base.mbar.end(), 0);
  auto key = std::make_pair(x, std::move(base));
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, space_.toroidal_apply(x, key.second)).first;
  if (std::all_of(b.mbar.begin(), b.mbar.end(), [](int x) { return x == 0; })) return it->second;
  FockVector out;
  for (const auto& [t, c] : it->second) {
    FockBasis s = t;
    for (std::size_t i = 0; i < s.mbar.size(); ++i) s.mbar[i] += b.mbar[i];
    out.emplace_hint(out.end(), std::move(s), c);
  }
  return out;
}

FockVector ActionCache::apply(const ToroidalElement& x, const FockVector& v) {
  FockVector out;
  for (const auto& [t, ct] : x.terms()) {
    for (const auto& [b, cb] : v) fv_axpy(out, apply(t, b), ct * cb);
  }
  return out;
}

}  // namespace toroidal::fock
