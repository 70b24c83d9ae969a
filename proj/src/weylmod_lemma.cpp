#include <algorithm>
#include <functional>
#include <sstream>

#include "toroidal/errors.hpp"
#include "toroidal/weylmod.hpp"

namespace toroidal::weylmod {

namespace {

std::string vec_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

IntVec full_exponent(int t1, const IntVec& a) {
  IntVec m(a.size() + 1);
  m[0] = t1;
  std::copy(a.begin(), a.end(), m.begin() + 1);
  return m;
}

// Multisets of generators whose j-multiplicities are e (e[i] counts j = i+2)
// and whose r-values sum to total.
void words_with_degree(const IntVec& e, int total, std::vector<ZhatMonomial>& out) {
  const int k = static_cast<int>(e.size());
  ZhatMonomial cur;
  // Generators of one j are chosen as a nonincreasing r sequence.
  std::function<void(int, int, int, int)> rec = [&](int j, int left_here, int max_r, int remaining) {
    if (j == k) {
      if (remaining == 0) out.push_back(zhat_normalize(cur));
      return;
    }
    if (left_here == 0) {
      int nj = j + 1;
      rec(nj, nj < k ? e[nj] : 0, remaining, remaining);
      return;
    }
    // Each of the left_here generators needs r >= 1.
    for (int r = std::min(max_r, remaining - (left_here - 1)); r >= 1; --r) {
      cur.emplace_back(r, j + 2);
      rec(j, left_here - 1, r, remaining - r);
      cur.pop_back();
    }
  };
  if (k == 0) {
    if (total == 0) out.push_back({});
    return;
  }
  rec(0, e[0], total, total);
}

std::vector<IntVec> box_below(const IntVec& a) {
  std::vector<IntVec> out;
  IntVec e(a.size(), 0);
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < a.size() && e[i] == a[i]) e[i++] = 0;
    if (i == a.size()) break;
    ++e[i];
  }
  return out;
}

// Common energy and finite weight of all terms; false when they differ.
bool homogeneous(const FockVector& v, int& energy, IntVec& beta) {
  bool first = true;
  for (const auto& [b, c] : v) {
    if (first) {
      energy = b.energy;
      beta = b.beta;
      first = false;
    } else if (b.energy != energy || b.beta != beta) {
      return false;
    }
  }
  return true;
}

}  // namespace

ZhatMonomial zhat_normalize(ZhatMonomial w) {
  std::sort(w.begin(), w.end());
  return w;
}

std::pair<int, IntVec> zhat_degree(const ZhatMonomial& w, int nvars) {
  int r = 0;
  IntVec e(nvars - 1, 0);
  for (const auto& [ri, j] : w) {
    if (ri <= 0 || j < 2 || j > nvars) throw InvalidArgument("Zhat generator out of range");
    r += ri;
    ++e[j - 2];
  }
  return {r, e};
}

ZhatCombination zhat_reduce(int r, const IntVec& a, int j, int nvars) {
  if (static_cast<int>(a.size()) != nvars - 1) throw InvalidArgument("zhat_reduce: degree must have n-1 entries");
  if (j < 2 || j > nvars) throw InvalidArgument("zhat_reduce: j must lie in 2..n");
  if (r <= 0) throw InvalidArgument("zhat_reduce: r must be positive");
  int k = 0;
  for (int x : a) {
    if (x < 0) throw InvalidArgument("zhat_reduce: degree must be nonnegative");
    k += x;
  }
  if (a[j - 2] < 1) throw InvalidArgument("zhat_reduce: a_j must be at least 1");
  ZhatCombination out;
  if (k == 1) {
    out[{{r, j}}] = Rational(r);
    return out;
  }
  if (r <= k - 1) return out;
  IntVec b = a;
  --b[j - 2];
  for (int m = 1; m <= r - k + 1; ++m) {
    // t_1^{-(r-m)} t^b K_1 = sum_i b_i / (r-m) t_1^{-(r-m)} t^b K_i
    for (int i = 2; i <= nvars; ++i) {
      if (b[i - 2] == 0) continue;
      Rational c(b[i - 2], r - m);
      for (const auto& [w, cw] : zhat_reduce(r - m, b, i, nvars)) {
        ZhatMonomial nw = w;
        nw.emplace_back(m, j);
        Rational& slot = out[zhat_normalize(nw)];
        slot += c * cw * m;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

FockVector zhat_apply(const WeylModel& model, const ZhatMonomial& w, const FockVector& v) {
  FockVector cur = v;
  const int n = model.nvars();
  for (const auto& [r, j] : w) {
    IntVec a(n - 1, 0);
    a.at(j - 2) = 1;
    cur = model.act(model.central(0, full_exponent(-r, a)), cur);
  }
  return cur;
}

LocalQuotient::LocalQuotient(const WeylModel& model, const IntVec& a, int energy, const IntVec& beta, bool strict) {
  const FockSpace& space = model.space();
  const int n = model.nvars();
  const int l = model.rank();
  if (static_cast<int>(a.size()) != n - 1) throw InvalidArgument("local quotient: degree must have n-1 entries");
  // L (x) 1 at finite weight beta: m-bar zero and only finite Heisenberg letters.
  std::vector<std::pair<int, int>> zero(n - 1, {0, 0});
  std::vector<FockBasis> lbasis;
  for (const auto& b : space.enumerate_basis(energy, zero)) {
    if (b.beta != beta) continue;
    bool finite = std::all_of(b.heis.begin(), b.heis.end(), [&](int c) { return fock::letter_gen(c) < l; });
    if (finite) lbasis.push_back(b);
  }
  for (const auto& e : box_below(a)) {
    if (strict && e == a) continue;
    IntVec shift(n - 1);
    for (int i = 0; i < n - 1; ++i) shift[i] = a[i] - e[i];
    ToroidalElement sigma = model.central(0, full_exponent(0, shift));
    for (int total = 0; total <= energy; ++total) {
      std::vector<ZhatMonomial> words;
      words_with_degree(e, total, words);
      for (const auto& w : words) {
        for (const auto& u : lbasis) {
          if (u.energy != energy - total) continue;
          insert(model.act(sigma, zhat_apply(model, w, FockVector{{u, Rational(1)}})));
        }
      }
    }
  }
}

FockVector LocalQuotient::reduce(FockVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    FockBasis key = it->first;
    Rational c = it->second;
    fock::fv_axpy(v, p->second, -c);
    it = v.upper_bound(key);
  }
  return v;
}

void LocalQuotient::insert(FockVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return;
  Rational lead = v.begin()->second;
  FockBasis key = v.begin()->first;
  pivots_.emplace(std::move(key), fock::fv_scaled(v, Rational(1) / lead));
}

bool LocalQuotient::contains(const FockVector& v) const { return reduce(v).empty(); }

namespace {

std::vector<IntVec> nonzero_degrees(int nvars, int k_max) {
  std::vector<IntVec> out;
  IntVec top(nvars - 1, k_max);
  for (const auto& a : box_below(top)) {
    int k = 0;
    for (int x : a) k += x;
    if (k >= 1 && k <= k_max) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](const IntVec& x, const IntVec& y) {
    int sx = 0, sy = 0;
    for (int v : x) sx += v;
    for (int v : y) sy += v;
    return sx != sy ? sx < sy : x < y;
  });
  return out;
}

struct Tally {
  CheckResult result;
  int global_zero = 0;
  int quotient_nonzero = 0;
};

// lhs - rhs must lie in the local quotient subspace at degree a.
void judge(const WeylModel& model, const IntVec& a, const FockVector& lhs, const FockVector& rhs,
           const std::string& label, Tally& t) {
  ++t.result.checked;
  FockVector diff = fock::fv_sub(lhs, rhs);
  int energy = 0;
  IntVec beta;
  bool ok = true;
  std::string why;
  if (diff.empty()) {
    ++t.global_zero;
  } else if (!homogeneous(diff, energy, beta)) {
    ok = false;
    why = "difference is not homogeneous";
  } else {
    LocalQuotient q(model, a, energy, beta);
    ok = q.contains(diff);
    if (!ok) why = "difference " + model.space().to_string(diff) + " is nonzero in the local module";
  }
  if (!lhs.empty()) {
    int e2 = 0;
    IntVec b2;
    if (homogeneous(lhs, e2, b2) && !LocalQuotient(model, a, e2, b2).contains(lhs)) ++t.quotient_nonzero;
  }
  if (!ok && t.result.pass) {
    t.result.pass = false;
    t.result.detail = label + ": " + why;
    if (t.result.detail.size() > 600) t.result.detail = t.result.detail.substr(0, 600) + "...";
  }
}

void finish(Tally& t, Report& rep) {
  if (t.result.pass) {
    t.result.detail = std::to_string(t.result.checked) + " cases; " + std::to_string(t.global_zero) +
                      " hold in V outright, lhs nonzero in the local module in " + std::to_string(t.quotient_nonzero);
  }
  rep.add(t.result);
}

}  // namespace

Report lemma_action_check(const WeylModel& model, int r_max, int k_max) {
  const int n = model.nvars();
  const IntVec& theta = model.space().lattice().root_system().theta;
  FockVector v = model.vacuum();
  Tally i_zero{{"lemma-action", "(i) r <= K: (e_theta t_1^-r t^a) v = 0", true, 0, ""}};
  Tally i_sum{{"lemma-action", "(i) r > K: sum_m (t_1^(m-r) t^a K_1)(e_theta t_1^-m) v", true, 0, ""}};
  Tally ii_zero{{"lemma-action", "(ii) r <= K-1: (t_1^-r t^a K_j) v = 0", true, 0, ""}};
  Tally ii_sum{{"lemma-action", "(ii) r > K-1: sum_m (t_1^(m-r) t^(a-e_j) K_1)(t_1^-m t_j K_j) v", true, 0, ""}};
  IntVec zero(n - 1, 0);
  for (const auto& a : nonzero_degrees(n, k_max)) {
    int k = 0;
    for (int x : a) k += x;
    for (int r = 1; r <= r_max; ++r) {
      std::string label = "a=" + vec_string(a) + " r=" + std::to_string(r);
      FockVector lhs = model.act(model.root(theta, full_exponent(-r, a)), v);
      FockVector rhs;
      for (int m = 1; m <= r - k; ++m) {
        FockVector inner = model.act(model.root(theta, full_exponent(-m, zero)), v);
        fock::fv_axpy(rhs, model.act(model.central(0, full_exponent(m - r, a)), inner), Rational(1));
      }
      judge(model, a, lhs, rhs, label, r <= k ? i_zero : i_sum);
      if (k < 2) continue;
      for (int j = 2; j <= n; ++j) {
        if (a[j - 2] < 1) continue;
        IntVec b = a, ej(n - 1, 0);
        --b[j - 2];
        ej[j - 2] = 1;
        FockVector l2 = model.act(model.central(j - 1, full_exponent(-r, a)), v);
        FockVector r2;
        for (int m = 1; m <= r - (k - 1); ++m) {
          FockVector inner = model.act(model.central(j - 1, full_exponent(-m, ej)), v);
          fock::fv_axpy(r2, model.act(model.central(0, full_exponent(m - r, b)), inner), Rational(1));
        }
        judge(model, a, l2, r2, label + " j=" + std::to_string(j), r <= k - 1 ? ii_zero : ii_sum);
      }
    }
  }
  Report rep;
  finish(i_zero, rep);
  finish(i_sum, rep);
  finish(ii_zero, rep);
  finish(ii_sum, rep);
  return rep;
}

Report zhat_check(const WeylModel& model, int r_max, int k_max) {
  const int n = model.nvars();
  FockVector v = model.vacuum();
  Tally t{{"lemma-action", "zhat_reduce agrees with the Fock action", true, 0, ""}};
  for (const auto& a : nonzero_degrees(n, k_max)) {
    for (int j = 2; j <= n; ++j) {
      if (a[j - 2] < 1) continue;
      for (int r = 1; r <= r_max; ++r) {
        FockVector lhs = model.act(model.central(j - 1, full_exponent(-r, a)), v);
        FockVector rhs;
        for (const auto& [w, c] : zhat_reduce(r, a, j, n)) fock::fv_axpy(rhs, zhat_apply(model, w, v), c);
        judge(model, a, lhs, rhs, "a=" + vec_string(a) + " r=" + std::to_string(r) + " j=" + std::to_string(j), t);
      }
    }
  }
  Report rep;
  finish(t, rep);
  return rep;
}

}  // namespace toroidal::weylmod
