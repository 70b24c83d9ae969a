#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "toroidal/errors.hpp"
#include "toroidal/garland.hpp"
#include "toroidal/parallel.hpp"
#include "toroidal/symfun.hpp"
#include "toroidal/weylmod.hpp"

namespace toroidal::weylmod {

namespace {

// Uniform picks from raw mt19937 outputs, so sequences agree across
// standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed) {}
  int pick(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint32_t>(hi - lo + 1)); }
  IntVec vec(int len, int lo, int hi) {
    IntVec v(len);
    for (int& x : v) x = pick(lo, hi);
    return v;
  }

 private:
  std::mt19937 rng_;
};

std::string clip(std::string s, std::size_t n = 600) {
  if (s.size() > n) s = s.substr(0, n) + "...";
  return s;
}

std::string vec_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::vector<std::pair<int, int>> resolve_window(const FockSpace& space, const SliceConfig& cfg) {
  if (!cfg.mwindow.empty()) {
    if (static_cast<int>(cfg.mwindow.size()) != space.nvars() - 1) {
      throw InvalidArgument("m-bar window must have n-1 entries");
    }
    return cfg.mwindow;
  }
  return std::vector<std::pair<int, int>>(space.nvars() - 1, {-2, 2});
}

// lhs = rhs as operators, tested on every domain vector.
struct Instance {
  std::string family;
  std::string label;
  OpExpr lhs;
  OpExpr rhs;
};

struct Outcome {
  long long checked = 0;
  std::string failure;
};

std::vector<Outcome> run_instances(const FockSpace& space, const std::vector<Instance>& inst,
                                   const std::vector<FockBasis>& domain) {
  std::vector<Outcome> out(inst.size());
  std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(inst.size(), thread_count()));
  parallel_for(chunks, [&](std::size_t c) {
    fock::ActionCache cache(space);
    for (std::size_t i = c; i < inst.size(); i += chunks) {
      OpExpr diff = inst[i].lhs - inst[i].rhs;
      for (const auto& b : domain) {
        FockVector r = apply(diff, FockVector{{b, Rational(1)}}, cache);
        ++out[i].checked;
        if (!r.empty()) {
          out[i].failure = inst[i].label + " on " + space.to_string(b) + ": lhs - rhs = " + space.to_string(r);
          break;
        }
      }
    }
  });
  return out;
}

Report collect(const std::string& suite, const std::vector<Instance>& inst, const std::vector<Outcome>& res) {
  Report rep;
  std::vector<std::string> order;
  std::map<std::string, CheckResult> by;
  std::map<std::string, int> count;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    auto it = by.find(inst[i].family);
    if (it == by.end()) {
      order.push_back(inst[i].family);
      it = by.emplace(inst[i].family, CheckResult{suite, inst[i].family, true, 0, ""}).first;
    }
    ++count[inst[i].family];
    it->second.checked += res[i].checked;
    if (!res[i].failure.empty() && it->second.pass) {
      it->second.pass = false;
      it->second.detail = clip(res[i].failure);
    }
  }
  for (const auto& f : order) {
    CheckResult r = by[f];
    if (r.pass) r.detail = std::to_string(count[f]) + " instances";
    rep.add(r);
  }
  return rep;
}

TorBasis random_basis(Sampler& s, const fock::Lattice& lat) {
  const int n = lat.nvars();
  auto roots = lat.root_system().roots();
  TorBasis b;
  int kind = s.pick(0, 9);
  if (kind <= 4) {
    b.kind = Kind::Root;
    b.label = roots[s.pick(0, static_cast<int>(roots.size()) - 1)];
  } else if (kind <= 6) {
    b.kind = Kind::Cartan;
    b.label = {s.pick(0, lat.rank() - 1)};
  } else if (kind <= 8) {
    b.kind = Kind::Central;
    b.label = {s.pick(0, n - 1)};
  } else {
    b.kind = Kind::Deriv;
    b.label = {s.pick(0, n - 1)};
    return b;
  }
  b.m = s.vec(n, -2, 2);
  return b;
}

}  // namespace

Report bracket_check(const FockSpace& space, const SliceConfig& cfg) {
  auto window = resolve_window(space, cfg);
  if (cfg.emax < 0) throw InvalidArgument("E_max must be nonnegative");
  auto domain = space.enumerate_basis(cfg.emax, window);
  Sampler s(cfg.seed);
  const int n = space.nvars();
  std::vector<Instance> inst;
  for (int p = 0; p < cfg.samples; ++p) {
    auto x = ToroidalElement::basis(n, random_basis(s, space.lattice()));
    auto y = ToroidalElement::basis(n, random_basis(s, space.lattice()));
    auto z = space.algebra().bracket(x, y);
    inst.push_back(Instance{"bracket fidelity", "[" + x.to_string() + ", " + y.to_string() + "]",
                            commutator(OpExpr::single(x), OpExpr::single(y)), OpExpr::single(z)});
  }
  auto res = run_instances(space, inst, domain);
  Report rep = collect("brackets", inst, res);
  for (auto& c : rep.checks) {
    if (c.pass) c.detail += " on " + std::to_string(domain.size()) + " slice vectors";
  }
  return rep;
}

Report automorphism_check(const fock::ToroidalAlgebra& alg, int samples, std::uint32_t seed) {
  const int n = alg.nvars();
  IntMatrix a = fock::affine_swap_matrix(n);
  IntMatrix a2 = fock::matmul(a, a);
  Sampler s(seed);
  CheckResult hom{"automorphism", "A preserves brackets", true, 0, ""};
  CheckResult comp{"automorphism", "A(A x) = (A^2) x", true, 0, ""};
  for (int p = 0; p < samples; ++p) {
    auto x = ToroidalElement::basis(n, random_basis(s, alg.lattice()));
    auto y = ToroidalElement::basis(n, random_basis(s, alg.lattice()));
    auto lhs = fock::gl_automorphism_apply(a, alg.bracket(x, y));
    auto rhs = alg.bracket(fock::gl_automorphism_apply(a, x), fock::gl_automorphism_apply(a, y));
    ++hom.checked;
    if (!(lhs == rhs) && hom.pass) {
      hom.pass = false;
      hom.detail = clip("x=" + x.to_string() + " y=" + y.to_string() + ": A[x,y]=" + lhs.to_string() +
                        " but [Ax,Ay]=" + rhs.to_string());
    }
    for (const auto* e : {&x, &y}) {
      auto twice = fock::gl_automorphism_apply(a, fock::gl_automorphism_apply(a, *e));
      auto once = fock::gl_automorphism_apply(a2, *e);
      ++comp.checked;
      if (!(twice == once) && comp.pass) {
        comp.pass = false;
        comp.detail = clip("x=" + e->to_string() + ": A(Ax)=" + twice.to_string() + " but A^2 x=" + once.to_string());
      }
    }
  }
  if (hom.pass) hom.detail = std::to_string(samples) + " pairs";
  if (comp.pass) comp.detail = std::to_string(2 * samples) + " elements";
  Report rep;
  rep.add(hom);
  rep.add(comp);
  return rep;
}

Report highest_weight_check(const WeylModel& model, int emax, int krange) {
  const int l = model.rank();
  const int n = model.nvars();
  const FockSpace& space = model.space();
  std::vector<IntVec> ks;
  {
    IntVec k(n - 1, -krange);
    while (true) {
      ks.push_back(k);
      int i = 0;
      while (i < n - 1 && k[i] == krange) k[i++] = -krange;
      if (i == n - 1) break;
      ++k[i];
    }
  }
  FockVector v = model.vacuum();
  int need = 0;
  fock::ActionCache cache(space);
  auto run = [&](const OpExpr& x) {
    FockVector out;
    for (const auto& w : x.words()) {
      FockVector cur = v;
      for (auto it = w.letters.rbegin(); it != w.letters.rend() && !cur.empty(); ++it) {
        cur = cache.apply(*it, cur);
        need = std::max(need, fock::fv_max_energy(cur));
      }
      fock::fv_axpy(out, cur, w.coeff);
    }
    return out;
  };
  Report rep;
  auto family = [&](const std::string& name, const std::vector<std::pair<std::string, OpExpr>>& cases,
                    const std::function<FockVector()>& expected_fn) {
    CheckResult r{"highest-weight", name, true, 0, ""};
    FockVector expected = expected_fn();
    for (const auto& [label, x] : cases) {
      FockVector got = run(x);
      ++r.checked;
      if (got != expected && r.pass) {
        r.pass = false;
        r.detail = clip(label + " v = " + space.to_string(got) + ", expected " + space.to_string(expected));
      }
    }
    if (r.pass) r.detail = std::to_string(cases.size()) + (cases.size() == 1 ? " case" : " cases");
    rep.add(r);
  };
  auto zero = [] { return FockVector{}; };
  auto same = [&] { return v; };
  std::vector<std::pair<std::string, OpExpr>> c;

  for (int i = 0; i <= l; ++i) {
    for (const auto& k : ks) c.emplace_back("e_{" + std::to_string(i) + "," + vec_string(k) + "}", model.op(model.e(i, k)));
  }
  family("e_{i,k} v = 0", c, zero);
  c.clear();
  for (int i = 1; i <= l; ++i) {
    for (const auto& k : ks) c.emplace_back("h_{" + std::to_string(i) + "," + vec_string(k) + "}", model.op(model.h(i, k)));
  }
  family("h_{i,k} v = 0", c, zero);
  c.clear();
  IntVec k0(n - 1, 0);
  for (int i = 1; i <= l; ++i) c.emplace_back("h_" + std::to_string(i), model.op(model.h(i, k0)));
  family("h v = Lambda_0(h) v (finite)", c, zero);
  c.clear();
  c.emplace_back("h_0", model.op(model.h(0, k0)));
  family("h v = Lambda_0(h) v (affine node)", c, same);
  c.clear();
  for (int i = 1; i <= l; ++i) {
    for (const auto& k : ks) c.emplace_back("f_{" + std::to_string(i) + "," + vec_string(k) + "}", model.op(model.f(i, k)));
  }
  family("f_{i,k} v = 0", c, zero);
  c.clear();
  c.emplace_back("f_0^2", model.op(model.f(0, k0)) * model.op(model.f(0, k0)));
  family("f_0^2 v = 0", c, zero);
  c.clear();
  for (int i = 1; i < n; ++i) {
    for (const auto& k : ks) {
      IntVec m(n, 0);
      for (int t = 1; t < n; ++t) m[t] = k[t - 1];
      c.emplace_back("t^" + vec_string(k) + " K_" + std::to_string(i + 1), model.op(model.central(i, m)));
    }
  }
  family("t^k K_i v = 0 (i >= 2)", c, zero);
  c.clear();
  c.emplace_back("K_1", model.op(model.central(0, IntVec(n, 0))));
  family("K_1 v = v", c, same);
  c.clear();
  for (int j = 1; j < n; ++j) c.emplace_back("d_" + std::to_string(j + 1), model.op(model.d(j)));
  family("d_i v = 0 (i >= 2)", c, zero);
  c.clear();
  c.emplace_back("d_1", model.op(model.d(0)));
  family("d_1 v = 0", c, zero);
  if (need > emax) throw SliceExhausted(emax, need);
  return rep;
}

Report presentation_check(const WeylModel& model, const SliceConfig& cfg) {
  const FockSpace& space = model.space();
  auto window = resolve_window(space, cfg);
  if (cfg.emax < 0) throw InvalidArgument("E_max must be nonnegative");
  auto domain = space.enumerate_basis(cfg.emax, window);
  const int l = model.rank();
  const int n = model.nvars();
  const auto& A = model.cartan();
  Sampler s(cfg.seed);
  auto kb = [&] { return s.vec(n - 1, -2, 2); };
  auto node = [&] { return s.pick(0, l); };
  auto op = [&](const ToroidalElement& x) { return model.op(x); };
  auto lab = [](const std::string& name, int i, const IntVec& k) {
    return name + "_{" + std::to_string(i) + "," + vec_string(k) + "}";
  };
  std::vector<Instance> inst;
  const int cap = cfg.per_family;
  auto gen = [&](int which, int i, const IntVec& k) {
    switch (which) {
      case 0:
        return model.e(i, k);
      case 1:
        return model.f(i, k);
      default:
        return model.h(i, k);
    }
  };
  const char* names[] = {"e", "f", "h"};

  for (int t = 0; t < cap; ++t) {
    IntVec r = kb(), k = kb(), sv = kb();
    inst.push_back({"R1(a)", "delta_" + vec_string(r) + "+delta_" + vec_string(k) + " at " + vec_string(sv),
                    op(model.delta(r, sv)) + op(model.delta(k, sv)), op(model.delta(add(r, k), sv))});
  }
  for (int t = 0; t < cap; ++t) {
    IntVec r = kb();
    inst.push_back({"R1(b)", "delta_" + vec_string(r) + "(" + vec_string(r) + ")", op(model.delta(r, r)), OpExpr{}});
  }
  for (int t = 0; t < cap; ++t) {
    IntVec r = kb(), sv = kb(), k = kb();
    int which = s.pick(0, 3);
    ToroidalElement y;
    std::string ylab;
    if (which == 3) {
      IntVec q = kb();
      y = model.delta(k, q);
      ylab = "delta_" + vec_string(k) + "(" + vec_string(q) + ")";
    } else {
      int i = node();
      y = gen(which, i, k);
      ylab = lab(names[which], i, k);
    }
    inst.push_back({"R1(c)", "[delta_" + vec_string(r) + "(" + vec_string(sv) + "), " + ylab + "]",
                    commutator(op(model.delta(r, sv)), op(y)), OpExpr{}});
  }
  for (int t = 0; t < cap; ++t) {
    IntVec r = kb(), sv = kb();
    int j = s.pick(0, n - 1);
    Rational c = j == 0 ? Rational(0) : Rational(sv[j - 1]);
    inst.push_back({"R1(d)", "[d_" + std::to_string(j + 1) + ", delta_" + vec_string(r) + "(" + vec_string(sv) + ")]",
                    commutator(op(model.d(j)), op(model.delta(r, sv))), op(model.delta(r, sv)).scaled(c)});
  }
  for (int t = 0; t < cap; ++t) {
    int i = node(), j = node();
    IntVec k = kb(), sv = kb();
    inst.push_back({"R2", "[" + lab("h", i, k) + ", " + lab("h", j, sv) + "]",
                    commutator(op(model.h(i, k)), op(model.h(j, sv))),
                    op(model.delta(k, add(k, sv))).scaled(Rational(A[i][j]))});
  }
  for (int t = 0; t < cap; ++t) {
    int i = node(), j = node();
    IntVec k = kb(), sv = kb();
    inst.push_back({"R3(a)", "[" + lab("h", i, k) + ", " + lab("e", j, sv) + "]",
                    commutator(op(model.h(i, k)), op(model.e(j, sv))),
                    op(model.e(j, add(k, sv))).scaled(Rational(A[i][j]))});
  }
  for (int t = 0; t < cap; ++t) {
    int i = node(), j = node();
    IntVec k = kb(), sv = kb();
    inst.push_back({"R3(b)", "[" + lab("h", i, k) + ", " + lab("f", j, sv) + "]",
                    commutator(op(model.h(i, k)), op(model.f(j, sv))),
                    op(model.f(j, add(k, sv))).scaled(Rational(-A[i][j]))});
  }
  for (int t = 0; t < cap; ++t) {
    int i = node();
    int j = t % 2 == 0 ? i : node();
    IntVec k = kb(), sv = kb();
    OpExpr rhs;
    if (i == j) rhs = op(model.h(i, add(k, sv))) + op(model.delta(k, add(k, sv)));
    inst.push_back({"R4", "[" + lab("e", i, k) + ", " + lab("f", j, sv) + "]",
                    commutator(op(model.e(i, k)), op(model.f(j, sv))), rhs});
  }
  for (int which = 0; which < 2; ++which) {
    for (int t = 0; t < cap; ++t) {
      int i = node();
      IntVec k = kb(), sv = kb();
      inst.push_back({which == 0 ? "R5(a)" : "R5(b)",
                      "[" + lab(names[which], i, k) + ", " + lab(names[which], i, sv) + "]",
                      commutator(op(gen(which, i, k)), op(gen(which, i, sv))), OpExpr{}});
    }
  }
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i <= l; ++i) {
    for (int j = 0; j <= l; ++j) {
      if (i != j) off.emplace_back(i, j);
    }
  }
  IntVec zero(n - 1, 0);
  for (int which = 0; which < 2; ++which) {
    for (int t = 0; t < cap; ++t) {
      auto [i, j] = off[t % off.size()];
      IntVec sv = kb();
      int power = 1 - A[i][j];
      inst.push_back({which == 0 ? "R6(a)" : "R6(b)",
                      "(ad " + lab(names[which], i, zero) + ")^" + std::to_string(power) + " " +
                          lab(names[which], j, sv),
                      ad_power(op(gen(which, i, zero)), power, op(gen(which, j, sv))), OpExpr{}});
    }
  }
  for (int t = 0; t < cap && n > 1; ++t) {
    int j = s.pick(1, n - 1);
    int which = s.pick(0, 2);
    int i = node();
    IntVec k = kb();
    inst.push_back({"R7", "[d_" + std::to_string(j + 1) + ", " + lab(names[which], i, k) + "]",
                    commutator(op(model.d(j)), op(gen(which, i, k))),
                    op(gen(which, i, k)).scaled(Rational(k[j - 1]))});
  }
  for (int t = 0; t < cap; ++t) {
    int which = t % 3;
    int i = t < 3 ? 0 : node();
    IntVec k = kb();
    int c = which == 2 || i != 0 ? 0 : (which == 0 ? 1 : -1);
    inst.push_back({"R8", "[d_1, " + lab(names[which], i, k) + "]", commutator(op(model.d(0)), op(gen(which, i, k))),
                    op(gen(which, i, k)).scaled(Rational(c))});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      inst.push_back({"R9", "[d_" + std::to_string(i + 1) + ", d_" + std::to_string(j + 1) + "]",
                      commutator(op(model.d(i)), op(model.d(j))), OpExpr{}});
    }
  }
  auto res = run_instances(space, inst, domain);
  Report rep = collect("presentation", inst, res);
  for (auto& c : rep.checks) {
    if (c.pass) c.detail += " on " + std::to_string(domain.size()) + " slice vectors";
  }
  return rep;
}

Report garland_identity_check(const WeylModel& model, int r_max) {
  const FockSpace& space = model.space();
  const int n = model.nvars();
  const auto& rs = space.lattice().root_system();
  auto gp = garland::garland_coeffs(r_max + 1);
  FockVector v = model.vacuum();
  CheckResult first{"garland", "E^(r) F_0^(r+1) v = (-1)^r sum_s F_{r-s} P_s v", true, 0, ""};
  CheckResult second{"garland", "E^(r+1) F_0^(r+1) v = (-1)^(r+1) P_{r+1} v", true, 0, ""};
  CheckResult nontrivial{"garland", "some case with nonzero sides for each r", true, 0, ""};
  fock::ActionCache cache(space);
  // Level one: H_0 v = s v, so the shift s = r + 1 is the first one where both
  // sides of the r-th identity can be nonzero.
  std::vector<bool> seen(r_max + 1, false);
  for (int sh = 0; sh <= r_max + 1; ++sh) {
    for (const auto& alpha : rs.roots()) {
      bool positive = std::any_of(alpha.begin(), alpha.end(), [](int x) { return x > 0; });
      if (sh == 0 && !positive) continue;
      IntVec minus = alpha;
      for (int& x : minus) x = -x;
      for (int c = 0; c < n; ++c) {
        auto mono = [&](int shift, int p) {
          IntVec m(n, 0);
          m[0] = shift;
          m[c] += p;
          return m;
        };
        auto E = [&](int p) { return model.op(model.root(alpha, mono(sh, p))); };
        auto F = [&](int p) { return model.op(model.root(minus, mono(-sh, p))); };
        std::function<OpExpr(int)> H = [&](int p) {
          ToroidalElement x = model.cartan_elem(alpha, mono(0, p));
          if (sh != 0) x = x + model.central(0, mono(0, p)).scaled(Rational(sh));
          return model.op(x);
        };
        std::vector<OpExpr> P;
        for (const auto& g : gp) P.push_back(g.substitute(H, OpExpr::identity()));
        std::string label = "alpha=" + vec_string(alpha) + " s=" + std::to_string(sh) + " a=t_" + std::to_string(c + 1);
        for (int r = 0; r <= r_max; ++r) {
          Rational sign(r % 2 == 0 ? 1 : -1);
          OpExpr lhs1 = divided_power(E(1), r) * divided_power(F(0), r + 1);
          OpExpr rhs1;
          for (int k = 0; k <= r; ++k) rhs1 = rhs1 + F(r - k) * P[k];
          FockVector a1 = apply(lhs1, v, cache), b1 = apply(rhs1.scaled(sign), v, cache);
          ++first.checked;
          if (a1 != b1 && first.pass) {
            first.pass = false;
            first.detail = clip(label + " r=" + std::to_string(r) + ": lhs=" + space.to_string(a1) +
                                " rhs=" + space.to_string(b1));
          }
          OpExpr lhs2 = divided_power(E(1), r + 1) * divided_power(F(0), r + 1);
          FockVector a2 = apply(lhs2, v, cache), b2 = apply(P[r + 1].scaled(-sign), v, cache);
          ++second.checked;
          if (a2 != b2 && second.pass) {
            second.pass = false;
            second.detail = clip(label + " r=" + std::to_string(r) + ": lhs=" + space.to_string(a2) +
                                 " rhs=" + space.to_string(b2));
          }
          ++nontrivial.checked;
          if (!b1.empty() && !b2.empty()) seen[r] = true;
        }
      }
    }
  }
  for (int r = 0; r <= r_max && nontrivial.pass; ++r) {
    if (!seen[r]) {
      nontrivial.pass = false;
      nontrivial.detail = "r=" + std::to_string(r) + ": every case has a vanishing side";
    }
  }
  if (nontrivial.pass) nontrivial.detail = "every r has a case with both sides nonzero";
  if (first.pass) first.detail = std::to_string(first.checked) + " cases, r <= " + std::to_string(r_max);
  if (second.pass) second.detail = std::to_string(second.checked) + " cases, r <= " + std::to_string(r_max);
  Report rep;
  rep.add(first);
  rep.add(second);
  rep.add(nontrivial);
  return rep;
}

Report garland_bridge_check(int s_max) {
  auto gp = garland::garland_coeffs(s_max);
  CheckResult r{"garland", "p^(s) -> (-1)^s e_s", true, 0, ""};
  for (int s = 0; s <= s_max; ++s) {
    bool faithful = false;
    auto img = garland::garland_to_symfun(gp[s], std::max(1, s_max), 1, &faithful);
    auto want = symfun::elementary(s, std::max(1, s_max)).scaled(Rational(s % 2 == 0 ? 1 : -1));
    ++r.checked;
    if ((!faithful || !(img == want)) && r.pass) {
      r.pass = false;
      r.detail = "s=" + std::to_string(s) + ": got " + img.to_string() + ", expected " + want.to_string();
    }
  }
  if (r.pass) r.detail = "s <= " + std::to_string(s_max) + " in " + std::to_string(std::max(1, s_max)) + " variables";
  Report rep;
  rep.add(r);
  return rep;
}

Report symfun_check(const SymfunConfig& cfg) {
  const int nv = cfg.nvars;
  Report rep;
  auto range = [&](const std::string& name, int lo, int hi, const std::function<bool(int)>& ok) {
    CheckResult r{"symfun", name, true, 0, ""};
    for (int k = lo; k <= hi; ++k) {
      ++r.checked;
      if (!ok(k)) {
        r.pass = false;
        r.detail = "fails at n=" + std::to_string(k) + " in " + std::to_string(nv) + " variables";
        break;
      }
    }
    if (r.pass) r.detail = "n=" + std::to_string(lo) + ".." + std::to_string(hi) + " in " + std::to_string(nv) + " variables";
    rep.add(r);
  };
  range("n e_n = sum (-1)^(r-1) p_r e_(n-r)", 1, cfg.newton_max, [&](int k) { return symfun::newton_e_check(k, nv); });
  auto em = symfun::expand_E_minus(cfg.partition_max, nv);
  range("E(-t) partition sum = sum (-1)^n e_n t^n", 0, cfg.partition_max, [&](int k) {
    return em[k] == symfun::elementary(k, nv).scaled(Rational(k % 2 == 0 ? 1 : -1));
  });
  auto hp = symfun::expand_H(cfg.partition_max, nv);
  range("H(t) partition sum = sum h_n t^n", 0, cfg.partition_max,
        [&](int k) { return hp[k] == symfun::complete(k, nv); });
  range("E(t)H(-t) = 1", 1, cfg.eh_order, [&](int k) { return symfun::eh_check(k, nv); });
  range("n h_n = sum p_r h_(n-r)", 1, cfg.newton_max, [&](int k) { return symfun::newton_h_check(k, nv); });
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"brackets",     "automorphism", "presentation", "highest-weight",
                                              "lemma-action", "garland",      "characters",   "symfun"};
  return names;
}

Report run_suite(const WeylModel& model, const std::string& suite, const SuiteOptions& opt) {
  const FockSpace& space = model.space();
  Report rep;
  if (suite == "brackets") return bracket_check(space, opt.slice);
  if (suite == "automorphism") return automorphism_check(space.algebra(), std::min(opt.slice.samples, 100), opt.slice.seed);
  if (suite == "presentation") return presentation_check(model, opt.slice);
  if (suite == "highest-weight") return highest_weight_check(model, opt.slice.emax);
  if (suite == "lemma-action") {
    int r = opt.rmax < 0 ? 6 : opt.rmax;
    rep = lemma_action_check(model, r, opt.kmax);
    rep.append(zhat_check(model, r, opt.kmax));
    return rep;
  }
  if (suite == "garland") {
    rep = garland_identity_check(model, opt.rmax < 0 ? 3 : opt.rmax);
    rep.append(garland_bridge_check(8));
    return rep;
  }
  if (suite == "characters") return character_check(model, opt.order, opt.window);
  if (suite == "symfun") return symfun_check();
  if (suite == "all") {
    for (const auto& s : suite_names()) rep.append(run_suite(model, s, opt));
    return rep;
  }
  throw InvalidArgument("unknown suite '" + suite + "'");
}

}  // namespace toroidal::weylmod
