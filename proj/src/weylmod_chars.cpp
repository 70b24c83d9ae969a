#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "toroidal/errors.hpp"
#include "toroidal/rootsys.hpp"
#include "toroidal/weylmod.hpp"

namespace toroidal::weylmod {

using series::Monomial;
using series::Series;
using series::Window;

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Enumerated:
      return "enumerated";
    case Provenance::ClosedForm:
      return "closed-form";
    case Provenance::Spanning:
      return "spanning";
  }
  return "unknown";
}

void CharTable::validate() const {
  for (const auto& [k, c] : series.terms()) {
    if (c < 0 || denominator64(c) != 1) {
      throw InvalidArgument("character table " + label + " has coefficient " + toroidal::to_string(c));
    }
  }
}

std::string CharTable::to_json() const {
  nlohmann::ordered_json j;
  j["table"] = label;
  j["provenance"] = to_string(provenance);
  j["series"] = nlohmann::ordered_json::parse(series.to_json());
  return j.dump();
}

std::string CharTable::to_csv() const {
  Series s = series.is_character() ? series.forget_weights() : series;
  std::ostringstream os;
  for (const auto& v : s.window().vars()) os << v << ",";
  os << "dim\n";
  for (const auto& [k, c] : s.terms()) {
    for (int e : k.exp) os << e << ",";
    os << toroidal::to_string(c) << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::string> loop_vars(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("q" + std::to_string(i));
  return v;
}

Window loop_window(int n, int emax, int deg) {
  std::vector<std::pair<int, int>> b{{0, emax}};
  for (int i = 2; i <= n; ++i) b.emplace_back(0, deg);
  return Window(loop_vars(n), b);
}

// Theta series of Q_fin over the box |beta_i| <= sqrt(2 emax (G^{-1})_ii),
// which contains every beta with (beta,beta)/2 <= emax.
Series theta_series(const FockSpace& space, const std::string& var, int emax) {
  const auto& rs = space.lattice().root_system();
  const int l = rs.rank;
  rootsys::RatMatrix g = rs.form;
  rootsys::RatMatrix inv(l, rootsys::RatVec(l, Rational(0)));
  for (int i = 0; i < l; ++i) inv[i][i] = Rational(1);
  for (int c = 0; c < l; ++c) {
    int p = c;
    while (g[p][c] == 0) ++p;
    std::swap(g[p], g[c]);
    std::swap(inv[p], inv[c]);
    Rational d = g[c][c];
    for (int j = 0; j < l; ++j) {
      g[c][j] /= d;
      inv[c][j] /= d;
    }
    for (int r = 0; r < l; ++r) {
      if (r == c || g[r][c] == 0) continue;
      Rational f = g[r][c];
      for (int j = 0; j < l; ++j) {
        g[r][j] -= f * g[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  IntVec bound(l);
  for (int i = 0; i < l; ++i) {
    Rational lim = inv[i][i] * 2 * emax;
    int b = 0;
    while (Rational((b + 1) * (b + 1)) <= lim) ++b;
    bound[i] = b;
  }
  Series out(Window({var}, {{0, emax}}), l);
  IntVec beta(l);
  std::function<void(int)> rec = [&](int i) {
    if (i == l) {
      int nrm = space.lattice().norm(beta);
      if (nrm <= 2 * emax) out.add_term({nrm / 2}, rootsys::to_fundamental(rs, beta), Rational(1));
      return;
    }
    for (int x = -bound[i]; x <= bound[i]; ++x) {
      beta[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

Series partition_power(const std::string& var, int k_power, int emax, int weight_rank) {
  std::vector<std::pair<Monomial, int>> gens;
  for (int k = 1; k <= emax; ++k) gens.emplace_back(Monomial{{var, k}}, k_power);
  return series::product_formula(gens, Window({var}, {{0, emax}}), weight_rank);
}

// Every multiset of generators t_1^{-m} t_i K_1 inside the window, one term each.
Series zhat_hilbert(int n, int emax, int deg, int weight_rank) {
  Window w = loop_window(n, emax, deg);
  Series out(w, weight_rank);
  IntVec exp(n, 0);
  IntVec zero(std::max(weight_rank, 0), 0);
  // Generators ordered by (i, m); choose counts greedily in that order.
  std::vector<std::pair<int, int>> gens;
  for (int i = 2; i <= n; ++i) {
    for (int m = 1; m <= emax; ++m) gens.emplace_back(i, m);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == gens.size()) {
      out.add_term(exp, zero, Rational(1));
      return;
    }
    auto [i, m] = gens[g];
    int c = 0;
    while (true) {
      rec(g + 1);
      if (exp[0] + m > emax || exp[i - 1] + 1 > deg) break;
      exp[0] += m;
      exp[i - 1] += 1;
      ++c;
    }
    exp[0] -= c * m;
    exp[i - 1] -= c;
  };
  rec(0);
  return out;
}

}  // namespace

CharTable l_zero_char(const FockSpace& space, int emax) {
  if (emax < 0) throw InvalidArgument("order must be nonnegative");
  const auto& rs = space.lattice().root_system();
  const int l = space.rank();
  Series s(Window({"q1"}, {{0, emax}}), l);
  std::vector<std::pair<int, int>> zero(space.nvars() - 1, {0, 0});
  for (const auto& b : space.enumerate_basis(emax, zero)) {
    bool finite = std::all_of(b.heis.begin(), b.heis.end(), [&](int c) { return fock::letter_gen(c) < l; });
    if (finite) s.add_term({b.energy}, rootsys::to_fundamental(rs, b.beta), Rational(1));
  }
  CharTable t{s, Provenance::Enumerated, "L0"};
  t.validate();
  return t;
}

CharTable l_zero_closed_form(const FockSpace& space, int emax) {
  if (emax < 0) throw InvalidArgument("order must be nonnegative");
  const int l = space.rank();
  Series s = theta_series(space, "q1", emax) * partition_power("q1", l, emax, l);
  CharTable t{s, Provenance::ClosedForm, "L0 theta closed form"};
  t.validate();
  return t;
}

CharTable spanning_character(const FockSpace& space, int emax, int deg) {
  if (deg < 0) throw InvalidArgument("degree window must be nonnegative");
  const int n = space.nvars();
  const int l = space.rank();
  Window w = loop_window(n, emax, deg);
  Series l0 = l_zero_char(space, emax).series.embedded(w);
  CharTable t{l0 * zhat_hilbert(n, emax, deg, l), Provenance::Spanning, "Wloc spanning"};
  t.validate();
  return t;
}

CharTable closed_form(const FockSpace& space, int emax, int deg, bool theta) {
  if (emax < 0 || deg < 0) throw InvalidArgument("order and degree window must be nonnegative");
  const int n = space.nvars();
  const int l = space.rank();
  Window w = loop_window(n, emax, deg);
  std::vector<std::pair<Monomial, int>> gens;
  for (int k = 1; k <= emax; ++k) gens.emplace_back(Monomial{{"q1", k}}, l);
  for (int m = 1; m <= emax; ++m) {
    for (int i = 2; i <= n; ++i) gens.emplace_back(Monomial{{"q1", m}, {"q" + std::to_string(i), 1}}, 1);
  }
  Series s = series::product_formula(gens, w, l);
  if (theta) s = theta_series(space, "q1", emax).embedded(w) * s;
  CharTable t{s, Provenance::ClosedForm, theta ? "Wloc closed form with theta" : "Wloc closed form"};
  t.validate();
  return t;
}

CharTable local_fock_character(const WeylModel& model, int emax, int deg) {
  const FockSpace& space = model.space();
  const int n = model.nvars();
  const int l = model.rank();
  const auto& rs = space.lattice().root_system();
  Window w = loop_window(n, emax, deg);
  Series s(w, l);
  IntVec a(n - 1, 0);
  auto betas = space.short_vectors(emax);
  while (true) {
    for (int e = 0; e <= emax; ++e) {
      for (const auto& beta : betas) {
        if (space.lattice().norm(beta) > 2 * e) continue;
        int dim = LocalQuotient(model, a, e, beta, false).rank() - LocalQuotient(model, a, e, beta, true).rank();
        if (dim == 0) continue;
        IntVec exp{e};
        exp.insert(exp.end(), a.begin(), a.end());
        s.add_term(exp, rootsys::to_fundamental(rs, beta), Rational(dim));
      }
    }
    std::size_t i = 0;
    while (i < a.size() && a[i] == deg) a[i++] = 0;
    if (i == a.size()) break;
    ++a[i];
  }
  CharTable t{s, Provenance::Enumerated, "Wloc Fock rank"};
  t.validate();
  return t;
}

CharTable fock_character(const FockSpace& space, int emax, const std::vector<std::pair<int, int>>& mwindow) {
  CharTable t{space.graded_character(emax, mwindow), Provenance::Enumerated, "V(0)"};
  t.validate();
  return t;
}

CharTable fock_slice_closed_form(const FockSpace& space, int emax) {
  const int l = space.rank();
  Series l0 = l_zero_char(space, emax).series.embedded(Window({"q"}, {{0, emax}}), {{"q1", "q"}});
  Series s = l0 * partition_power("q", space.nvars() - 1, emax, l);
  CharTable t{s, Provenance::ClosedForm, "L0 times delta partitions"};
  t.validate();
  return t;
}

CheckResult character_compare(const CharTable& a, const CharTable& b, const std::string& name) {
  const Series& x = a.series;
  const Series& y = b.series;
  if (x.window().vars() != y.window().vars()) throw WindowMismatch("character_compare: different variables");
  if (x.weight_rank() != y.weight_rank()) throw WindowMismatch("character_compare: different weight labels");
  Window common = x.window().intersect(y.window());
  CheckResult r{"characters", name, true, 0, ""};
  std::map<series::TermKey, std::pair<Rational, Rational>> all;
  for (const auto& [k, c] : x.terms()) {
    if (common.contains(k.exp)) all[k].first = c;
  }
  for (const auto& [k, c] : y.terms()) {
    if (common.contains(k.exp)) all[k].second = c;
  }
  for (const auto& [k, cs] : all) {
    ++r.checked;
    if (cs.first != cs.second) {
      std::ostringstream os;
      os << "first difference at exponent (";
      for (std::size_t i = 0; i < k.exp.size(); ++i) os << (i ? "," : "") << common.vars()[i] << "^" << k.exp[i];
      os << ") weight (";
      for (std::size_t i = 0; i < k.weight.size(); ++i) os << (i ? "," : "") << k.weight[i];
      os << "): " << a.label << " has " << toroidal::to_string(cs.first) << ", " << b.label << " has "
         << toroidal::to_string(cs.second);
      r.pass = false;
      r.detail = os.str();
      return r;
    }
  }
  r.detail = "equal on " + std::to_string(r.checked) + " coefficients (" + to_string(a.provenance) + " vs " +
             to_string(b.provenance) + ")";
  return r;
}

Report character_check(const WeylModel& model, int order, int deg) {
  const FockSpace& space = model.space();
  const int n = model.nvars();
  const int l = model.rank();
  Report rep;
  auto tag = [&](CheckResult r) {
    r.name = space.lattice().root_system().label() + " n=" + std::to_string(n) + ": " + r.name;
    rep.add(r);
  };
  CharTable l0 = l_zero_char(space, order);
  tag(character_compare(l0, l_zero_closed_form(space, order), "(a) ch L(Lambda_0) = theta * prod (1-q^k)^-l"));

  std::vector<std::pair<int, int>> mwin(n - 1, {-2, 2});
  CharTable fock = fock_character(space, order, mwin);
  CharTable predicted = fock_slice_closed_form(space, order);
  CheckResult slices{"characters", "(b) u-slices of V(0) = ch L(Lambda_0) prod (1-q^k)^-(n-1)", true, 0, ""};
  IntVec m(n - 1, -2);
  int nslices = 0;
  while (true) {
    Series s = fock.series;
    for (int i = 0; i < n - 1; ++i) s = s.slice("u" + std::to_string(i + 1), m[i]);
    CheckResult r = character_compare(CharTable{s, Provenance::Enumerated, "V(0) slice"}, predicted, slices.name);
    ++nslices;
    slices.checked += r.checked;
    if (!r.pass && slices.pass) {
      slices.pass = false;
      std::ostringstream os;
      os << "m-bar (";
      for (int i = 0; i < n - 1; ++i) os << (i ? "," : "") << m[i];
      os << "): " << r.detail;
      slices.detail = os.str();
    }
    int i = 0;
    while (i < n - 1 && m[i] == 2) m[i++] = -2;
    if (i == n - 1) break;
    ++m[i];
  }
  if (slices.pass) slices.detail = std::to_string(nslices) + " slices, " + std::to_string(slices.checked) + " coefficients";
  tag(slices);

  CharTable span = spanning_character(space, order, deg);
  tag(character_compare(span, closed_form(space, order, deg, true),
                        "(c) spanning = theta * prod (1-q1^k)^-l prod (1-q1^m q_i)^-1"));
  IntVec w0(l, 0);
  CharTable span0{span.series.weight_slice(w0), Provenance::Spanning, "Wloc spanning, weight 0"};
  CharTable closed0{closed_form(space, order, deg, false).series.weight_slice(w0), Provenance::ClosedForm,
                    "Wloc closed form"};
  tag(character_compare(span0, closed0, "(c) weight-zero part = prod (1-q1^k)^-l prod (1-q1^m q_i)^-1"));
  CharTable zero_slice{span.series, Provenance::Spanning, "Wloc spanning"};
  {
    Series s = span.series;
    for (int i = 2; i <= n; ++i) s = s.slice("q" + std::to_string(i), 0);
    tag(character_compare(CharTable{s, Provenance::Spanning, "Wloc spanning, degree 0"}, l0,
                          "degree-zero slice of the spanning series = ch L(Lambda_0)"));
  }
  tag(character_compare(local_fock_character(model, order, deg), span,
                        "local module dimensions in V = spanning series"));
  return rep;
}

}  // namespace toroidal::weylmod
