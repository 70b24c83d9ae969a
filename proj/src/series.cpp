#include "toroidal/series.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "toroidal/errors.hpp"

namespace toroidal::series {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "]";
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

void Monomial::prune() {
  for (auto it = exponents.begin(); it != exponents.end();) {
    it = it->second == 0 ? exponents.erase(it) : std::next(it);
  }
}

Window::Window(std::vector<std::string> vars, std::vector<std::pair<int, int>> bounds)
    : vars_(std::move(vars)), bounds_(std::move(bounds)) {
  if (vars_.size() != bounds_.size()) throw InvalidArgument("window: variable and bound counts differ");
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw InvalidArgument("window: duplicate variable");
}

Window Window::box(const std::vector<std::string>& vars, int lo, int hi) {
  return Window(vars, std::vector<std::pair<int, int>>(vars.size(), {lo, hi}));
}

int Window::index_of(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool Window::contains(const std::vector<int>& exp) const {
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] < bounds_[i].first || exp[i] > bounds_[i].second) return false;
  }
  return true;
}

Window Window::intersect(const Window& other) const {
  std::vector<std::pair<int, int>> b = bounds_;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    int j = other.index_of(vars_[i]);
    if (j < 0 || other.size() != size()) {
      throw WindowMismatch("variable sets differ: " + join(vars_) + " vs " + join(other.vars_));
    }
    b[i].first = std::max(b[i].first, other.bounds_[j].first);
    b[i].second = std::min(b[i].second, other.bounds_[j].second);
  }
  return Window(vars_, b);
}

std::vector<int> Window::to_exponents(const Monomial& m) const {
  std::vector<int> e(vars_.size(), 0);
  for (const auto& [var, k] : m.exponents) {
    int i = index_of(var);
    if (i < 0) throw WindowMismatch("variable " + var + " not in window " + join(vars_));
    e[i] = k;
  }
  return e;
}

Series Series::one(Window window, int weight_rank) {
  Series s(std::move(window), weight_rank);
  s.accumulate(std::vector<int>(s.window_.size(), 0), std::vector<int>(std::max(weight_rank, 0), 0), Rational(1));
  return s;
}

void Series::add_term(const std::vector<int>& exp, const std::vector<int>& weight, const Rational& c) {
  if (!window_.contains(exp)) throw OutOfWindow("term outside truncation window");
  accumulate(exp, weight, c);
}

void Series::add_term(const Monomial& m, const Rational& c) {
  std::vector<int> w;
  if (is_character()) w = m.weight.value_or(std::vector<int>(weight_rank_, 0));
  add_term(window_.to_exponents(m), w, c);
}

void Series::accumulate(const std::vector<int>& exp, const std::vector<int>& weight, const Rational& c) {
  if (c == 0 || !window_.contains(exp)) return;
  if (static_cast<int>(weight.size()) != std::max(weight_rank_, 0)) {
    throw InvalidArgument("weight label length does not match series");
  }
  auto [it, inserted] = terms_.try_emplace(TermKey{exp, weight}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Series::coeff(const Monomial& m) const {
  std::vector<int> e = window_.to_exponents(m);
  std::vector<int> w;
  if (is_character()) w = m.weight.value_or(std::vector<int>(weight_rank_, 0));
  return coeff(e, w);
}

Rational Series::coeff(const std::vector<int>& exp, const std::vector<int>& weight) const {
  if (!window_.contains(exp)) throw OutOfWindow("coefficient requested outside truncation window");
  auto it = terms_.find(TermKey{exp, weight});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::check_compatible(const Series& o, const char* op) const {
  std::set<std::string> a(window_.vars().begin(), window_.vars().end());
  std::set<std::string> b(o.window_.vars().begin(), o.window_.vars().end());
  if (a != b) {
    throw WindowMismatch(std::string(op) + ": variable sets differ: " + join(window_.vars()) + " vs " +
                         join(o.window_.vars()));
  }
  if (weight_rank_ != o.weight_rank_) throw WindowMismatch(std::string(op) + ": weight label layouts differ");
}

Series Series::realigned(const Window& target) const {
  if (target.vars() == window_.vars()) return *this;
  std::vector<int> perm(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) perm[i] = window_.index_of(target.vars()[i]);
  Series out(Window(target.vars(), [&] {
               std::vector<std::pair<int, int>> b(target.size());
               for (std::size_t i = 0; i < target.size(); ++i) b[i] = window_.bounds()[perm[i]];
               return b;
             }()),
             weight_rank_);
  for (const auto& [k, c] : terms_) {
    std::vector<int> e(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) e[i] = k.exp[perm[i]];
    out.terms_.emplace(TermKey{e, k.weight}, c);
  }
  return out;
}

Series Series::operator+(const Series& o) const {
  check_compatible(o, "add");
  Series out(window_.intersect(o.window_), weight_rank_);
  for (const auto& [k, c] : terms_) out.accumulate(k.exp, k.weight, c);
  for (const auto& [k, c] : o.realigned(window_).terms_) out.accumulate(k.exp, k.weight, c);
  return out;
}

Series Series::operator-(const Series& o) const { return *this + o.scaled(Rational(-1)); }

Series Series::scaled(const Rational& c) const {
  Series out(window_, weight_rank_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

Series Series::operator*(const Series& o) const {
  check_compatible(o, "mul");
  Series b = o.realigned(window_);
  Series out(window_.intersect(b.window_), weight_rank_);
  std::vector<int> e(window_.size());
  std::vector<int> w(std::max(weight_rank_, 0));
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ka.exp[i] + kb.exp[i];
      if (!out.window_.contains(e)) continue;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = ka.weight[i] + kb.weight[i];
      out.accumulate(e, w, ca * cb);
    }
  }
  return out;
}

bool Series::operator==(const Series& o) const {
  std::set<std::string> a(window_.vars().begin(), window_.vars().end());
  std::set<std::string> b(o.window_.vars().begin(), o.window_.vars().end());
  if (a != b || weight_rank_ != o.weight_rank_) return false;
  Series r = o.realigned(window_);
  return r.window_ == window_ && r.terms_ == terms_;
}

Series Series::forget_weights() const {
  Series out(window_, -1);
  for (const auto& [k, c] : terms_) out.accumulate(k.exp, {}, c);
  return out;
}

Series Series::weight_slice(const std::vector<int>& weight) const {
  Series out(window_, -1);
  for (const auto& [k, c] : terms_) {
    if (k.weight == weight) out.accumulate(k.exp, {}, c);
  }
  return out;
}

Series Series::slice(const std::string& var, int value) const {
  int idx = window_.index_of(var);
  if (idx < 0) throw WindowMismatch("slice: variable " + var + " not in " + join(window_.vars()));
  std::vector<std::string> vars;
  std::vector<std::pair<int, int>> bounds;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (static_cast<int>(i) == idx) continue;
    vars.push_back(window_.vars()[i]);
    bounds.push_back(window_.bounds()[i]);
  }
  Series out(Window(vars, bounds), weight_rank_);
  for (const auto& [k, c] : terms_) {
    if (k.exp[idx] != value) continue;
    std::vector<int> e;
    for (std::size_t i = 0; i < k.exp.size(); ++i) {
      if (static_cast<int>(i) != idx) e.push_back(k.exp[i]);
    }
    out.accumulate(e, k.weight, c);
  }
  return out;
}

Series Series::embedded(const Window& target, const std::map<std::string, std::string>& rename) const {
  std::vector<int> pos(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) {
    auto it = rename.find(window_.vars()[i]);
    const std::string& name = it == rename.end() ? window_.vars()[i] : it->second;
    pos[i] = target.index_of(name);
    if (pos[i] < 0) throw WindowMismatch("embed: variable " + name + " not in " + join(target.vars()));
  }
  Series out(target, weight_rank_);
  for (const auto& [k, c] : terms_) {
    std::vector<int> e(target.size(), 0);
    for (std::size_t i = 0; i < pos.size(); ++i) e[pos[i]] = k.exp[i];
    out.accumulate(e, k.weight, c);
  }
  return out;
}

std::string Series::to_json() const {
  nlohmann::ordered_json j;
  j["variables"] = window_.vars();
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < window_.size(); ++i) {
    w[window_.vars()[i]] = {window_.bounds()[i].first, window_.bounds()[i].second};
  }
  j["window"] = w;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [k, c] : terms_) {
    nlohmann::ordered_json t;
    if (is_character()) {
      t["weight"] = k.weight;
    } else {
      t["weight"] = nullptr;
    }
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < k.exp.size(); ++i) {
      if (k.exp[i] != 0) e[window_.vars()[i]] = k.exp[i];
    }
    t["exp"] = e;
    t["num"] = numerator64(c);
    t["den"] = denominator64(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump();
}

Series series_mul(const Series& a, const Series& b) { return a * b; }

Rational coeff(const Series& s, const Monomial& m) { return s.coeff(m); }

Series geom_inverse(const Monomial& g, const Window& window, int weight_rank) {
  std::vector<int> e = window.to_exponents(g);
  std::vector<int> w;
  if (weight_rank >= 0) {
    w = g.weight.value_or(std::vector<int>(weight_rank, 0));
    if (static_cast<int>(w.size()) != weight_rank) throw InvalidArgument("geom_inverse: weight length mismatch");
  } else if (g.weight) {
    throw InvalidArgument("geom_inverse: weighted generator in a plain series");
  }
  int kmax = std::numeric_limits<int>::max();
  bool bounded = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) {
      bounded = true;
      kmax = std::min(kmax, floor_div(window.bounds()[i].second, e[i]));
    }
  }
  if (!bounded) throw Divergence("geom_inverse: generator has no positive exponent, expansion does not terminate");
  Series out(window, weight_rank);
  std::vector<int> ek(e.size());
  std::vector<int> wk(w.size());
  for (int k = 0; k <= kmax; ++k) {
    for (std::size_t i = 0; i < e.size(); ++i) ek[i] = k * e[i];
    for (std::size_t i = 0; i < w.size(); ++i) wk[i] = k * w[i];
    out.accumulate(ek, wk, Rational(1));
  }
  return out;
}

Series product_formula(const std::vector<std::pair<Monomial, int>>& generators, const Window& window,
                       int weight_rank) {
  Series out = Series::one(window, weight_rank);
  for (const auto& [g, mult] : generators) {
    if (mult >= 0) {
      Series f = geom_inverse(g, window, weight_rank);
      for (int i = 0; i < mult; ++i) out = out * f;
    } else {
      Series f = Series::one(window, weight_rank);
      std::vector<int> w = weight_rank >= 0 ? g.weight.value_or(std::vector<int>(weight_rank, 0)) : std::vector<int>{};
      f.accumulate(window.to_exponents(g), w, Rational(-1));
      for (int i = 0; i < -mult; ++i) out = out * f;
    }
  }
  return out;
}

}  // namespace toroidal::series
