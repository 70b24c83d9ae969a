#include "toroidal/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "toroidal/errors.hpp"

namespace toroidal::rootsys {

namespace {

IntMatrix chain(int l) {
  IntMatrix c(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i) {
    c[i][i] = 2;
    if (i + 1 < l) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

void link(IntMatrix& c, int i, int j) { c[i][j] = c[j][i] = -1; }

IntMatrix cartan_matrix(char type, int l) {
  auto bad = [&] { return InvalidArgument("invalid root system type/rank: " + std::string(1, type) + std::to_string(l)); };
  switch (type) {
    case 'A':
      if (l < 1) throw bad();
      return chain(l);
    case 'B': {
      if (l < 2) throw bad();
      IntMatrix c = chain(l);
      c[l - 2][l - 1] = -2;  // a_l short
      return c;
    }
    case 'C': {
      if (l < 2) throw bad();
      IntMatrix c = chain(l);
      c[l - 1][l - 2] = -2;  // a_l long
      return c;
    }
    case 'D': {
      if (l < 4) throw bad();
      IntMatrix c = chain(l);
      c[l - 2][l - 1] = c[l - 1][l - 2] = 0;
      link(c, l - 3, l - 1);
      return c;
    }
    case 'E': {
      if (l < 6 || l > 8) throw bad();
      IntMatrix c(l, IntVec(l, 0));
      for (int i = 0; i < l; ++i) c[i][i] = 2;
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < l; ++i) link(c, i, i + 1);
      return c;
    }
    case 'F': {
      if (l != 4) throw bad();
      IntMatrix c = chain(4);
      c[1][2] = -2;  // a_2 long, a_3 short
      return c;
    }
    case 'G': {
      if (l != 2) throw bad();
      IntMatrix c = chain(2);
      c[1][0] = -3;  // a_1 short, a_2 long
      return c;
    }
    default:
      throw bad();
  }
}

// <beta, a_i^vee> from Cartan data alone.
int coroot_pairing(const IntMatrix& c, const IntVec& beta, int i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * c[j][i];
  return s;
}

}  // namespace

std::vector<IntVec> RootSystem::roots() const {
  std::vector<IntVec> out = positive_roots;
  for (const IntVec& r : positive_roots) {
    IntVec neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    out.push_back(neg);
  }
  return out;
}

int RootSystem::root_index(const IntVec& r) const {
  if (static_cast<int>(r.size()) != rank) return -1;
  bool pos = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
  bool neg = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
  if (!pos && !neg) return -1;
  IntVec key = r;
  if (neg) {
    for (int& x : key) x = -x;
  }
  auto it = std::find(positive_roots.begin(), positive_roots.end(), key);
  if (it == positive_roots.end()) return -1;
  int idx = static_cast<int>(it - positive_roots.begin());
  return pos ? idx : idx + static_cast<int>(positive_roots.size());
}

int height(const IntVec& root) { return std::accumulate(root.begin(), root.end(), 0); }

RootSystem build_root_system(char type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);
  const IntMatrix& c = rs.cartan;

  std::set<IntVec> all;
  std::deque<IntVec> queue;
  for (int i = 0; i < rank; ++i) {
    IntVec e(rank, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      IntVec img = beta;
      img[i] -= coroot_pairing(c, beta, i);
      if (all.insert(img).second) queue.push_back(img);
    }
  }
  for (const IntVec& r : all) {
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) rs.positive_roots.push_back(r);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const IntVec& a, const IntVec& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  rs.theta = rs.positive_roots.back();

  // Relative squared lengths from c[i][j]|a_j|^2 = c[j][i]|a_i|^2 along the diagram.
  std::vector<Rational> len(rank, Rational(0));
  len[0] = 1;
  std::deque<int> bfs{0};
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop_front();
    for (int j = 0; j < rank; ++j) {
      if (j == i || c[i][j] == 0 || len[j] != 0) continue;
      len[j] = len[i] * Rational(c[j][i]) / Rational(c[i][j]);
      bfs.push_back(j);
    }
  }
  rs.form.assign(rank, RatVec(rank, Rational(0)));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) rs.form[i][j] = Rational(c[i][j]) * len[j] / 2;
  }
  Rational tt = bilinear(rs, rs.theta, rs.theta);
  Rational scale = Rational(2) / tt;
  for (auto& row : rs.form) {
    for (auto& x : row) x *= scale;
  }
  return rs;
}

std::vector<std::pair<char, int>> all_types_up_to(int max_rank) {
  std::vector<std::pair<char, int>> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back({'A', l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({'B', l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({'C', l});
  for (int l = 4; l <= max_rank; ++l) out.push_back({'D', l});
  for (int l = 6; l <= std::min(8, max_rank); ++l) out.push_back({'E', l});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

Rational bilinear(const RootSystem& rs, const RatVec& x, const RatVec& y) {
  if (static_cast<int>(x.size()) != rs.rank || static_cast<int>(y.size()) != rs.rank) {
    throw InvalidArgument("bilinear: dimension mismatch");
  }
  Rational s(0);
  for (int i = 0; i < rs.rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) {
      if (y[j] != 0) s += x[i] * rs.form[i][j] * y[j];
    }
  }
  return s;
}

Rational bilinear(const RootSystem& rs, const IntVec& x, const IntVec& y) {
  RatVec a(x.begin(), x.end()), b(y.begin(), y.end());
  return bilinear(rs, a, b);
}

int pairing(const RootSystem& rs, const IntVec& x, const IntVec& y) {
  int s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) s += x[i] * y[j] * static_cast<int>(numerator64(rs.form[i][j]));
  }
  return s;
}

bool is_simply_laced(const RootSystem& rs) {
  for (int i = 0; i < rs.rank; ++i) {
    if (rs.form[i][i] != 2) return false;
  }
  return true;
}

IntVec to_fundamental(const RootSystem& rs, const IntVec& root_coords) {
  IntVec out(rs.rank);
  for (int i = 0; i < rs.rank; ++i) out[i] = coroot_pairing(rs.cartan, root_coords, i);
  return out;
}

RatVec to_root_coords(const RootSystem& rs, const Weight& w) {
  // Solve sum_j c_j cartan[j][i] = w_i by exact Gaussian elimination on the transpose.
  int l = rs.rank;
  if (static_cast<int>(w.fundamental.size()) != l) throw InvalidArgument("weight: dimension mismatch");
  RatMatrix m(l, RatVec(l + 1));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = rs.cartan[j][i];
    m[i][l] = w.fundamental[i];
  }
  for (int col = 0; col < l; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < l; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int k = col; k <= l; ++k) m[r][k] -= f * m[col][k];
    }
  }
  RatVec out(l);
  for (int i = 0; i < l; ++i) out[i] = m[i][l] / m[i][i];
  return out;
}

}  // namespace toroidal::rootsys
