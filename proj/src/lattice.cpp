#include "toroidal/lattice.hpp"

#include "toroidal/errors.hpp"

namespace toroidal::fock {

Lattice::Lattice(RootSystem rs, int n) : rs_(std::move(rs)), n_(n) {
  if (!rootsys::is_simply_laced(rs_)) {
    throw NotSimplyLaced("vertex operator construction needs a type A, D or E root system, got " + rs_.label());
  }
  if (n_ < 2) throw InvalidArgument("number of loop variables must be at least 2");
  gram_.assign(rs_.rank, IntVec(rs_.rank));
  for (int i = 0; i < rs_.rank; ++i) {
    for (int j = 0; j < rs_.rank; ++j) gram_[i][j] = static_cast<int>(numerator64(rs_.form[i][j]));
  }
}

int Lattice::fin(const IntVec& x, const IntVec& y) const {
  int s = 0;
  for (int i = 0; i < rs_.rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rs_.rank; ++j) s += x[i] * gram_[i][j] * y[j];
  }
  return s;
}

int Lattice::gen_pair(int g, int h) const {
  if (g < rs_.rank && h < rs_.rank) return gram_[g][h];
  return 0;
}

int Lattice::pair(const LatticeVector& x, const LatticeVector& y) const {
  int s = fin(x.beta, y.beta);
  for (std::size_t i = 0; i < x.delta.size() && i < y.d.size(); ++i) s += x.delta[i] * y.d[i];
  for (std::size_t i = 0; i < x.d.size() && i < y.delta.size(); ++i) s += x.d[i] * y.delta[i];
  return s;
}

LatticeVector Lattice::make(IntVec beta, IntVec delta, IntVec d) const {
  if (static_cast<int>(beta.size()) != rs_.rank) throw InvalidArgument("lattice vector: wrong finite rank");
  if (delta.empty()) delta.assign(n_ - 1, 0);
  if (d.empty()) d.assign(n_ - 1, 0);
  if (static_cast<int>(delta.size()) != n_ - 1 || static_cast<int>(d.size()) != n_ - 1) {
    throw InvalidArgument("lattice vector: wrong delta/d length");
  }
  return LatticeVector{std::move(beta), std::move(delta), std::move(d)};
}

Cocycle::Cocycle(const Lattice& lat) {
  int l = lat.rank();
  table_.assign(l, IntVec(l, 1));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < i; ++j) {
      IntVec ei(l, 0), ej(l, 0);
      ei[i] = 1;
      ej[j] = 1;
      table_[i][j] = lat.fin(ei, ej) % 2 == 0 ? 1 : -1;
    }
  }
}

int Cocycle::eval(const IntVec& a, const IntVec& b) const {
  int parity = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] % 2 == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] % 2 != 0 && table_[i][j] < 0) parity ^= 1;
    }
  }
  return parity ? -1 : 1;
}

}  // namespace toroidal::fock
