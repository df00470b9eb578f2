#pragma once

// Degrees one and two of the Orlik-Solomon algebra over Q.
//
// A^2 basis: for each lattice point p with incident lines j0 < j1 < ... the
// products e_{j0} e_{jt}, t >= 1.  Any other product e_i e_j (i < j, meeting
// at p) reduces by the relation d(e_{j0} e_i e_j) = 0:
//   e_i e_j = e_{j0} e_j - e_{j0} e_i.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mnet/arrangement.hpp"
#include "mnet/cyclo.hpp"
#include "mnet/errors.hpp"
#include "mnet/linalg.hpp"
#include "mnet/multinet.hpp"

namespace mnet {

using A1Vector = std::vector<Rational>;
using A2Vector = std::vector<Rational>;

class A2Basis {
 public:
  explicit A2Basis(const IncidenceLattice& lat) : line_count_(lat.line_count()) {
    for (const auto& p : lat.points()) {
      const std::size_t j0 = p.lines.front();
      for (std::size_t t = 1; t < p.lines.size(); ++t) {
        index_[{j0, p.lines[t]}] = pairs_.size();
        pairs_.emplace_back(j0, p.lines[t]);
      }
    }
    lat_ = &lat;
  }

  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }

  /// Adds coeff * e_i e_j (any i != j) to v.
  void accumulate(A2Vector& v, std::size_t i, std::size_t j, const Rational& coeff) const {
    if (coeff == 0) return;
    Rational c = coeff;
    if (i > j) {
      std::swap(i, j);
      c = -c;
    }
    const std::size_t j0 = lat_->point(lat_->meet_index(i, j)).lines.front();
    if (i == j0) {
      v[index_.at({j0, j})] += c;
    } else {
      v[index_.at({j0, j})] += c;
      v[index_.at({j0, i})] -= c;
    }
  }

  std::size_t line_count() const noexcept { return line_count_; }

 private:
  std::size_t line_count_;
  const IncidenceLattice* lat_ = nullptr;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

inline A2Vector wedge(const A1Vector& a, const A1Vector& b, const A2Basis& basis) {
  const std::size_t n = basis.line_count();
  if (a.size() != n || b.size() != n) throw InvalidInput("degree-one vector has the wrong length");
  A2Vector out(basis.size(), Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) basis.accumulate(out, i, j, a[i] * b[j] - a[j] * b[i]);
  return out;
}

inline A2Vector wedge(const A1Vector& a, const A1Vector& b, const IncidenceLattice& lat) {
  return wedge(a, b, A2Basis(lat));
}

inline bool is_zero(const A2Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// True iff all pairwise wedges vanish.
inline bool isotropic_check(const std::vector<A1Vector>& vectors, const IncidenceLattice& lat) {
  const A2Basis basis(lat);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (!is_zero(wedge(vectors[i], vectors[j], basis))) return false;
  return true;
}

/// u_i - u_1 for i = 2..k with u_i = sum over class i of m(l) w_l.
inline std::vector<A1Vector> resonance_from_multinet(const WeakMultinet& mn, const IncidenceLattice& lat) {
  const std::size_t n = lat.line_count();
  if (mn.multiplicity.size() != n) throw InvalidInput("multinet does not match the lattice");
  std::vector<A1Vector> u;
  for (const auto& c : mn.classes) {
    A1Vector v(n, Rational(0));
    for (std::size_t l : c) v[l] = mn.multiplicity[l];
    u.push_back(std::move(v));
  }
  std::vector<A1Vector> out;
  for (std::size_t i = 1; i < u.size(); ++i) {
    A1Vector v(n);
    for (std::size_t l = 0; l < n; ++l) v[l] = u[i][l] - u[0][l];
    out.push_back(std::move(v));
  }
  return out;
}

/// Dimension of the span of degree-one vectors.
inline std::size_t span_dimension(const std::vector<A1Vector>& vectors) {
  if (vectors.empty()) return 0;
  QMatrix m(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
  return rank(m);
}

}  // namespace mnet
