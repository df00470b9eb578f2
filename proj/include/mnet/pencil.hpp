#pragma once

// Completely reducible fibers as exact coefficient vectors of ternary forms,
// and the check that all class fibers lie on one pencil.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mnet/arrangement.hpp"
#include "mnet/cyclo.hpp"
#include "mnet/errors.hpp"
#include "mnet/multinet.hpp"

namespace mnet {

/// Homogeneous form of degree d; coefficient i belongs to the i-th monomial
/// x^a y^b z^c in graded-lex order with x > y > z.
class CurveVec {
 public:
  explicit CurveVec(unsigned degree = 0)
      : degree_(degree), coeffs_(monomial_count(degree), Cyclo(0L)) {}

  static std::size_t monomial_count(unsigned d) { return std::size_t{d + 1} * (d + 2) / 2; }

  static std::size_t monomial_index(unsigned d, unsigned a, unsigned b) {
    const std::size_t s = d - a;
    return s * (s + 1) / 2 + (s - b);
  }

  /// Exponents (a, b, c) of the monomial at idx.
  static std::array<unsigned, 3> monomial(unsigned d, std::size_t idx) {
    std::size_t s = 0;
    while ((s + 1) * (s + 2) / 2 <= idx) ++s;
    const auto b = static_cast<unsigned>(s - (idx - s * (s + 1) / 2));
    const auto a = static_cast<unsigned>(d - s);
    return {a, b, d - a - b};
  }

  static CurveVec constant(const Cyclo& c) {
    CurveVec v(0);
    v.coeffs_[0] = c;
    return v;
  }

  unsigned degree() const noexcept { return degree_; }
  const std::vector<Cyclo>& coeffs() const noexcept { return coeffs_; }
  const Cyclo& coeff(unsigned a, unsigned b) const { return coeffs_[monomial_index(degree_, a, b)]; }

  /// Product with the linear form l[0] x + l[1] y + l[2] z.
  CurveVec times(const Triple& l) const {
    CurveVec out(degree_ + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      const auto [a, b, c] = monomial(degree_, i);
      out.coeffs_[monomial_index(degree_ + 1, a + 1, b)] += coeffs_[i] * l[0];
      out.coeffs_[monomial_index(degree_ + 1, a, b + 1)] += coeffs_[i] * l[1];
      out.coeffs_[monomial_index(degree_ + 1, a, b)] += coeffs_[i] * l[2];
      (void)c;
    }
    return out;
  }

  Cyclo evaluate(const Triple& p) const {
    Cyclo total(0L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      const auto [a, b, c] = monomial(degree_, i);
      Cyclo term = coeffs_[i];
      for (unsigned k = 0; k < a; ++k) term *= p[0];
      for (unsigned k = 0; k < b; ++k) term *= p[1];
      for (unsigned k = 0; k < c; ++k) term *= p[2];
      total += term;
    }
    return total;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Cyclo& c) { return c.is_zero(); });
  }

  /// First nonzero coefficient (zero for the zero form).
  Cyclo leading() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return c;
    return Cyclo(0L);
  }

  CurveVec normalized() const {
    const Cyclo lead = leading();
    if (lead.is_zero()) throw InvalidInput("cannot normalize the zero form");
    return scaled(inv(lead));
  }

  CurveVec scaled(const Cyclo& s) const {
    CurveVec out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
  }

  friend CurveVec operator+(const CurveVec& a, const CurveVec& b) {
    if (a.degree_ != b.degree_) throw DegreeMismatch("adding forms of different degrees");
    CurveVec out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
  }
  friend CurveVec operator-(const CurveVec& a, const CurveVec& b) { return a + b.scaled(Cyclo(-1L)); }
  friend bool operator==(const CurveVec& a, const CurveVec& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  /// Polynomial text such as "x^2*z^2 - y^2*z^2".  Non-rational coefficients
  /// are bracketed and write the root of unity as `w`.
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Cyclo& c = coeffs_[i];
      if (c.is_zero()) continue;
      const auto [a, b, e] = monomial(degree_, i);
      std::string mono;
      auto var = [&mono](const char* v, unsigned k) {
        if (k == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (k > 1) mono += "^" + std::to_string(k);
      };
      var("x", a);
      var("y", b);
      var("z", e);
      std::string coef;
      bool negative = false;
      if (auto q = c.as_rational()) {
        negative = *q < 0;
        const Rational mag = negative ? Rational(-*q) : *q;
        if (mag != 1 || mono.empty()) coef = mag.get_str();
      } else {
        std::string s = c.str();
        std::replace(s.begin(), s.end(), 'z', 'w');
        coef = "(" + s + ")";
      }
      std::string term = coef;
      if (!coef.empty() && !mono.empty()) term += "*";
      term += mono;
      if (out.empty())
        out = (negative ? "-" : "") + term;
      else
        out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  unsigned degree_;
  std::vector<Cyclo> coeffs_;
};

/// prod over the class of alpha_l^m(l).
inline CurveVec expand_class(const MultiArrangement& arr, const std::vector<std::size_t>& lines,
                             const std::vector<long>& multiplicity) {
  const auto& ls = arr.lines();  // throws for abstract arrangements
  CurveVec f = CurveVec::constant(Cyclo(1L));
  for (std::size_t l : lines) {
    if (l >= ls.size()) throw InvalidInput("class refers to an unknown line");
    for (long t = 0; t < multiplicity.at(l); ++t) f = f.times(ls[l].coeffs());
  }
  return f;
}

/// C_fiber = a * C_1 + b * C_2 (indices into the fiber list, 0-based).
struct PencilRelation {
  std::size_t fiber;
  Cyclo a;
  Cyclo b;
};

struct CollinearResult {
  bool independent = false;  // C_1, C_2 span a pencil
  bool collinear = false;
  std::vector<PencilRelation> relations;
  std::size_t first_outside = 0;  // first fiber off the pencil when !collinear
};

/// Whether every fiber lies in span(C_1, C_2).  Fibers are normalized to a
/// leading coefficient 1 for the solve; the recorded scalars refer to the
/// fibers as given.
inline CollinearResult collinear(const std::vector<CurveVec>& fibers) {
  if (fibers.size() < 3) throw InvalidInput("a pencil check needs at least three fibers");
  for (const auto& f : fibers) {
    if (f.degree() != fibers.front().degree()) throw DegreeMismatch("fibers have different degrees");
    if (f.is_zero()) throw InvalidInput("zero fiber");
  }
  std::vector<CurveVec> nf;
  std::vector<Cyclo> lead;
  for (const auto& f : fibers) {
    lead.push_back(f.leading());
    nf.push_back(f.normalized());
  }
  CollinearResult r;
  const auto& c1 = nf[0].coeffs();
  const auto& c2 = nf[1].coeffs();
  const std::size_t N = c1.size();
  std::size_t p = N, q = N;
  Cyclo det;
  for (std::size_t i = 0; i < N && p == N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      det = c1[i] * c2[j] - c1[j] * c2[i];
      if (!det.is_zero()) {
        p = i;
        q = j;
        break;
      }
    }
  if (p == N) {
    r.first_outside = 1;
    return r;
  }
  r.independent = true;
  r.collinear = true;
  const Cyclo inv_det = inv(det);
  for (std::size_t k = 2; k < nf.size(); ++k) {
    const auto& ck = nf[k].coeffs();
    const Cyclo a = (ck[p] * c2[q] - ck[q] * c2[p]) * inv_det;
    const Cyclo b = (c1[p] * ck[q] - c1[q] * ck[p]) * inv_det;
    bool on = true;
    for (std::size_t i = 0; i < N && on; ++i) on = (a * c1[i] + b * c2[i] == ck[i]);
    if (!on) {
      if (r.collinear) r.first_outside = k;
      r.collinear = false;
      continue;
    }
    r.relations.push_back({k, a * lead[k] * inv(lead[0]), b * lead[k] * inv(lead[1])});
  }
  if (!r.collinear) r.relations.clear();
  return r;
}

/// n_p for every base point, read from each class; throws if classes disagree.
inline std::map<std::size_t, long> base_weights(const WeakMultinet& mn, const IncidenceLattice& lat) {
  std::map<std::size_t, long> out;
  for (std::size_t p : mn.base) {
    long np = -1;
    for (std::size_t i = 0; i < mn.k(); ++i) {
      const long s = detail::class_weight(mn, lat, i, p);
      if (np >= 0 && s != np)
        throw InvalidInput("classes disagree on the weight of " + lat.point(p).str());
      np = s;
    }
    out[p] = np;
  }
  return out;
}

struct PencilReport {
  std::vector<CurveVec> fibers;
  std::vector<PencilRelation> relations;
  bool collinear = false;
  bool connected = false;
  bool vanishes_on_base = false;
  std::string verdict;

  bool realized() const noexcept { return collinear && connected && vanishes_on_base; }
};

inline PencilReport ceva_verdict(const WeakMultinet& mn, const MultiArrangement& arr,
                                 const IncidenceLattice& lat) {
  PencilReport rep;
  for (const auto& c : mn.classes) rep.fibers.push_back(expand_class(arr, c, mn.multiplicity));
  const auto col = collinear(rep.fibers);
  rep.collinear = col.collinear;
  rep.relations = col.relations;
  rep.connected = verify(mn, lat).passed("connectivity");
  rep.vanishes_on_base = true;
  for (std::size_t p : mn.base) {
    const auto& pt = lat.point(p).coords;
    if (!pt) throw AbstractArrangement();
    for (const auto& f : rep.fibers)
      if (!f.evaluate(pt->coords()).is_zero()) rep.vanishes_on_base = false;
  }
  if (rep.realized())
    rep.verdict = "Ceva pencil realized";
  else if (!col.independent)
    rep.verdict = "first two fibers are proportional";
  else if (!rep.collinear)
    rep.verdict = "fiber " + std::to_string(col.first_outside + 1) + " is not in the pencil of fibers 1 and 2";
  else if (!rep.vanishes_on_base)
    rep.verdict = "a fiber misses a base point";
  else
    rep.verdict = "pencil is not connected";
  return rep;
}

}  // namespace mnet
