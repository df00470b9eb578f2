#pragma once

// Numeric criteria for a multinet: the Riemann-Hurwitz type count, the local
// test at base points, transversality of extra lines, and the rank-two
// Hurwitz identity.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "mnet/arrangement.hpp"
#include "mnet/errors.hpp"
#include "mnet/multinet.hpp"

namespace mnet {

/// 2n - 2 = sum (m_p - 1) for a degree-n pencil on P^1 with the given
/// ramification profile.
inline bool rank2_hurwitz(long n, const std::vector<long>& multiplicities) {
  long s = 0;
  for (long m : multiplicities) s += m - 1;
  return 2 * n - 2 == s;
}

struct RHReport {
  long lhs = 0;            // 3 + |X|
  long rhs = 0;            // raw right-hand side
  long rhs_rewritten = 0;  // (k-2)(sum n_p - 3d) + 2|L| - sum over X-bar (m_p - 1)
  long deficit = 0;        // lhs - rhs
  long fiber_euler = 0;    // 3d - d^2 + sum (n_p^2 - n_p)
  std::vector<long> class_euler;
  bool complete = false;
};

inline RHReport euler_sides(const WeakMultinet& mn, const IncidenceLattice& lat) {
  RHReport r;
  const long k = static_cast<long>(mn.k());
  const long d = mn.degree;
  long sum_np = 0, sum_np2 = 0;
  for (std::size_t p : mn.base) {
    const long np = mn.weights.at(p);
    sum_np += np;
    sum_np2 += np * np;
  }
  long outside = 0;
  std::vector<char> in_x(lat.size(), 0);
  for (std::size_t p : mn.base) in_x[p] = 1;
  for (std::size_t p = 0; p < lat.size(); ++p)
    if (!in_x[p]) outside += static_cast<long>(lat.point(p).multiplicity()) - 1;
  const long L = static_cast<long>(lat.line_count());

  r.lhs = 3 + static_cast<long>(mn.base.size());
  r.fiber_euler = 3 * d - d * d + (sum_np2 - sum_np);
  r.rhs = (2 - k) * r.fiber_euler + 2 * L - outside;
  r.rhs_rewritten = (k - 2) * (sum_np - 3 * d) + 2 * L - outside;
  r.deficit = r.lhs - r.rhs;
  r.complete = r.deficit == 0;
  for (const auto& c : mn.classes) {
    std::set<std::size_t> pts;
    for (std::size_t l : c)
      for (std::size_t p : lat.points_on(l))
        if (!in_x[p]) pts.insert(p);
    long e = 2 * static_cast<long>(c.size());
    for (std::size_t p : pts) e -= static_cast<long>(lat.point(p).multiplicity()) - 1;
    r.class_euler.push_back(e);
  }
  return r;
}

struct LocalTestEntry {
  std::size_t point;
  long weight;  // n_p
  long lhs;     // 2 n_p - 2
  long rhs;     // sum over all lines through p of (m - 1)
  bool passed;
};

struct LocalTestReport {
  std::vector<LocalTestEntry> entries;

  bool passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const LocalTestEntry& e) { return e.passed; });
  }
  std::vector<std::size_t> failing_points() const {
    std::vector<std::size_t> out;
    for (const auto& e : entries)
      if (!e.passed) out.push_back(e.point);
    return out;
  }
};

/// At every base point, the tangent-cone pencil of degree n_p has the lines
/// through p as its only special fibers; rank2_hurwitz must hold for it.
inline LocalTestReport local_test(const WeakMultinet& mn, const IncidenceLattice& lat) {
  LocalTestReport rep;
  for (std::size_t p : mn.base) {
    const long np = mn.weights.at(p);
    std::vector<long> profile;
    for (std::size_t l : lat.point(p).lines) profile.push_back(mn.multiplicity.at(l));
    long rhs = 0;
    for (long m : profile) rhs += m - 1;
    rep.entries.push_back({p, np, 2 * np - 2, rhs, rank2_hurwitz(np, profile)});
  }
  return rep;
}

struct TransversalityReport {
  long outside_points = 0;  // |(l0 meet union L) - X|
  long lhs = 0;             // 2 - 2d
  long rhs = 0;             // outside_points - k d
  bool transverse = false;
};

/// Transversality of an extra line l0 to the regular fibers of a complete
/// multinet's pencil.
inline TransversalityReport transversality(const WeakMultinet& mn, const MultiArrangement& arr,
                                           const IncidenceLattice& lat, const ProjLine& extra) {
  const auto& lines = arr.lines();
  const RHReport rh = euler_sides(mn, lat);
  if (!rh.complete) throw NotComplete(rh.deficit);
  const ProjLine l0 = extra.promote(std::lcm(arr.order(), [&] {
    unsigned o = 1;
    for (const auto& c : extra.coeffs()) o = std::lcm(o, c.order());
    return o;
  }()));
  for (const auto& l : lines)
    if (l.proportional_to(l0)) throw LineInArrangement("extra line coincides with '" + l.label() + "'");
  std::set<ProjPoint> pts;
  for (const auto& l : lines) pts.insert(meet(l, l0));
  TransversalityReport rep;
  for (const auto& q : pts) {
    const auto idx = lat.find(q);
    if (!(idx && mn.in_base(*idx))) ++rep.outside_points;
  }
  rep.lhs = 2 - 2 * mn.degree;
  rep.rhs = rep.outside_points - static_cast<long>(mn.k()) * mn.degree;
  rep.transverse = rep.lhs == rep.rhs;
  return rep;
}

struct ChainReport {
  std::vector<TransversalityReport> steps;
  bool meets_inside = true;  // each extra meets the earlier ones on union L
  std::string witness;

  bool transverse() const {
    return meets_inside && std::all_of(steps.begin(), steps.end(),
                                       [](const TransversalityReport& s) { return s.transverse; });
  }
};

/// Several extra lines added one after another; each must be transverse and
/// meet every earlier extra at a point of union L.
inline ChainReport transversality_chain(const WeakMultinet& mn, const MultiArrangement& arr,
                                        const IncidenceLattice& lat, const std::vector<ProjLine>& extras) {
  ChainReport rep;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    rep.steps.push_back(transversality(mn, arr, lat, extras[i]));
    for (std::size_t j = 0; j < i; ++j) {
      if (extras[i].proportional_to(extras[j]))
        throw InvalidInput("extra lines " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
      const ProjPoint q = meet(extras[i], extras[j]);
      const bool inside = std::any_of(arr.lines().begin(), arr.lines().end(),
                                      [&](const ProjLine& l) { return l.contains(q); });
      if (!inside && rep.meets_inside) {
        rep.meets_inside = false;
        rep.witness = "extras " + std::to_string(j) + " and " + std::to_string(i) + " meet at " + q.str() +
                      " off the arrangement";
      }
    }
  }
  return rep;
}

}  // namespace mnet
