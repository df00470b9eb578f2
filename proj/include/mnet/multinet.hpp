#pragma once

// Multinets on an incidence lattice: axiom verification, construction from a
// base locus through the Cartan blocks, exhaustive discovery, refinement of
// weak multinets and class exponents.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mnet/arrangement.hpp"
#include "mnet/cartan.hpp"
#include "mnet/errors.hpp"

namespace mnet {

struct WeakMultinet {
  std::vector<std::vector<std::size_t>> classes;  // each sorted; ordered by smallest line
  std::vector<std::size_t> base;                  // X as sorted lattice indices
  std::vector<long> multiplicity;                 // m, one entry per line
  long degree = 0;                                // d
  std::map<std::size_t, long> weights;            // n_p for p in X

  std::size_t k() const noexcept { return classes.size(); }

  bool is_net() const {
    return std::all_of(multiplicity.begin(), multiplicity.end(), [](long m) { return m == 1; }) &&
           std::all_of(weights.begin(), weights.end(), [](const auto& w) { return w.second == 1; });
  }

  bool in_base(std::size_t p) const { return std::binary_search(base.begin(), base.end(), p); }

  /// Class index per line; npos for lines outside every class.
  std::vector<std::size_t> class_of(std::size_t line_count) const {
    std::vector<std::size_t> out(line_count, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t l : classes[i])
        if (l < line_count) out[l] = i;
    return out;
  }

  friend bool operator==(const WeakMultinet&, const WeakMultinet&) = default;
};

/// A weak multinet that also passed the connectivity axiom.
struct Multinet : WeakMultinet {};

namespace detail {

inline void canonicalize_classes(std::vector<std::vector<std::size_t>>& classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
}

inline long class_weight(const WeakMultinet& mn, const IncidenceLattice& lat, std::size_t cls,
                         std::size_t p) {
  long s = 0;
  for (std::size_t l : mn.classes[cls])
    if (lat.point(p).contains(l)) s += mn.multiplicity[l];
  return s;
}

inline std::string lines_str(const std::vector<std::size_t>& ls) {
  std::string s;
  for (std::size_t l : ls) s += (s.empty() ? "" : ",") + std::to_string(l);
  return "{" + s + "}";
}

}  // namespace detail

/// Weak multinet data from a partition and multiplicities: X is the set of
/// inter-class intersection points, d and n_p are read off the first class.
inline WeakMultinet make_weak(const IncidenceLattice& lat, std::vector<std::vector<std::size_t>> classes,
                              std::vector<long> multiplicity) {
  const std::size_t n = lat.line_count();
  if (multiplicity.size() != n) throw InvalidInput("multiplicity vector does not match the lines");
  for (const auto& c : classes)
    for (std::size_t l : c)
      if (l >= n) throw InvalidInput("class refers to line " + std::to_string(l) + " out of range");
  detail::canonicalize_classes(classes);
  WeakMultinet w;
  w.classes = std::move(classes);
  w.multiplicity = std::move(multiplicity);
  const auto cls = w.class_of(n);
  std::set<std::size_t> X;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (cls[a] != cls[b]) X.insert(lat.meet_index(a, b));
  w.base.assign(X.begin(), X.end());
  if (!w.classes.empty()) {
    for (std::size_t l : w.classes[0]) w.degree += w.multiplicity[l];
    for (std::size_t p : w.base) w.weights[p] = detail::class_weight(w, lat, 0, p);
  }
  return w;
}

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // first counterexample, empty when passed
};

struct VerifyReport {
  std::vector<AxiomCheck> checks;

  const AxiomCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const auto* c = find(name);
    return c && c->passed;
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
  }
  /// Everything except connectivity.
  bool weak_ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.passed || c.name == "connectivity"; });
  }
  const AxiomCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

/// Checks every multinet axiom and the numerology identities; never throws on
/// bad data, the report carries the first witness per check.
inline VerifyReport verify(const WeakMultinet& mn, const IncidenceLattice& lat) {
  VerifyReport rep;
  rep.checks.reserve(10);  // references below stay valid
  const std::size_t n = lat.line_count();
  auto add = [&](std::string name) -> AxiomCheck& {
    rep.checks.push_back({std::move(name), true, {}});
    return rep.checks.back();
  };
  auto fail = [](AxiomCheck& c, std::string w) {
    if (c.passed) c.witness = std::move(w);
    c.passed = false;
  };

  auto& part = add("partition");
  std::vector<int> seen(n, 0);
  for (const auto& c : mn.classes) {
    if (c.empty()) fail(part, "empty class");
    for (std::size_t l : c) {
      if (l >= n) {
        fail(part, "line " + std::to_string(l) + " out of range");
        continue;
      }
      ++seen[l];
    }
  }
  for (std::size_t l = 0; l < n; ++l)
    if (seen[l] != 1)
      fail(part, "line " + std::to_string(l) + " lies in " + std::to_string(seen[l]) + " classes");
  if (mn.k() < 3) fail(part, "only " + std::to_string(mn.k()) + " classes");
  if (mn.multiplicity.size() != n) fail(part, "multiplicity vector has the wrong length");
  for (std::size_t l = 0; l < mn.multiplicity.size(); ++l)
    if (mn.multiplicity[l] < 1) fail(part, "line " + std::to_string(l) + " has multiplicity < 1");
  for (std::size_t p : mn.base)
    if (p >= lat.size()) fail(part, "base point index out of range");
  // Structural damage makes every later check meaningless.
  if (!part.passed) return rep;

  const auto cls = mn.class_of(n);

  auto& deg = add("degree");
  for (std::size_t i = 0; i < mn.k(); ++i) {
    long s = 0;
    for (std::size_t l : mn.classes[i]) s += mn.multiplicity[l];
    if (s != mn.degree)
      fail(deg, "class " + std::to_string(i) + " has degree " + std::to_string(s) + ", expected " +
                    std::to_string(mn.degree));
  }

  auto& base = add("base_locus");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (cls[a] != cls[b] && !mn.in_base(lat.meet_index(a, b)))
        fail(base, "lines " + std::to_string(a) + " and " + std::to_string(b) + " meet at " +
                       lat.point(lat.meet_index(a, b)).str() + " outside X");

  auto& bp = add("base_points");
  if (mn.base.empty()) fail(bp, "base locus is empty");
  for (std::size_t p : mn.base)
    if (lat.point(p).multiplicity() < 3) fail(bp, lat.point(p).str() + " is not a multiple point");

  auto& weights = add("point_weights");
  for (std::size_t p : mn.base) {
    const auto it = mn.weights.find(p);
    const long np = it == mn.weights.end() ? -1 : it->second;
    if (np < 1) {
      fail(weights, "no positive weight recorded at " + lat.point(p).str());
      continue;
    }
    for (std::size_t i = 0; i < mn.k(); ++i) {
      const long s = detail::class_weight(mn, lat, i, p);
      if (s != np)
        fail(weights, "class " + std::to_string(i) + " has weight " + std::to_string(s) + " at " +
                          lat.point(p).str() + ", expected " + std::to_string(np));
    }
  }

  auto& conn = add("connectivity");
  for (std::size_t i = 0; i < mn.k(); ++i) {
    const auto& c = mn.classes[i];
    std::vector<std::size_t> comp(c.size());
    std::iota(comp.begin(), comp.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (!mn.in_base(lat.meet_index(c[a], c[b]))) comp[root(a)] = root(b);
    for (std::size_t a = 1; a < c.size(); ++a)
      if (root(a) != root(0)) {
        fail(conn, "class " + std::to_string(i) + " splits: lines " + std::to_string(c[0]) + " and " +
                       std::to_string(c[a]) + " are not joined outside X");
        break;
      }
  }

  auto& cop = add("coprime");
  long g = 0;
  for (long m : mn.multiplicity) g = std::gcd(g, m);
  if (g != 1) fail(cop, "all multiplicities divisible by " + std::to_string(g));

  auto& total = add("lemma_total");
  long sum_m = 0;
  for (long m : mn.multiplicity) sum_m += m;
  if (sum_m != mn.degree * static_cast<long>(mn.k()))
    fail(total, "sum of multiplicities " + std::to_string(sum_m) + " != d*k = " +
                    std::to_string(mn.degree * static_cast<long>(mn.k())));

  auto& sq = add("lemma_weights");
  long sum_sq = 0;
  for (std::size_t p : mn.base) {
    const auto it = mn.weights.find(p);
    if (it != mn.weights.end()) sum_sq += it->second * it->second;
  }
  if (sum_sq != mn.degree * mn.degree)
    fail(sq, "sum of n_p^2 is " + std::to_string(sum_sq) + ", d^2 = " + std::to_string(mn.degree * mn.degree));

  auto& per_line = add("lemma_lines");
  for (std::size_t l = 0; l < n; ++l) {
    long s = 0;
    for (std::size_t p : mn.base)
      if (lat.point(p).contains(l)) {
        const auto it = mn.weights.find(p);
        if (it != mn.weights.end()) s += it->second;
      }
    if (s != mn.degree)
      fail(per_line, "line " + std::to_string(l) + " carries weight " + std::to_string(s) + " in X, d = " +
                         std::to_string(mn.degree));
  }
  return rep;
}

enum class DiagnosisKind { InvalidBase, NotGlobal, TooFewBlocks, NonAffineBlock, AxiomFailure };

inline const char* to_string(DiagnosisKind k) {
  switch (k) {
    case DiagnosisKind::InvalidBase: return "InvalidBase";
    case DiagnosisKind::NotGlobal: return "NotGlobal";
    case DiagnosisKind::TooFewBlocks: return "TooFewBlocks";
    case DiagnosisKind::NonAffineBlock: return "NonAffineBlock";
    case DiagnosisKind::AxiomFailure: return "AxiomFailure";
  }
  return "?";
}

struct Diagnosis {
  DiagnosisKind kind;
  std::string detail;
};

using BaseOutcome = std::variant<Multinet, Diagnosis>;

/// Multinet supported on all of L with base locus X, or the first failing
/// requirement.  Classes are the supports of the Q(X) blocks; multiplicities
/// are the kernel vectors rescaled to the common coordinate sum lcm(sigma_i).
inline BaseOutcome multinet_from_base(const IncidenceLattice& lat, std::vector<std::size_t> X) {
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  if (X.empty()) return Diagnosis{DiagnosisKind::InvalidBase, "base locus is empty"};
  for (std::size_t p : X) {
    if (p >= lat.size()) return Diagnosis{DiagnosisKind::InvalidBase, "point index out of range"};
    if (lat.point(p).multiplicity() < 3)
      return Diagnosis{DiagnosisKind::InvalidBase, lat.point(p).str() + " is not a multiple point"};
  }
  const CartanDecomp dec = cartan_decompose(lat, X);
  if (dec.J.lines.size() != lat.line_count()) {
    std::size_t missing = 0;
    while (missing < dec.J.lines.size() && dec.J.lines[missing] == missing) ++missing;
    return Diagnosis{DiagnosisKind::NotGlobal, "line " + std::to_string(missing) + " meets no base point"};
  }
  if (dec.blocks.size() < 3)
    return Diagnosis{DiagnosisKind::TooFewBlocks, "Q(X) has " + std::to_string(dec.blocks.size()) + " blocks"};
  for (const auto& b : dec.blocks)
    if (b.classification.type != CartanType::Affine)
      return Diagnosis{DiagnosisKind::NonAffineBlock, std::string("block ") + detail::lines_str(b.lines) +
                                                          " is " + to_string(b.classification.type)};

  Integer d = 1;
  std::vector<Integer> sigma;
  for (const auto& b : dec.blocks) {
    Integer s = 0;
    for (const auto& x : b.classification.kernel) s += x;
    sigma.push_back(s);
    d = lcm(d, s);
  }
  if (!d.fits_slong_p()) return Diagnosis{DiagnosisKind::AxiomFailure, "degree overflows"};
  Multinet mn;
  mn.multiplicity.assign(lat.line_count(), 0);
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const auto& b = dec.blocks[i];
    const Integer scale = d / sigma[i];
    for (std::size_t j = 0; j < b.lines.size(); ++j) {
      const Integer m = b.classification.kernel[j] * scale;
      mn.multiplicity[b.lines[j]] = m.get_si();
    }
    mn.classes.push_back(b.lines);
  }
  detail::canonicalize_classes(mn.classes);
  mn.base = X;
  mn.degree = d.get_si();
  for (std::size_t p : X) mn.weights[p] = detail::class_weight(mn, lat, 0, p);
  const VerifyReport rep = verify(mn, lat);
  if (const auto* f = rep.first_failure())
    return Diagnosis{DiagnosisKind::AxiomFailure, f->name + ": " + f->witness};
  return mn;
}

struct Discovery {
  std::vector<std::size_t> base;
  Multinet multinet;
};

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 22;

/// Every global multinet, found by running multinet_from_base over all
/// nonempty subsets of the multiple points (by size, then lexicographic).
/// A cheap necessary test runs first: the graph joining lines whose meet lies
/// outside X must cover L and split into at least three components.
inline std::vector<Discovery> discover(const IncidenceLattice& lat, std::uint64_t cap = kDefaultCap) {
  const auto mp = multiple_points(lat);
  const std::size_t m = mp.size();
  if (m >= 63 || (std::uint64_t{1} << m) > cap) throw SearchSpaceTooLarge(m, cap);
  const std::size_t n = lat.line_count();

  std::vector<Discovery> found;
  std::set<std::pair<std::vector<std::vector<std::size_t>>, std::vector<long>>> keys;
  std::vector<char> in_x(lat.size(), 0);
  std::vector<std::size_t> parent(n);
  std::vector<char> covered(n);
  std::vector<std::size_t> scratch;

  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  auto examine = [&](const std::vector<std::size_t>& choice) {
    std::fill(covered.begin(), covered.end(), 0);
    for (std::size_t i : choice) {
      in_x[mp[i]] = 1;
      for (std::size_t l : lat.point(mp[i]).lines) covered[l] = 1;
    }
    bool ok = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
    if (ok) {
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      std::size_t components = n;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (!in_x[lat.meet_index(a, b)]) {
            const std::size_t ra = root(a), rb = root(b);
            if (ra != rb) {
              parent[ra] = rb;
              --components;
            }
          }
      ok = components >= 3;
      // Every base point needs lines from every component (equal weights).
      for (std::size_t i = 0; ok && i < choice.size(); ++i) {
        const auto& ls = lat.point(mp[choice[i]]).lines;
        scratch.clear();
        for (std::size_t l : ls) scratch.push_back(root(l));
        std::sort(scratch.begin(), scratch.end());
        ok = static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin()) == components;
      }
    }
    std::vector<std::size_t> X;
    for (std::size_t i : choice) {
      in_x[mp[i]] = 0;
      X.push_back(mp[i]);
    }
    if (!ok) return;
    auto outcome = multinet_from_base(lat, X);
    if (auto* mn = std::get_if<Multinet>(&outcome)) {
      if (keys.insert({mn->classes, mn->multiplicity}).second)
        found.push_back({std::move(X), std::move(*mn)});
    }
  };

  std::vector<std::size_t> choice;
  for (std::size_t size = 1; size <= m; ++size) {
    choice.resize(size);
    std::iota(choice.begin(), choice.end(), std::size_t{0});
    while (true) {
      examine(choice);
      std::size_t i = size;
      while (i > 0 && choice[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++choice[i - 1];
      for (std::size_t j = i; j < size; ++j) choice[j] = choice[j - 1] + 1;
    }
  }
  return found;
}

/// The multinet on the same base locus; its partition refines the weak one.
inline Multinet refine_weak(const WeakMultinet& wm, const IncidenceLattice& lat) {
  auto outcome = multinet_from_base(lat, wm.base);
  if (auto* d = std::get_if<Diagnosis>(&outcome))
    throw InvalidInput(std::string("weak multinet does not refine: ") + to_string(d->kind) + ": " + d->detail);
  return std::get<Multinet>(std::move(outcome));
}

struct ExponentReport {
  std::vector<long> exponents;
  bool pairwise_coprime = true;
  bool small_primes = true;  // with three or more e_i > 1, they lie in {2,3,5}
  bool ok() const noexcept { return pairwise_coprime && small_primes; }
};

inline ExponentReport exponent_verdicts(std::vector<long> e) {
  ExponentReport r;
  r.exponents = std::move(e);
  const auto& ex = r.exponents;
  for (std::size_t i = 0; i < ex.size(); ++i)
    for (std::size_t j = i + 1; j < ex.size(); ++j)
      if (std::gcd(ex[i], ex[j]) != 1) r.pairwise_coprime = false;
  const auto big = std::count_if(ex.begin(), ex.end(), [](long x) { return x > 1; });
  if (big >= 3)
    r.small_primes = std::all_of(ex.begin(), ex.end(), [](long x) { return x == 1 || x == 2 || x == 3 || x == 5; });
  return r;
}

/// e_i = gcd of the multiplicities in class i.
inline ExponentReport exponents(const WeakMultinet& mn) {
  std::vector<long> e;
  for (const auto& c : mn.classes) {
    long g = 0;
    for (std::size_t l : c) g = std::gcd(g, mn.multiplicity.at(l));
    e.push_back(g);
  }
  return exponent_verdicts(std::move(e));
}

}  // namespace mnet
