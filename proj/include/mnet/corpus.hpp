#pragma once

// Named arrangements with their known multinets and Euler counts.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mnet/arrangement.hpp"
#include "mnet/cyclo.hpp"
#include "mnet/errors.hpp"

namespace mnet {

struct ExpectedMultinet {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<long> multiplicity;
  long degree = 0;
  std::size_t base_size = 0;
};

struct ExpectedRH {
  long lhs = 0;
  long rhs = 0;
};

struct CorpusEntry {
  std::string name;
  std::string parameters;
  MultiArrangement arrangement;
  std::optional<ExpectedMultinet> expected;
  std::optional<ExpectedRH> rh;
  std::string note;
};

namespace corpus {

namespace detail {

inline Cyclo zeta(unsigned n, long k) { return Cyclo::zeta(n, k); }

inline ProjLine line(Cyclo a, Cyclo b, Cyclo c) { return ProjLine(std::move(a), std::move(b), std::move(c)); }

}  // namespace detail

/// Fibers x^d - y^d, y^d - z^d, z^d - x^d: lines x - w^j y, y - w^j z, z - w^j x.
inline MultiArrangement ceva(unsigned d) {
  if (d < 1) throw InvalidInput("ceva(d) needs d >= 1");
  using detail::zeta;
  std::vector<ProjLine> ls;
  for (unsigned j = 0; j < d; ++j) ls.push_back(detail::line(1L, -zeta(d, j), 0L));
  for (unsigned j = 0; j < d; ++j) ls.push_back(detail::line(0L, 1L, -zeta(d, j)));
  for (unsigned j = 0; j < d; ++j) ls.push_back(detail::line(-zeta(d, j), 0L, 1L));
  return MultiArrangement(std::move(ls), {}, d);
}

/// The twelve lines of the four completely reducible Hesse cubics: xyz and
/// x^3 + y^3 + z^3 - 3 w^c xyz = prod_{a+b=c mod 3} (x + w^a y + w^b z).
inline MultiArrangement hessian() {
  std::vector<ProjLine> ls{detail::line(1L, 0L, 0L), detail::line(0L, 1L, 0L), detail::line(0L, 0L, 1L)};
  for (long c = 0; c < 3; ++c)
    for (long a = 0; a < 3; ++a) ls.push_back(detail::line(1L, detail::zeta(3, a), detail::zeta(3, c - a)));
  return MultiArrangement(std::move(ls), {}, 3);
}

/// Fibers x^r (y^r - z^r), y^r (z^r - x^r), z^r (x^r - y^r); coordinate
/// lines carry multiplicity r.  Lines are grouped by fiber.
inline MultiArrangement monomial(unsigned r) {
  if (r < 1) throw InvalidInput("monomial(r) needs r >= 1");
  using detail::zeta;
  std::vector<ProjLine> ls;
  std::vector<long> mult;
  ls.push_back(detail::line(1L, 0L, 0L));
  mult.push_back(r);
  for (unsigned j = 0; j < r; ++j) ls.push_back(detail::line(0L, 1L, -zeta(r, j))), mult.push_back(1);
  ls.push_back(detail::line(0L, 1L, 0L));
  mult.push_back(r);
  for (unsigned j = 0; j < r; ++j) ls.push_back(detail::line(-zeta(r, j), 0L, 1L)), mult.push_back(1);
  ls.push_back(detail::line(0L, 0L, 1L));
  mult.push_back(r);
  for (unsigned j = 0; j < r; ++j) ls.push_back(detail::line(1L, -zeta(r, j), 0L)), mult.push_back(1);
  return MultiArrangement(std::move(ls), std::move(mult), r);
}

/// ceva(d) plus the line z.
inline MultiArrangement jd(unsigned d) {
  if (d < 2) throw InvalidInput("jd(d) needs d >= 2");
  auto ls = ceva(d).lines();
  ls.push_back(detail::line(0L, 0L, 1L));
  ls.back().set_label("z");
  return MultiArrangement(std::move(ls), {}, d);
}

/// Fibers (x^r - z^r)(y^r - 2^r z^r), (y^r - z^r)(x^r - 2^r z^r),
/// (x^r - y^r) z^r with z at multiplicity r.
inline MultiArrangement os_family(unsigned r) {
  if (r < 2) throw InvalidInput("os_family(r) needs r >= 2");
  using detail::zeta;
  std::vector<ProjLine> ls;
  for (unsigned j = 0; j < r; ++j) ls.push_back(detail::line(1L, 0L, -zeta(r, j)));
  for (unsigned j = 0; j < r; ++j) ls.push_back(detail::line(0L, 1L, Cyclo(-2L) * zeta(r, j)));
  for (unsigned j = 0; j < r; ++j) ls.push_back(detail::line(0L, 1L, -zeta(r, j)));
  for (unsigned j = 0; j < r; ++j) ls.push_back(detail::line(1L, 0L, Cyclo(-2L) * zeta(r, j)));
  for (unsigned j = 0; j < r; ++j) ls.push_back(detail::line(1L, -zeta(r, j), 0L));
  ls.push_back(detail::line(0L, 0L, 1L));
  std::vector<long> mult(ls.size(), 1);
  mult.back() = r;
  return MultiArrangement(std::move(ls), std::move(mult), r);
}

/// k lines through [0:0:1]: y and x - j y for j = 0..k-2.
inline MultiArrangement concurrent(unsigned k) {
  if (k < 3) throw InvalidInput("concurrent(k) needs k >= 3");
  std::vector<ProjLine> ls{detail::line(0L, 1L, 0L)};
  for (long j = 0; j + 1 < static_cast<long>(k); ++j) ls.push_back(detail::line(1L, -j, 0L));
  return MultiArrangement(std::move(ls));
}

/// A rational specialization of the Pappus configuration in which three
/// lines of one class become concurrent: ten triple points and six double
/// points.  Classes are lines 0-2, 3-5 and 6-8.
inline MultiArrangement pappus_special() {
  std::vector<ProjLine> ls{
      detail::line(0L, 1L, 0L),  detail::line(1L, 0L, 0L),   detail::line(1L, -1L, 0L),
      detail::line(2L, 1L, -2L), detail::line(1L, -2L, -2L), detail::line(1L, -1L, 1L),
      detail::line(1L, -1L, -1L), detail::line(1L, 2L, -2L), detail::line(2L, -1L, 2L)};
  return MultiArrangement(std::move(ls));
}

/// Abstract (3,4)-multinet with every multiplicity 1 that is not a net: one
/// point P on a1, a2, b1, b2, c1, c2 (weight 2) and twelve triple points.
inline MultiArrangement unit_multinet() {
  std::vector<std::string> labels;
  for (const char* cls : {"a", "b", "c"})
    for (int i = 1; i <= 4; ++i) labels.push_back(cls + std::to_string(i));
  auto a = [](int i) { return static_cast<std::size_t>(i - 1); };
  auto b = [](int i) { return static_cast<std::size_t>(3 + i); };
  auto c = [](int i) { return static_cast<std::size_t>(7 + i); };
  // c index of the point on a_i and b_j, for the pairs not through P.
  const int square[4][4] = {{0, 0, 3, 4}, {0, 0, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};
  std::vector<std::vector<std::size_t>> pts{{a(1), a(2), b(1), b(2), c(1), c(2)}};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (square[i - 1][j - 1] != 0) pts.push_back({a(i), b(j), c(square[i - 1][j - 1])});
  return MultiArrangement::abstract(std::move(labels), std::move(pts));
}

inline MultiArrangement triangle() {
  return MultiArrangement({detail::line(1L, 0L, 0L), detail::line(0L, 1L, 0L), detail::line(0L, 0L, 1L)});
}

namespace detail {

inline std::vector<std::size_t> range(std::size_t from, std::size_t count) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

inline std::pair<std::string, std::optional<unsigned>> split_name(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) return {name, std::nullopt};
  const std::string num = name.substr(colon + 1);
  if (num.empty() || num.size() > 3 || num.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidInput("bad corpus parameter in '" + name + "'");
  return {name.substr(0, colon), static_cast<unsigned>(std::stoul(num))};
}

}  // namespace detail

/// Builds an entry by name, e.g. "ceva:3", "hessian", "monomial:2".
inline CorpusEntry entry(const std::string& name) {
  const auto [base, param] = detail::split_name(name);
  auto need = [&, p = param](unsigned lo, unsigned hi) {
    if (!p || *p < lo || *p > hi)
      throw InvalidInput("corpus entry '" + base + "' needs a parameter in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return *p;
  };
  auto bare = [&, p = param] {
    if (p) throw InvalidInput("corpus entry '" + base + "' takes no parameter");
  };
  using detail::range;
  CorpusEntry e;
  e.name = name;
  if (base == "ceva") {
    const unsigned d = need(1, 12);
    e.parameters = "d=" + std::to_string(d);
    e.arrangement = ceva(d);
    e.expected = ExpectedMultinet{{range(0, d), range(d, d), range(2 * d, d)},
                                  std::vector<long>(3 * d, 1), static_cast<long>(d), std::size_t{d} * d};
    const long v = 3 + static_cast<long>(d * d);
    e.rh = ExpectedRH{v, v};
    e.note = "Fermat pencil a x^d + b y^d + c z^d; three completely reducible fibers, a (3,d)-net";
  } else if (base == "hessian") {
    bare();
    e.arrangement = hessian();
    e.expected = ExpectedMultinet{{range(0, 3), range(3, 3), range(6, 3), range(9, 3)},
                                  std::vector<long>(12, 1), 3, 9};
    e.rh = ExpectedRH{12, 12};
    e.note = "Hesse pencil of cubics; four completely reducible fibers, a (4,3)-net on the nine inflection points";
  } else if (base == "monomial") {
    const unsigned r = need(1, 12);
    e.parameters = "r=" + std::to_string(r);
    e.arrangement = monomial(r);
    const std::size_t s = r + 1;
    std::vector<long> mult(3 * s, 1);
    mult[0] = mult[s] = mult[2 * s] = r;
    const long v = 6 + static_cast<long>(r * r);
    e.expected = ExpectedMultinet{{range(0, s), range(s, s), range(2 * s, s)}, mult, 2L * r,
                                  3 + std::size_t{r} * r};
    e.rh = ExpectedRH{v, v};
    e.note = "monomial group arrangement; coordinate lines doubled in the fibers x^r(y^r - z^r) and cyclic shifts";
  } else if (base == "jd") {
    const unsigned d = need(2, 12);
    e.parameters = "d=" + std::to_string(d);
    e.arrangement = jd(d);
    e.note = "Fermat arrangement plus the line z; z is transverse to the regular Fermat fibers";
  } else if (base == "os") {
    const unsigned r = need(2, 12);
    e.parameters = "r=" + std::to_string(r);
    e.arrangement = os_family(r);
    std::vector<long> mult(5 * r + 1, 1);
    mult.back() = r;
    std::vector<std::size_t> third = range(4 * r, r + 1);
    e.expected = ExpectedMultinet{{range(0, 2 * r), range(2 * r, 2 * r), third}, mult, 2L * r,
                                  std::size_t{r} * r * 2 + 2};
    if (r == 2) e.rh = ExpectedRH{13, 11};
    e.note = "(3,2r)-multinet with z doubled; the local test fails, so it is not complete";
  } else if (base == "concurrent") {
    const unsigned k = need(3, 64);
    e.parameters = "k=" + std::to_string(k);
    e.arrangement = concurrent(k);
    std::vector<std::vector<std::size_t>> cls;
    for (std::size_t i = 0; i < k; ++i) cls.push_back({i});
    e.expected = ExpectedMultinet{cls, std::vector<long>(k, 1), 1, 1};
    e.rh = ExpectedRH{4, 4};
    e.note = "pencil of k lines; the (k,1)-net of singleton classes";
  } else if (base == "pappus-special") {
    bare();
    e.arrangement = pappus_special();
    e.expected = ExpectedMultinet{{range(0, 3), range(3, 3), range(6, 3)}, std::vector<long>(9, 1), 3, 9};
    e.rh = ExpectedRH{12, 10};
    e.note = "degenerate Pappus configuration; a (3,3)-net whose pencil has a hidden singular fiber";
  } else if (base == "unit-multinet") {
    bare();
    e.arrangement = unit_multinet();
    e.expected = ExpectedMultinet{{range(0, 4), range(4, 4), range(8, 4)}, std::vector<long>(12, 1), 4, 13};
    e.rh = ExpectedRH{16, 11};
    e.note = "abstract incidence structure: all multiplicities 1, one base point of weight 2";
  } else if (base == "triangle") {
    bare();
    e.arrangement = triangle();
    e.note = "three generic lines; no multiple points";
  } else {
    throw InvalidInput("unknown corpus entry '" + name + "'");
  }
  return e;
}

/// Names used by `corpus list` and the corpus-wide checks.
inline std::vector<std::string> names() {
  return {"triangle",   "ceva:1",     "ceva:2",     "ceva:3",       "ceva:4",        "hessian",
          "monomial:1", "monomial:2", "monomial:3", "jd:2",         "jd:3",          "jd:4",
          "os:2",       "concurrent:5", "pappus-special", "unit-multinet"};
}

}  // namespace corpus
}  // namespace mnet
