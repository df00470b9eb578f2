#pragma once

// Projective points and lines over a cyclotomic field, multi-arrangements,
// and the incidence lattice of rank-two flats (intersection points).

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mnet/cyclo.hpp"
#include "mnet/errors.hpp"

namespace mnet {

using Triple = std::array<Cyclo, 3>;

inline Cyclo dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero(const Triple& t) {
  return t[0].is_zero() && t[1].is_zero() && t[2].is_zero();
}

namespace detail {

// Scale so the first nonzero entry is 1.
inline Triple normalize(Triple t) {
  for (const auto& c : t) {
    if (c.is_zero()) continue;
    const Cyclo s = inv(c);
    for (auto& x : t) x = x * s;
    return t;
  }
  throw InvalidInput("projective triple is zero");
}

inline std::string triple_str(const Triple& t) {
  return "[" + t[0].str() + ":" + t[1].str() + ":" + t[2].str() + "]";
}

}  // namespace detail

class ProjPoint {
 public:
  explicit ProjPoint(const Triple& coords) : coords_(detail::normalize(coords)) {}
  ProjPoint(Cyclo x, Cyclo y, Cyclo z) : ProjPoint(Triple{std::move(x), std::move(y), std::move(z)}) {}

  const Triple& coords() const noexcept { return coords_; }
  std::string str() const { return detail::triple_str(coords_); }

  ProjPoint promote(unsigned order) const {
    ProjPoint p = *this;
    for (auto& c : p.coords_) c = c.promote(order);
    return p;
  }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  Triple coords_;
};

class ProjLine {
 public:
  ProjLine(const Triple& coeffs, std::string label = {})
      : coeffs_(detail::normalize(coeffs)), label_(std::move(label)) {}
  ProjLine(Cyclo a, Cyclo b, Cyclo c, std::string label = {})
      : ProjLine(Triple{std::move(a), std::move(b), std::move(c)}, std::move(label)) {}

  const Triple& coeffs() const noexcept { return coeffs_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool contains(const ProjPoint& p) const { return dot(coeffs_, p.coords()).is_zero(); }
  bool proportional_to(const ProjLine& other) const { return coeffs_ == other.coeffs_; }

  ProjLine promote(unsigned order) const {
    ProjLine l = *this;
    for (auto& c : l.coeffs_) c = c.promote(order);
    return l;
  }

  /// Linear form as text, e.g. "x-y" or "x+(1+w)*y-2*z", with w the root of
  /// unity; contains no whitespace, commas or colons.
  std::string form_str() const {
    static constexpr const char* vars[] = {"x", "y", "z"};
    std::string out;
    for (int i = 0; i < 3; ++i) {
      const Cyclo& c = coeffs_[i];
      if (c.is_zero()) continue;
      const bool first = out.empty();
      std::string term;
      if (c == Cyclo(1L)) {
        term = first ? "" : "+";
      } else if (c == Cyclo(-1L)) {
        term = "-";
      } else if (auto q = c.as_rational()) {
        term = std::string(*q < 0 || first ? "" : "+") + q->get_str() + "*";
      } else {
        std::string root = c.str(true);
        for (auto& ch : root)
          if (ch == 'z') ch = 'w';
        term = std::string(first ? "" : "+") + "(" + root + ")*";
      }
      out += term + vars[i];
    }
    return out;
  }

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Triple coeffs_;
  std::string label_;
};

/// Intersection of two distinct lines.
inline ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  const Triple c = cross(l1.coeffs(), l2.coeffs());
  if (is_zero(c))
    throw ProportionalLines("lines '" + l1.label() + "' and '" + l2.label() + "' coincide");
  return ProjPoint(c);
}

/// Lines with positive multiplicities.  Either every line carries coordinates
/// or the arrangement is abstract: bare labels plus declared points (sets of
/// line indices), every undeclared pair meeting in a double point.
class MultiArrangement {
 public:
  MultiArrangement() = default;

  explicit MultiArrangement(std::vector<ProjLine> lines, std::vector<long> mult = {},
                            unsigned order = 1)
      : lines_(std::move(lines)), mult_(std::move(mult)) {
    if (mult_.empty()) mult_.assign(lines_.size(), 1);
    order_ = order;
    for (const auto& l : lines_)
      for (const auto& c : l.coeffs()) order_ = std::lcm(order_, c.order());
    for (auto& l : lines_) l = l.promote(order_);
    labels_.reserve(lines_.size());
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      if (lines_[i].label().empty()) lines_[i].set_label(lines_[i].form_str());
      labels_.push_back(lines_[i].label());
    }
    for (std::size_t i = 0; i < lines_.size(); ++i)
      for (std::size_t j = i + 1; j < lines_.size(); ++j)
        if (lines_[i].proportional_to(lines_[j]))
          throw ProportionalLines("lines '" + labels_[i] + "' and '" + labels_[j] +
                                  "' are the same projective line");
    validate();
  }

  static MultiArrangement abstract(std::vector<std::string> labels,
                                   std::vector<std::vector<std::size_t>> points,
                                   std::vector<long> mult = {}) {
    MultiArrangement a;
    a.abstract_ = true;
    a.labels_ = std::move(labels);
    a.mult_ = std::move(mult);
    if (a.mult_.empty()) a.mult_.assign(a.labels_.size(), 1);
    for (auto& p : points) {
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    a.points_ = std::move(points);
    a.validate();
    return a;
  }

  bool is_abstract() const noexcept { return abstract_; }
  std::size_t size() const noexcept { return labels_.size(); }
  unsigned order() const noexcept { return order_; }
  const std::vector<ProjLine>& lines() const {
    if (abstract_) throw AbstractArrangement();
    return lines_;
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<long>& multiplicities() const noexcept { return mult_; }
  const std::vector<std::vector<std::size_t>>& declared_points() const noexcept { return points_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

 private:
  void validate() const {
    if (mult_.size() != labels_.size())
      throw InvalidInput("multiplicity list does not match the number of lines");
    for (long m : mult_)
      if (m < 1) throw InvalidInput("line multiplicities must be positive");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw InvalidInput("empty line label");
      if (!seen.insert(l).second) throw InvalidInput("duplicate line label '" + l + "'");
    }
    if (!abstract_) return;
    std::set<std::pair<std::size_t, std::size_t>> covered;
    for (const auto& p : points_) {
      if (p.size() < 2) throw InvalidInput("a declared point needs at least two lines");
      for (std::size_t i : p)
        if (i >= labels_.size()) throw InvalidInput("declared point refers to an unknown line");
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
          if (!covered.insert({p[a], p[b]}).second)
            throw InvalidInput("lines '" + labels_[p[a]] + "' and '" + labels_[p[b]] +
                               "' meet in two declared points");
    }
  }

  bool abstract_ = false;
  unsigned order_ = 1;
  std::vector<ProjLine> lines_;
  std::vector<std::string> labels_;
  std::vector<long> mult_;
  std::vector<std::vector<std::size_t>> points_;
};

struct LatticePoint {
  std::optional<ProjPoint> coords;  // empty for abstract arrangements
  std::vector<std::size_t> lines;   // sorted line indices

  std::size_t multiplicity() const noexcept { return lines.size(); }
  bool contains(std::size_t line) const {
    return std::binary_search(lines.begin(), lines.end(), line);
  }
  std::string str() const { return coords ? coords->str() : "{" + index_list() + "}"; }

 private:
  std::string index_list() const {
    std::string s;
    for (std::size_t i : lines) s += (s.empty() ? "" : ",") + std::to_string(i);
    return s;
  }
};

/// All pairwise intersection points with their incident line sets.
class IncidenceLattice {
 public:
  IncidenceLattice(std::size_t line_count, std::vector<LatticePoint> points)
      : line_count_(line_count), points_(std::move(points)), meet_(line_count * line_count, npos) {
    for (std::size_t p = 0; p < points_.size(); ++p) {
      const auto& ls = points_[p].lines;
      for (std::size_t a = 0; a < ls.size(); ++a)
        for (std::size_t b = a + 1; b < ls.size(); ++b) {
          auto& slot = meet_[ls[a] * line_count_ + ls[b]];
          if (slot != npos) throw InvalidInput("two lines meet in more than one point");
          slot = p;
          meet_[ls[b] * line_count_ + ls[a]] = p;
        }
    }
    for (std::size_t i = 0; i < line_count_; ++i)
      for (std::size_t j = i + 1; j < line_count_; ++j)
        if (meet_[i * line_count_ + j] == npos)
          throw InvalidInput("lines " + std::to_string(i) + " and " + std::to_string(j) +
                             " have no intersection point");
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t line_count() const noexcept { return line_count_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  const LatticePoint& point(std::size_t i) const { return points_.at(i); }

  /// Index of the point where lines i != j meet.
  std::size_t meet_index(std::size_t i, std::size_t j) const {
    if (i == j || i >= line_count_ || j >= line_count_)
      throw InvalidInput("meet_index needs two distinct line indices");
    return meet_[i * line_count_ + j];
  }

  std::vector<std::size_t> points_on(std::size_t line) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (points_[p].contains(line)) out.push_back(p);
    return out;
  }

  std::optional<std::size_t> find(const ProjPoint& q) const {
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (points_[p].coords && *points_[p].coords == q) return p;
    return std::nullopt;
  }

  std::optional<std::size_t> find_by_lines(std::vector<std::size_t> lines) const {
    std::sort(lines.begin(), lines.end());
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (points_[p].lines == lines) return p;
    return std::nullopt;
  }

  bool has_coordinates() const { return !points_.empty() && points_.front().coords.has_value(); }

 private:
  std::size_t line_count_;
  std::vector<LatticePoint> points_;
  std::vector<std::size_t> meet_;
};

/// Groups all pairwise meets; points come out in canonical order
/// (lexicographic on normalized coordinates, or on incident line lists for
/// abstract arrangements).
inline IncidenceLattice build_lattice(const MultiArrangement& arr) {
  const std::size_t n = arr.size();
  std::vector<LatticePoint> points;
  if (!arr.is_abstract()) {
    std::map<ProjPoint, std::set<std::size_t>> groups;
    const auto& lines = arr.lines();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto& s = groups[meet(lines[i], lines[j])];
        s.insert(i);
        s.insert(j);
      }
    points.reserve(groups.size());
    for (auto& [pt, s] : groups) points.push_back({pt, {s.begin(), s.end()}});
  } else {
    std::vector<std::vector<char>> covered(n, std::vector<char>(n, 0));
    for (const auto& p : arr.declared_points()) {
      points.push_back({std::nullopt, p});
      for (std::size_t a : p)
        for (std::size_t b : p) covered[a][b] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!covered[i][j]) points.push_back({std::nullopt, {i, j}});
    std::sort(points.begin(), points.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a.lines < b.lines; });
  }
  return IncidenceLattice(n, std::move(points));
}

/// Points on three or more lines, in lattice order.
inline std::vector<std::size_t> multiple_points(const IncidenceLattice& lat) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < lat.size(); ++p)
    if (lat.point(p).multiplicity() >= 3) out.push_back(p);
  return out;
}

}  // namespace mnet
