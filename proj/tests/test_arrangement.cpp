#include <gtest/gtest.h>

#include <map>
#include <random>

#include "mnet/arrangement.hpp"

using namespace mnet;

namespace {

Cyclo z(unsigned n, long k = 1) { return Cyclo::zeta(n, k); }

MultiArrangement ceva_local(unsigned d) {
  std::vector<ProjLine> ls;
  for (unsigned j = 0; j < d; ++j) ls.emplace_back(Cyclo(1L), -z(d, j), Cyclo(0L));
  for (unsigned j = 0; j < d; ++j) ls.emplace_back(Cyclo(0L), Cyclo(1L), -z(d, j));
  for (unsigned j = 0; j < d; ++j) ls.emplace_back(-z(d, j), Cyclo(0L), Cyclo(1L));
  return MultiArrangement(ls);
}

// Oracle: group the C(n,2) raw cross products by proportionality (cross
// product of the two triples vanishes), no normalization involved.
std::map<std::size_t, std::size_t> oracle_profile(const std::vector<ProjLine>& ls) {
  std::vector<std::pair<Triple, std::set<std::size_t>>> groups;
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      const Triple p = cross(ls[i].coeffs(), ls[j].coeffs());
      bool placed = false;
      for (auto& [q, s] : groups)
        if (is_zero(cross(p, q))) {
          s.insert(i);
          s.insert(j);
          placed = true;
          break;
        }
      if (!placed) groups.push_back({p, {i, j}});
    }
  std::map<std::size_t, std::size_t> hist;
  for (const auto& g : groups) ++hist[g.second.size()];
  return hist;
}

std::map<std::size_t, std::size_t> profile(const IncidenceLattice& lat) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& p : lat.points()) ++hist[p.multiplicity()];
  return hist;
}

std::size_t pair_sum(const IncidenceLattice& lat) {
  std::size_t s = 0;
  for (const auto& p : lat.points()) s += p.multiplicity() * (p.multiplicity() - 1) / 2;
  return s;
}

}  // namespace

TEST(Meet, Examples) {
  const ProjLine x(1L, 0L, 0L), y(0L, 1L, 0L), zl(0L, 0L, 1L);
  EXPECT_EQ(meet(x, y), ProjPoint(0L, 0L, 1L));
  EXPECT_EQ(meet(ProjLine(1L, -1L, 0L), ProjLine(0L, 1L, -1L)), ProjPoint(1L, 1L, 1L));
  const ProjLine l(Cyclo(1L), z(3), Cyclo(0L));
  const ProjPoint p = meet(l, zl);
  // hand cross product: (1, w, 0) x (0, 0, 1) = (w, -1, 0) ~ (1, -w^2, 0)
  EXPECT_EQ(p, ProjPoint(Cyclo(1L), -z(3, 2), Cyclo(0L)));
  EXPECT_TRUE(l.contains(p));
  EXPECT_TRUE(zl.contains(p));
  EXPECT_THROW(meet(x, ProjLine(2L, 0L, 0L)), ProportionalLines);
}

TEST(Meet, Symmetric) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const ProjLine a(c(rng), c(rng), 1L), b(1L, c(rng), c(rng));
    if (a.proportional_to(b)) continue;
    EXPECT_EQ(meet(a, b), meet(b, a));
  }
}

TEST(Normalization, FirstNonzeroIsOne) {
  const ProjLine l(0L, 4L, -2L);
  EXPECT_EQ(l.coeffs()[1], Cyclo(1L));
  EXPECT_EQ(l.coeffs()[2], Cyclo(Rational(-1, 2)));
  EXPECT_EQ(ProjLine(0L, 4L, -2L), ProjLine(0L, -2L, 1L));
  EXPECT_THROW(ProjPoint(0L, 0L, 0L), InvalidInput);
}

TEST(MultiArrangementTest, RejectsBadInput) {
  EXPECT_THROW(MultiArrangement({ProjLine(1L, 0L, 0L), ProjLine(3L, 0L, 0L)}), ProportionalLines);
  EXPECT_THROW(MultiArrangement({ProjLine(1L, 0L, 0L)}, {0}), InvalidInput);
  EXPECT_THROW(MultiArrangement({ProjLine(1L, 0L, 0L)}, {1, 1}), InvalidInput);
  EXPECT_THROW(MultiArrangement::abstract({"a", "b", "c"}, {{0, 1, 2}, {0, 1}}), InvalidInput);
}

TEST(MultiArrangementTest, AutoLabelsAndPromotion) {
  MultiArrangement a({ProjLine(1L, -1L, 0L), ProjLine(Cyclo(1L), z(3), Cyclo(0L))});
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ(a.labels()[0], "x-y");
  EXPECT_EQ(a.lines()[0].coeffs()[0].order(), 3u);
  EXPECT_EQ(a.index_of("x-y"), std::optional<std::size_t>(0));
}

TEST(Lattice, CevaTwo) {
  const auto arr = ceva_local(2);
  const auto lat = build_lattice(arr);
  EXPECT_EQ(profile(lat), (std::map<std::size_t, std::size_t>{{2, 3}, {3, 4}}));
  EXPECT_EQ(profile(lat), oracle_profile(arr.lines()));
  EXPECT_EQ(pair_sum(lat), 15u);
  EXPECT_EQ(multiple_points(lat).size(), 4u);
}

TEST(Lattice, CevaThree) {
  const auto arr = ceva_local(3);
  const auto lat = build_lattice(arr);
  EXPECT_EQ(profile(lat), (std::map<std::size_t, std::size_t>{{3, 12}}));
  EXPECT_EQ(profile(lat), oracle_profile(arr.lines()));
  EXPECT_EQ(pair_sum(lat), 36u);
}

TEST(Lattice, ConcurrentAndTriangle) {
  std::vector<ProjLine> ls{ProjLine(0L, 1L, 0L)};
  for (long j = 0; j < 4; ++j) ls.emplace_back(1L, -j, 0L);
  const auto lat = build_lattice(MultiArrangement(ls));
  ASSERT_EQ(lat.size(), 1u);
  EXPECT_EQ(lat.point(0).multiplicity(), 5u);
  EXPECT_EQ(*lat.point(0).coords, ProjPoint(0L, 0L, 1L));
  EXPECT_EQ(multiple_points(lat), std::vector<std::size_t>{0});
  const auto tri = build_lattice(
      MultiArrangement({ProjLine(1L, 0L, 0L), ProjLine(0L, 1L, 0L), ProjLine(0L, 0L, 1L)}));
  EXPECT_EQ(tri.size(), 3u);
  EXPECT_TRUE(multiple_points(tri).empty());
}

TEST(Lattice, PointsAreCanonicallySorted) {
  const auto lat = build_lattice(ceva_local(3));
  for (std::size_t i = 1; i < lat.size(); ++i) EXPECT_LT(*lat.point(i - 1).coords, *lat.point(i).coords);
}

TEST(Lattice, AbstractMode) {
  auto arr = MultiArrangement::abstract({"a", "b", "c", "d"}, {{2, 1, 0}});
  const auto lat = build_lattice(arr);
  EXPECT_EQ(lat.size(), 4u);
  EXPECT_EQ(lat.point(0).lines, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(lat.meet_index(3, 1), *lat.find_by_lines({1, 3}));
  EXPECT_FALSE(lat.has_coordinates());
  EXPECT_THROW(arr.lines(), AbstractArrangement);
}

TEST(LatticeProperty, RandomRationalArrangements) {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<long> c(-2, 2);
  std::uniform_int_distribution<std::size_t> count(2, 8);
  int checked = 0;
  while (checked < 1000) {
    std::vector<ProjLine> ls;
    const std::size_t n = count(rng);
    while (ls.size() < n) {
      Triple t{Cyclo(c(rng)), Cyclo(c(rng)), Cyclo(c(rng))};
      if (is_zero(t)) continue;
      ProjLine l(t);
      bool dup = false;
      for (const auto& o : ls) dup = dup || o.proportional_to(l);
      if (!dup) ls.push_back(l);
    }
    const auto lat = build_lattice(MultiArrangement(ls));
    ASSERT_EQ(pair_sum(lat), n * (n - 1) / 2);
    for (const auto& p : lat.points())
      for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(ls[i].contains(*p.coords), p.contains(i));
    ++checked;
  }
}
