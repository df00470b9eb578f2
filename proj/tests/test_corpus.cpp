#include <gtest/gtest.h>

#include "mnet/arrangement_io.hpp"
#include "mnet/corpus.hpp"
#include "mnet/criteria.hpp"
#include "mnet/multinet.hpp"
#include "mnet/osalgebra.hpp"
#include "mnet/pencil.hpp"
#include "oracles.hpp"

using namespace mnet;

namespace {

struct Found {
  std::string name;
  MultiArrangement arr;
  IncidenceLattice lat;
  std::vector<Discovery> found;
};

const std::vector<Found>& everything() {
  static const std::vector<Found> all = [] {
    std::vector<Found> out;
    for (const auto& name : corpus::names()) {
      auto arr = corpus::entry(name).arrangement;
      auto lat = build_lattice(arr);
      auto found = discover(lat);
      out.push_back({name, std::move(arr), std::move(lat), std::move(found)});
    }
    return out;
  }();
  return all;
}

}  // namespace

TEST(Corpus, NamesBuild) {
  for (const auto& name : corpus::names()) EXPECT_NO_THROW(corpus::entry(name)) << name;
  EXPECT_THROW(corpus::entry("nope"), InvalidInput);
  EXPECT_THROW(corpus::entry("ceva"), InvalidInput);
  EXPECT_THROW(corpus::entry("hessian:2"), InvalidInput);
  EXPECT_THROW(corpus::entry("ceva:x"), InvalidInput);
}

TEST(Corpus, RegenerationIsIdentical) {
  for (const auto& name : corpus::names()) {
    const auto a = corpus::entry(name).arrangement, b = corpus::entry(name).arrangement;
    EXPECT_EQ(emit_arrangement(a), emit_arrangement(b)) << name;
    EXPECT_EQ(a.labels(), b.labels()) << name;
  }
}

TEST(Corpus, LineCounts) {
  EXPECT_EQ(corpus::ceva(3).size(), 9u);
  EXPECT_EQ(corpus::hessian().size(), 12u);
  EXPECT_EQ(corpus::monomial(3).size(), 12u);
  EXPECT_EQ(corpus::jd(3).size(), 10u);
  EXPECT_EQ(corpus::os_family(2).size(), 11u);
  EXPECT_EQ(corpus::concurrent(5).size(), 5u);
  EXPECT_EQ(corpus::pappus_special().size(), 9u);
  EXPECT_EQ(corpus::unit_multinet().size(), 12u);
}

TEST(Corpus, ExpectedMultinetsDiscovered) {
  for (const auto& f : everything()) {
    const auto e = corpus::entry(f.name);
    if (!e.expected) continue;
    bool hit = false;
    for (const auto& d : f.found) {
      if (d.multinet.classes != e.expected->classes) continue;
      hit = true;
      EXPECT_EQ(d.multinet.multiplicity, e.expected->multiplicity) << f.name;
      EXPECT_EQ(d.multinet.degree, e.expected->degree) << f.name;
      EXPECT_EQ(d.multinet.base.size(), e.expected->base_size) << f.name;
      if (e.rh) {
        const auto r = euler_sides(d.multinet, f.lat);
        EXPECT_EQ(r.lhs, e.rh->lhs) << f.name;
        EXPECT_EQ(r.rhs, e.rh->rhs) << f.name;
      }
    }
    EXPECT_TRUE(hit) << f.name;
  }
}

TEST(Corpus, NoMultinetsOnFermatPlusLine) {
  for (const auto& f : everything())
    if (f.name.rfind("jd:", 0) == 0 || f.name == "triangle") EXPECT_TRUE(f.found.empty()) << f.name;
}

// (a) isotropy of the resonance vectors.
TEST(CrossOracle, WedgesVanish) {
  for (const auto& f : everything())
    for (const auto& d : f.found) {
      const auto vs = resonance_from_multinet(d.multinet, f.lat);
      const A2Basis basis(f.lat);
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) EXPECT_TRUE(is_zero(wedge(vs[i], vs[j], basis))) << f.name;
    }
}

// (b) the three counting identities, recomputed here from the incidences.
TEST(CrossOracle, CountingIdentities) {
  for (const auto& f : everything())
    for (const auto& d : f.found) {
      const auto& mn = d.multinet;
      long sum_m = 0;
      for (long m : mn.multiplicity) sum_m += m;
      EXPECT_EQ(sum_m, mn.degree * static_cast<long>(mn.k())) << f.name;
      long sq = 0;
      for (std::size_t p : mn.base) sq += mn.weights.at(p) * mn.weights.at(p);
      EXPECT_EQ(sq, mn.degree * mn.degree) << f.name;
      const auto pts = oracle::incidences(f.lat);
      for (std::size_t l = 0; l < f.lat.line_count(); ++l) {
        long s = 0;
        for (std::size_t p : mn.base)
          if (pts[p].count(l)) s += mn.weights.at(p);
        EXPECT_EQ(s, mn.degree) << f.name << " line " << l;
      }
      EXPECT_TRUE(oracle::is_multinet(pts, f.lat.line_count(), mn.classes, mn.multiplicity)) << f.name;
    }
}

// (c) collinearity with exact scalars, for coordinate entries.
TEST(CrossOracle, PencilsCollinear) {
  for (const auto& f : everything()) {
    if (f.arr.is_abstract()) continue;
    for (const auto& d : f.found) {
      const auto rep = ceva_verdict(d.multinet, f.arr, f.lat);
      EXPECT_TRUE(rep.realized()) << f.name;
      for (const auto& rel : rep.relations)
        EXPECT_EQ(rep.fibers[0].scaled(rel.a) + rep.fibers[1].scaled(rel.b), rep.fibers[rel.fiber]) << f.name;
      for (const auto& fiber : rep.fibers) EXPECT_EQ(fiber.degree(), static_cast<unsigned>(d.multinet.degree));
    }
  }
}

// (d) Euler deficit is never negative; both forms of the right side agree.
TEST(CrossOracle, DeficitNonNegative) {
  for (const auto& f : everything())
    for (const auto& d : f.found) {
      const auto r = euler_sides(d.multinet, f.lat);
      EXPECT_GE(r.deficit, 0) << f.name;
      EXPECT_EQ(r.rhs, r.rhs_rewritten) << f.name;
      EXPECT_EQ(r.lhs, 3 + static_cast<long>(d.multinet.base.size()));
    }
}

// (e) exponents pairwise coprime.
TEST(CrossOracle, ExponentsCoprime) {
  for (const auto& f : everything())
    for (const auto& d : f.found) EXPECT_TRUE(exponents(d.multinet).ok()) << f.name;
}

// (f) no net-like multinet with d > 1 and six or more classes.
TEST(CrossOracle, AtMostFiveClasses) {
  for (const auto& f : everything())
    for (const auto& d : f.found) {
      const auto& mn = d.multinet;
      const bool unit = std::all_of(mn.multiplicity.begin(), mn.multiplicity.end(), [](long m) { return m == 1; });
      if (mn.degree > 1 && unit) EXPECT_LE(mn.k(), 5u) << f.name;
    }
}

TEST(CrossOracle, BaseDeterminesMultinet) {
  for (const auto& f : everything())
    for (const auto& d : f.found) {
      const auto again = multinet_from_base(f.lat, d.multinet.base);
      ASSERT_TRUE(std::holds_alternative<Multinet>(again)) << f.name;
      EXPECT_EQ(std::get<Multinet>(again).classes, d.multinet.classes) << f.name;
      EXPECT_EQ(std::get<Multinet>(again).multiplicity, d.multinet.multiplicity) << f.name;
      EXPECT_EQ(d.base, d.multinet.base) << f.name;
    }
}

TEST(CrossOracle, NetsMatchPartitionSearch) {
  // Exhaustive partition search is affordable up to nine lines.
  for (const auto& f : everything()) {
    if (f.lat.line_count() > 9) continue;
    std::size_t unit_found = 0;
    for (const auto& d : f.found)
      unit_found += std::all_of(d.multinet.multiplicity.begin(), d.multinet.multiplicity.end(),
                                [](long m) { return m == 1; });
    EXPECT_EQ(unit_found, oracle::all_nets(f.lat).size()) << f.name;
  }
}
