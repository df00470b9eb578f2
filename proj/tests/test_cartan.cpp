#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mnet/arrangement.hpp"
#include "mnet/cartan.hpp"

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

const ZMatrix kA2{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};

// Span equality of two integer bases via ranks.
bool same_span(const std::vector<IntVector>& a, const std::vector<IntVector>& b, std::size_t dim) {
  auto to_matrix = [dim](const std::vector<IntVector>& rows) {
    QMatrix m(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
    return m;
  };
  std::vector<IntVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = a.empty() ? 0 : rank(to_matrix(a));
  const std::size_t rb = b.empty() ? 0 : rank(to_matrix(b));
  const std::size_t rab = both.empty() ? 0 : rank(to_matrix(both));
  return ra == rb && rb == rab;
}

QMatrix stack_with_ones(const ZMatrix& m) {
  QMatrix out(m.rows() + 1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) out(m.rows(), j) = 1;
  return out;
}

}  // namespace

TEST(IncidenceMatrix, SinglePoint) {
  std::vector<ProjLine> ls{ProjLine(0L, 1L, 0L)};
  for (long j = 0; j < 4; ++j) ls.emplace_back(1L, -j, 0L);
  const auto lat = build_lattice(MultiArrangement(ls));
  const auto J = incidence_matrix(lat, {0});
  EXPECT_EQ(J.entries, ZMatrix(1, 5, Integer(1)));
  EXPECT_EQ(cartan_matrix(J), ZMatrix(5, 5));
  EXPECT_EQ(block_decompose(cartan_matrix(J)).size(), 5u);
}

TEST(IncidenceMatrix, CevaThreeBase) {
  const auto lat = build_lattice(ceva_local(3));
  // Base locus: the 9 points off the coordinate triangle.
  std::vector<std::size_t> X;
  for (std::size_t p = 0; p < lat.size(); ++p) {
    const auto& c = lat.point(p).coords->coords();
    if (!c[0].is_zero() && !c[1].is_zero() && !c[2].is_zero()) X.push_back(p);
  }
  ASSERT_EQ(X.size(), 9u);
  const auto J = incidence_matrix(lat, X);
  EXPECT_EQ(J.lines.size(), 9u);
  for (std::size_t r = 0; r < 9; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < 9; ++c) s += J.entries(r, c);
    EXPECT_EQ(s, 3);
  }
  const auto Q = cartan_matrix(J);
  const auto blocks = block_decompose(Q);
  ASSERT_EQ(blocks.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(blocks[i], (std::vector<std::size_t>{3 * i, 3 * i + 1, 3 * i + 2}));
    EXPECT_EQ(Q.submatrix(blocks[i], blocks[i]), kA2);
  }
}

TEST(IncidenceMatrix, RejectsDoublePointsAndEmptyBase) {
  const auto lat = build_lattice(
      MultiArrangement({ProjLine(1L, 0L, 0L), ProjLine(0L, 1L, 0L), ProjLine(0L, 0L, 1L)}));
  EXPECT_THROW(incidence_matrix(lat, {0}), InvalidInput);
  EXPECT_THROW(incidence_matrix(lat, {}), InvalidInput);
}

TEST(CartanMatrix, LineThroughTwoPrivatePoints) {
  // One column, two points: Q = [2 - 1].
  IncMatrix J{{0, 1}, {0}, ZMatrix{{1}, {1}}};
  EXPECT_EQ(cartan_matrix(J), ZMatrix{{1}});
}

TEST(Vinberg, Examples) {
  auto zero = vinberg_classify(ZMatrix{{0}});
  EXPECT_EQ(zero.type, CartanType::Affine);
  EXPECT_EQ(zero.kernel, IntVector{Integer(1)});
  auto a2 = vinberg_classify(kA2);
  EXPECT_EQ(a2.type, CartanType::Affine);
  EXPECT_EQ(a2.kernel, (IntVector{Integer(1), Integer(1), Integer(1)}));
  EXPECT_EQ(vinberg_classify(ZMatrix{{1}}).type, CartanType::Finite);
  EXPECT_EQ(vinberg_classify(ZMatrix{{2, -1}, {-1, 2}}).type, CartanType::Finite);
  EXPECT_EQ(vinberg_classify(ZMatrix{{2, -3}, {-3, 2}}).type, CartanType::Indefinite);
  EXPECT_EQ(vinberg_classify(ZMatrix{{-1}}).type, CartanType::Indefinite);
  // affine D4-tilde: centre 2, four leaves
  ZMatrix d4(5, 5);
  for (std::size_t i = 0; i < 5; ++i) d4(i, i) = 2;
  for (std::size_t i = 1; i < 5; ++i) d4(0, i) = d4(i, 0) = -1;
  auto d = vinberg_classify(d4);
  EXPECT_EQ(d.type, CartanType::Affine);
  EXPECT_EQ(d.kernel, (IntVector{Integer(2), Integer(1), Integer(1), Integer(1), Integer(1)}));
  EXPECT_THROW(vinberg_classify(ZMatrix{{2, 1}, {1, 2}}), InvalidInput);
}

TEST(Vinberg, StableUnderPermutation) {
  std::mt19937_64 rng(11);
  const std::vector<ZMatrix> samples{
      kA2, ZMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, ZMatrix{{2, -2, 0}, {-2, 2, -1}, {0, -1, 3}},
      ZMatrix{{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}};
  for (const auto& m : samples) {
    const auto base = vinberg_classify(m);
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (int t = 0; t < 10; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto c = vinberg_classify(m.submatrix(perm, perm));
      EXPECT_EQ(c.type, base.type);
      if (base.type == CartanType::Affine)
        for (std::size_t i = 0; i < perm.size(); ++i) EXPECT_EQ(c.kernel[i], base.kernel[perm[i]]);
    }
  }
}

// ker(Q) n ker(E) = ker(J) n ker(E) for every multiple-point subset of a few
// small lattices.
TEST(CartanProperty, KernelIdentity) {
  for (unsigned d : {2u, 3u}) {
    const auto lat = build_lattice(ceva_local(d));
    const auto mp = multiple_points(lat);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << mp.size()); mask += (d == 3 ? 37 : 1)) {
      std::vector<std::size_t> X;
      for (std::size_t i = 0; i < mp.size(); ++i)
        if (mask >> i & 1) X.push_back(mp[i]);
      const auto J = incidence_matrix(lat, X);
      const auto Q = cartan_matrix(J);
      const auto kq = rational_kernel(stack_with_ones(Q));
      const auto kj = rational_kernel(stack_with_ones(J.entries));
      ASSERT_TRUE(same_span(kq, kj, J.lines.size())) << "mask " << mask;
    }
  }
}

TEST(CartanProperty, AffineDifferencesLieInKerJ) {
  const auto lat = build_lattice(ceva_local(3));
  std::vector<std::size_t> X;
  for (std::size_t p = 0; p < lat.size(); ++p) {
    const auto& c = lat.point(p).coords->coords();
    if (!c[0].is_zero() && !c[1].is_zero() && !c[2].is_zero()) X.push_back(p);
  }
  const auto dec = cartan_decompose(lat, X);
  ASSERT_TRUE(dec.all_affine());
  std::vector<IntVector> full;
  for (const auto& b : dec.blocks) {
    IntVector u(dec.J.lines.size(), Integer(0));
    for (std::size_t i = 0; i < b.members.size(); ++i) u[b.members[i]] = b.classification.kernel[i];
    full.push_back(u);
  }
  for (std::size_t i = 1; i < full.size(); ++i) {
    IntVector diff(full[0].size());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = full[i][j] - full[0][j];
    for (const auto& x : multiply(dec.J.entries, diff)) EXPECT_EQ(x, 0);
  }
}
