#pragma once

// Q(X) = J^T J - E for a candidate base locus X, its indecomposable blocks,
// and the finite / affine / indefinite trichotomy of each block.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "mnet/arrangement.hpp"
#include "mnet/errors.hpp"
#include "mnet/linalg.hpp"

namespace mnet {

/// Point-line incidence of X against L' (the lines meeting X).
struct IncMatrix {
  std::vector<std::size_t> points;  // lattice indices of X, sorted
  std::vector<std::size_t> lines;   // L' as sorted line indices
  ZMatrix entries;                  // |X| x |L'|, 0/1
};

inline IncMatrix incidence_matrix(const IncidenceLattice& lat, std::vector<std::size_t> X) {
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  if (X.empty()) throw InvalidInput("base locus is empty");
  std::vector<char> used(lat.line_count(), 0);
  for (std::size_t p : X) {
    if (p >= lat.size()) throw InvalidInput("base point index " + std::to_string(p) + " out of range");
    if (lat.point(p).multiplicity() < 3)
      throw InvalidInput("base point " + lat.point(p).str() + " is not a multiple point");
    for (std::size_t l : lat.point(p).lines) used[l] = 1;
  }
  IncMatrix J;
  J.points = X;
  for (std::size_t l = 0; l < used.size(); ++l)
    if (used[l]) J.lines.push_back(l);
  J.entries = ZMatrix(X.size(), J.lines.size());
  for (std::size_t r = 0; r < X.size(); ++r)
    for (std::size_t c = 0; c < J.lines.size(); ++c)
      if (lat.point(X[r]).contains(J.lines[c])) J.entries(r, c) = 1;
  return J;
}

inline ZMatrix cartan_matrix(const IncMatrix& J) {
  const std::size_t n = J.lines.size();
  ZMatrix Q(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Integer s = -1;
      for (std::size_t r = 0; r < J.points.size(); ++r) s += J.entries(r, a) * J.entries(r, b);
      Q(a, b) = s;
      Q(b, a) = s;
    }
  return Q;
}

/// Connected components of the off-diagonal support, each sorted, ordered by
/// smallest member.
template <typename T>
std::vector<std::vector<std::size_t>> block_decompose(const Matrix<T>& Q) {
  const std::size_t n = Q.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (Q(a, b) != 0 || Q(b, a) != 0) {
        const std::size_t ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t r = find(a);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(a);
  }
  return blocks;
}

enum class CartanType { Finite, Affine, Indefinite };

inline const char* to_string(CartanType t) {
  switch (t) {
    case CartanType::Finite: return "finite";
    case CartanType::Affine: return "affine";
    case CartanType::Indefinite: return "indefinite";
  }
  return "?";
}

struct Classification {
  CartanType type = CartanType::Indefinite;
  IntVector kernel;  // primitive positive kernel vector when affine
};

inline Classification vinberg_classify(const ZMatrix& block) {
  if (!block.is_symmetric()) throw InvalidInput("generalized Cartan matrix must be symmetric");
  for (std::size_t a = 0; a < block.rows(); ++a)
    for (std::size_t b = 0; b < block.cols(); ++b)
      if (a != b && block(a, b) > 0)
        throw InvalidInput("generalized Cartan matrix has a positive off-diagonal entry");
  const auto minors = leading_principal_minors(block);
  if (std::all_of(minors.begin(), minors.end(), [](const Integer& m) { return m > 0; }))
    return {CartanType::Finite, {}};
  auto ker = integer_kernel(block);
  if (ker.size() == 1 &&
      std::all_of(ker[0].begin(), ker[0].end(), [](const Integer& x) { return x > 0; }))
    return {CartanType::Affine, std::move(ker[0])};
  return {CartanType::Indefinite, {}};
}

struct CartanBlock {
  std::vector<std::size_t> members;  // positions within L'
  std::vector<std::size_t> lines;    // global line indices
  ZMatrix matrix;
  Classification classification;
};

struct CartanDecomp {
  IncMatrix J;
  ZMatrix Q;
  std::vector<CartanBlock> blocks;

  bool all_affine() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const CartanBlock& b) {
      return b.classification.type == CartanType::Affine;
    });
  }
};

inline CartanDecomp cartan_decompose(const IncidenceLattice& lat, const std::vector<std::size_t>& X) {
  CartanDecomp out;
  out.J = incidence_matrix(lat, X);
  out.Q = cartan_matrix(out.J);
  for (auto& members : block_decompose(out.Q)) {
    CartanBlock b;
    b.matrix = out.Q.submatrix(members, members);
    for (std::size_t m : members) b.lines.push_back(out.J.lines[m]);
    b.members = std::move(members);
    b.classification = vinberg_classify(b.matrix);
    out.blocks.push_back(std::move(b));
  }
  return out;
}

}  // namespace mnet
