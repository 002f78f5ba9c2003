#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "opflow/operation.hpp"

namespace opflow {

enum class RegionKind { B, A, G };

inline const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::B: return "B";
    case RegionKind::A: return "A";
    case RegionKind::G: return "G";
  }
  return "?";
}

/// Index pairs (i, j) classifying the iterated composition (h ∘_i f) ∘_j g.
///
///   B: 1 <= i <= |h|,      0 <= j <= i - 1        (g lands left of f)
///   A: 0 <= i <= |h|,      i <= j <= i + |f|      (g lands inside f)
///   G: 0 <= i <= |h| - 1,  i + f <= j <= |f| + |h| (g lands right of f)
///
/// Pairs are listed in lexicographic order.
struct IndexRegion {
  RegionKind kind;
  std::vector<std::pair<int, int>> pairs;
};

inline IndexRegion region(RegionKind kind, int deg_h, int deg_f) {
  if (deg_h < 1) throw DomainError("index regions need deg h >= 1");
  const int rh = deg_h - 1;
  const int rf = deg_f - 1;
  IndexRegion out{kind, {}};
  switch (kind) {
    case RegionKind::B:
      for (int i = 1; i <= rh; ++i)
        for (int j = 0; j <= i - 1; ++j) out.pairs.emplace_back(i, j);
      break;
    case RegionKind::A:
      for (int i = 0; i <= rh; ++i)
        for (int j = i; j <= i + rf; ++j) out.pairs.emplace_back(i, j);
      break;
    case RegionKind::G:
      for (int i = 0; i <= rh - 1; ++i)
        for (int j = i + deg_f; j <= rf + rh; ++j) out.pairs.emplace_back(i, j);
      break;
  }
  return out;
}

struct RelationKey {
  RegionKind kind;
  int i;
  int j;
  friend auto operator<=>(const RelationKey&, const RelationKey&) = default;
};

/// For each (i, j) in B, A and G, the difference between (h ∘_i f) ∘_j g and
/// the right-hand side of the corresponding composition relation:
///
///   B: (-1)^{|f||g|} (h ∘_j g) ∘_{i+|g|} f
///   A: h ∘_i (f ∘_{j-i} g)
///   G: (-1)^{|f||g|} (h ∘_{j-|f|} g) ∘_i f
///
/// Every residual vanishes in an operad.
inline std::map<RelationKey, Operation> composition_relation_residuals(const Operation& h, const Operation& f,
                                                                       const Operation& g) {
  if (h.dim() != f.dim() || f.dim() != g.dim()) throw DimensionError("composition relations need equal dims");
  if (h.degree() < 1 || f.degree() < 1 || g.degree() < 1) {
    throw DomainError("composition relations need degrees >= 1");
  }
  const int rf = f.reduced_degree();
  const int rg = g.reduced_degree();
  const int swap_sign = parity_sign(static_cast<long long>(rf) * rg);
  std::map<RelationKey, Operation> out;
  for (RegionKind kind : {RegionKind::B, RegionKind::A, RegionKind::G}) {
    for (auto [i, j] : region(kind, h.degree(), f.degree()).pairs) {
      Operation lhs = partial_compose(partial_compose(h, f, i), g, j);
      Operation rhs = [&] {
        switch (kind) {
          case RegionKind::B: return Scalar(swap_sign) * partial_compose(partial_compose(h, g, j), f, i + rg);
          case RegionKind::A: return partial_compose(h, partial_compose(f, g, j - i), i);
          case RegionKind::G: return Scalar(swap_sign) * partial_compose(partial_compose(h, g, j - rf), f, i);
        }
        throw DomainError("unknown region");
      }();
      out.emplace(RelationKey{kind, i, j}, lhs - rhs);
    }
  }
  return out;
}

}  // namespace opflow
