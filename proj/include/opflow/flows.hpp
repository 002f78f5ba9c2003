#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "opflow/operation.hpp"
#include "opflow/regions.hpp"

namespace opflow {

// Sign conventions. deg f is the arity; |f| = deg f - 1 is the reduced
// degree. Exponents written (-1)^{fg} use full degrees, (-1)^{|f||g|} use
// reduced ones. Each function states which it uses.

/// ⟨h⟩ = {i : 0 <= i <= |h|}.
inline std::vector<int> simplex1(int deg_h) {
  std::vector<int> out;
  for (int i = 0; i <= deg_h - 1; ++i) out.push_back(i);
  return out;
}

/// ⟨hf⟩ = G(h ⊗ f).
inline std::vector<std::array<int, 2>> simplex2(int deg_h, int deg_f) {
  std::vector<std::array<int, 2>> out;
  if (deg_h < 1) return out;
  for (auto [i, j] : region(RegionKind::G, deg_h, deg_f).pairs) out.push_back({i, j});
  return out;
}

/// ⟨hfg⟩: 0 <= i <= |h|-2, i+f <= j <= |h|+|f|-1, j+g <= k <= |h|+|f|+|g|.
/// Equivalently, f, g, b placed into three distinct slots of h, in order.
inline std::vector<std::array<int, 3>> simplex3(int deg_h, int deg_f, int deg_g) {
  const int rh = deg_h - 1, rf = deg_f - 1, rg = deg_g - 1;
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i <= rh - 2; ++i)
    for (int j = i + deg_f; j <= rh + rf - 1; ++j)
      for (int k = j + deg_g; k <= rh + rf + rg; ++k) out.push_back({i, j, k});
  return out;
}

namespace detail {
inline void require_dims(std::initializer_list<const Operation*> ops) {
  const std::size_t d = (*ops.begin())->dim();
  for (auto* o : ops) {
    if (o->dim() != d) throw DimensionError("operands live over different module dimensions");
  }
}

inline Operation zero_of_degree(std::size_t dim, int degree, const char* what) {
  if (degree < 0) throw EmptyFlowError(std::string(what) + " has negative target degree " + std::to_string(degree));
  return Operation::zero(dim, degree);
}
}  // namespace detail

/// ⟨h|f⟩ = h ∘ f = Σ_{i ∈ ⟨h⟩} h ∘_i f, of degree h + |f|.
inline Operation total_compose(const Operation& h, const Operation& f) {
  detail::require_dims({&h, &f});
  if (h.degree() == 0) throw EmptyFlowError("total composition out of a degree-0 operation");
  Operation acc = Operation::zero(h.dim(), h.degree() + f.degree() - 1);
  for (int i : simplex1(h.degree())) acc += partial_compose(h, f, i);
  return acc;
}

/// ⟨h|fg⟩ = Σ_{(i,j) ∈ ⟨hf⟩} (h ∘_i f) ∘_j g. Empty simplex gives zero.
inline Operation flow2(const Operation& h, const Operation& f, const Operation& g) {
  detail::require_dims({&h, &f, &g});
  Operation acc = detail::zero_of_degree(h.dim(), h.degree() + f.degree() + g.degree() - 2, "flow ⟨h|fg⟩");
  for (auto [i, j] : simplex2(h.degree(), f.degree())) acc += partial_compose(partial_compose(h, f, i), g, j);
  return acc;
}

/// ⟨h|fgb⟩ = Σ_{(i,j,k) ∈ ⟨hfg⟩} ((h ∘_i f) ∘_j g) ∘_k b.
inline Operation flow3(const Operation& h, const Operation& f, const Operation& g, const Operation& b) {
  detail::require_dims({&h, &f, &g, &b});
  Operation acc = detail::zero_of_degree(h.dim(), h.degree() + f.degree() + g.degree() + b.degree() - 3,
                                         "flow ⟨h|fgb⟩");
  for (auto [i, j, k] : simplex3(h.degree(), f.degree(), g.degree())) {
    acc += partial_compose(partial_compose(partial_compose(h, f, i), g, j), b, k);
  }
  return acc;
}

/// f ⌣ g = (-1)^f (μ ∘_0 f) ∘_f g (full degree in the exponent), of degree f + g.
inline Operation cup(const Operation& mu, const Operation& f, const Operation& g) {
  if (mu.degree() != 2) throw DomainError("cup product needs a binary μ, got degree " + std::to_string(mu.degree()));
  detail::require_dims({&mu, &f, &g});
  Operation r = partial_compose(partial_compose(mu, f, 0), g, f.degree());
  if (parity_sign(f.degree()) < 0) r *= Scalar(-1);
  return r;
}

/// μ² = μ ∘ μ.
inline Operation associator(const Operation& mu) {
  if (mu.degree() != 2) throw DomainError("associator needs a binary μ, got degree " + std::to_string(mu.degree()));
  return total_compose(mu, mu);
}

/// (h, f, g) = (h ∘ f) ∘ g - h ∘ (f ∘ g), the associator of the composition algebra.
inline Operation composition_associator(const Operation& h, const Operation& f, const Operation& g) {
  return total_compose(total_compose(h, f), g) - total_compose(h, total_compose(f, g));
}

/// [f, g] = ⟨f|g⟩ - (-1)^{|f||g|} ⟨g|f⟩ (reduced degrees), of degree f + g - 1.
/// A degree-0 argument contributes no ⟨·|·⟩ term on its own side; two
/// degree-0 arguments have no bracket.
inline Operation bracket(const Operation& f, const Operation& g) {
  detail::require_dims({&f, &g});
  if (f.degree() == 0 && g.degree() == 0) throw DomainError("bracket of two degree-0 operations is undefined");
  const int target = f.degree() + g.degree() - 1;
  Operation r = f.degree() > 0 ? total_compose(f, g) : Operation::zero(f.dim(), target);
  if (g.degree() > 0) {
    Operation gf = total_compose(g, f);
    if (parity_sign(static_cast<long long>(f.reduced_degree()) * g.reduced_degree()) > 0) {
      r -= gf;
    } else {
      r += gf;
    }
  }
  return r;
}

/// J(f⊗g⊗h) = (-1)^{|f||h|}[[f,g],h] + (-1)^{|g||f|}[[g,h],f] + (-1)^{|h||g|}[[h,f],g].
inline Operation jacobiator(const Operation& f, const Operation& g, const Operation& h) {
  const long long rf = f.reduced_degree(), rg = g.reduced_degree(), rh = h.reduced_degree();
  Operation r = Scalar(parity_sign(rf * rh)) * bracket(bracket(f, g), h);
  r += Scalar(parity_sign(rg * rf)) * bracket(bracket(g, h), f);
  r += Scalar(parity_sign(rh * rg)) * bracket(bracket(h, f), g);
  return r;
}

/// R_f g = [g, f].
inline Operation right_translation(const Operation& f, const Operation& g) { return bracket(g, f); }

}  // namespace opflow
