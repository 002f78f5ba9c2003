#pragma once

// Residuals of the structural identities of operadic flows. Each function
// evaluates both sides independently and returns lhs - rhs; every residual
// is the zero operation for all admissible inputs.

#include "opflow/variations.hpp"

namespace opflow::identities {

namespace detail {
inline Scalar sgn(long long e) { return Scalar(parity_sign(e)); }
}  // namespace detail

/// 𝕀 ∘_0 f - f, followed by f ∘_i 𝕀 - f for each slot i.
inline std::vector<Operation> unit_residuals(const Operation& f) {
  const Operation id = unit(f.dim());
  std::vector<Operation> out{partial_compose(id, f, 0) - f};
  for (int i = 0; i <= f.reduced_degree(); ++i) out.push_back(partial_compose(f, id, i) - f);
  return out;
}

/// (h,f,g) - ⟨h|fg⟩ - (-1)^{|f||g|} ⟨h|gf⟩.
inline Operation getzler(const Operation& h, const Operation& f, const Operation& g) {
  return composition_associator(h, f, g) - flow2(h, f, g) -
         detail::sgn(1LL * f.reduced_degree() * g.reduced_degree()) * flow2(h, g, f);
}

/// (h,f,g) - (-1)^{|f||g|} (h,g,f).
inline Operation vinberg(const Operation& h, const Operation& f, const Operation& g) {
  return composition_associator(h, f, g) -
         detail::sgn(1LL * f.reduced_degree() * g.reduced_degree()) * composition_associator(h, g, f);
}

/// J(f⊗g⊗h) minus its expansion through composition associators.
inline Operation generalized_jacobi(const Operation& f, const Operation& g, const Operation& h) {
  const long long rf = f.reduced_degree(), rg = g.reduced_degree(), rh = h.reduced_degree();
  using detail::sgn;
  Operation rhs = sgn(rf * rh) * (composition_associator(f, g, h) - sgn(rg * rh) * composition_associator(f, h, g));
  rhs += sgn(rg * rf) * (composition_associator(g, h, f) - sgn(rh * rf) * composition_associator(g, f, h));
  rhs += sgn(rh * rg) * (composition_associator(h, f, g) - sgn(rf * rg) * composition_associator(h, g, f));
  return jacobiator(f, g, h) - rhs;
}

/// J(f⊗g⊗h) itself (Lie admissibility: always zero).
inline Operation jacobi(const Operation& f, const Operation& g, const Operation& h) { return jacobiator(f, g, h); }

/// ([R_f, R_g] - R_{[g,f]}) applied to x, with [R_f, R_g] = R_f R_g - (-1)^{|f||g|} R_g R_f.
inline Operation r_commutator(const Operation& f, const Operation& g, const Operation& x) {
  Operation lhs = right_translation(f, right_translation(g, x)) -
                  detail::sgn(1LL * f.reduced_degree() * g.reduced_degree()) *
                      right_translation(g, right_translation(f, x));
  return lhs - right_translation(bracket(g, f), x);
}

/// R_f[g,h] - (-1)^{|f||h|}[R_f g, h] - [g, R_f h].
inline Operation r_derivation(const Operation& f, const Operation& g, const Operation& h) {
  return right_translation(f, bracket(g, h)) -
         detail::sgn(1LL * f.reduced_degree() * h.reduced_degree()) * bracket(right_translation(f, g), h) -
         bracket(g, right_translation(f, h));
}

/// δ[f,g] - (-1)^{|g|}[δf,g] - [f,δg].
inline Operation right_derivation(const Operation& mu, const Operation& f, const Operation& g) {
  return coboundary(mu, bracket(f, g)) -
         detail::sgn(g.reduced_degree()) * bracket(coboundary(mu, f), g) - bracket(f, coboundary(mu, g));
}

/// δ(δf) + δ_{μ²} f, where δ_{μ²} f := -[f, μ²].
inline Operation delta_squared(const Operation& mu, const Operation& f) {
  return coboundary(mu, coboundary(mu, f)) - bracket(f, associator(mu));
}

/// coboundary via brackets minus the explicit Hochschild expansion.
inline Operation hochschild_agreement(const Operation& mu, const Operation& f) {
  return coboundary(mu, f) - hochschild_coboundary(mu, f);
}

/// ⟨f⌣g|h⟩ - f⌣⟨g|h⟩ - (-1)^{|h|g} ⟨f|h⟩⌣g.
inline Operation right_leibniz(const Operation& mu, const Operation& f, const Operation& g, const Operation& h) {
  return total_compose(cup(mu, f, g), h) - cup(mu, f, total_compose(g, h)) -
         detail::sgn(1LL * h.reduced_degree() * g.degree()) * cup(mu, total_compose(f, h), g);
}

/// f⌣g - (-1)^f ⟨μ|fg⟩.
inline Operation cup_as_flow(const Operation& mu, const Operation& f, const Operation& g) {
  return cup(mu, f, g) - detail::sgn(f.degree()) * flow2(mu, f, g);
}

/// (f⌣g)⌣h - f⌣(g⌣h) - (-1)^g ⟨μ²|fgh⟩.
///
/// The factor (-1)^g (full degree) is forced by the partial-composition
/// signs: with f⌣g = (-1)^{fg} μ∘(f⊗g), the single simplex term of
/// ⟨μ²|fgh⟩ carries (-1)^{fg+fh+gh-g} against (-1)^{fg+fh+gh} on the left.
inline Operation cup_associator(const Operation& mu, const Operation& f, const Operation& g, const Operation& h) {
  return cup(mu, cup(mu, f, g), h) - cup(mu, f, cup(mu, g, h)) -
         detail::sgn(g.degree()) * flow3(associator(mu), f, g, h);
}

/// (-1)^{|g|} δ̄⟨f|g⟩ - (f⌣g - (-1)^{fg} g⌣f).
inline Operation stokes1(const Operation& mu, const Operation& f, const Operation& g) {
  return detail::sgn(g.reduced_degree()) * variation_flow1(mu, f, g) -
         (cup(mu, f, g) - detail::sgn(1LL * f.degree() * g.degree()) * cup(mu, g, f));
}

/// (-1)^{|g|} δ̄⟨h|fg⟩ - (⟨h|f⟩⌣g + (-1)^{|h|f} f⌣⟨h|g⟩ - ⟨h|f⌣g⟩).
inline Operation stokes2(const Operation& mu, const Operation& h, const Operation& f, const Operation& g) {
  Operation rhs = cup(mu, total_compose(h, f), g) +
                  detail::sgn(1LL * h.reduced_degree() * f.degree()) * cup(mu, f, total_compose(h, g)) -
                  total_compose(h, cup(mu, f, g));
  return detail::sgn(g.reduced_degree()) * variation_flow2(mu, h, f, g) - rhs;
}

/// (-1)^{|g|} δ̄⟨h|fg⟩ - ([h,f]⌣g + (-1)^{|h|f} f⌣[h,g] - [h,f⌣g]).
inline Operation stokes2_bracket(const Operation& mu, const Operation& h, const Operation& f, const Operation& g) {
  Operation rhs = cup(mu, bracket(h, f), g) +
                  detail::sgn(1LL * h.reduced_degree() * f.degree()) * cup(mu, f, bracket(h, g)) -
                  bracket(h, cup(mu, f, g));
  return detail::sgn(g.reduced_degree()) * variation_flow2(mu, h, f, g) - rhs;
}

/// (-1)^{|g|} δ̄_⌣(f⊗g) - ⟨μ²|fg⟩. The prefactor uses the reduced degree,
/// like the other two Stokes laws; with (-1)^g the two sides differ by a sign.
inline Operation stokes3(const Operation& mu, const Operation& f, const Operation& g) {
  return detail::sgn(g.reduced_degree()) * variation_cup(mu, f, g) - flow2(associator(mu), f, g);
}

/// [μ,μ] - 2μ².
inline Operation bracket_square(const Operation& mu) { return bracket(mu, mu) - Scalar(2) * associator(mu); }

}  // namespace opflow::identities
