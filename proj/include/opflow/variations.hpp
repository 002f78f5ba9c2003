#pragma once

#include "opflow/cohomology.hpp"

namespace opflow {

/// δ̄⟨f|g⟩ = δ⟨f|g⟩ - ⟨f|δg⟩ - (-1)^{|g|} ⟨δf|g⟩.
inline Operation variation_flow1(const Operation& mu, const Operation& f, const Operation& g) {
  Operation r = coboundary(mu, total_compose(f, g));
  r -= total_compose(f, coboundary(mu, g));
  r -= Scalar(parity_sign(g.reduced_degree())) * total_compose(coboundary(mu, f), g);
  return r;
}

/// δ̄⟨h|fg⟩ = δ⟨h|fg⟩ - ⟨h|f δg⟩ - (-1)^{|g|} ⟨h|δf g⟩ - (-1)^{|g|+|f|} ⟨δh|fg⟩.
inline Operation variation_flow2(const Operation& mu, const Operation& h, const Operation& f, const Operation& g) {
  Operation r = coboundary(mu, flow2(h, f, g));
  r -= flow2(h, f, coboundary(mu, g));
  r -= Scalar(parity_sign(g.reduced_degree())) * flow2(h, coboundary(mu, f), g);
  r -= Scalar(parity_sign(g.reduced_degree() + f.reduced_degree())) * flow2(coboundary(mu, h), f, g);
  return r;
}

/// δ̄_⌣(f⊗g) = δ(f⌣g) - f⌣δg - (-1)^g δf⌣g (full degree of g).
inline Operation variation_cup(const Operation& mu, const Operation& f, const Operation& g) {
  Operation r = coboundary(mu, cup(mu, f, g));
  r -= cup(mu, f, coboundary(mu, g));
  r -= Scalar(parity_sign(g.degree())) * cup(mu, coboundary(mu, f), g);
  return r;
}

}  // namespace opflow
