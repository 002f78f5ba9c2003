#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opflow/operation.hpp"

namespace opflow {

/// A finite-dimensional module together with a binary operation μ ∈ C².
struct AlgebraSpec {
  std::size_t dim;
  Operation mu;
  std::string name;

  AlgebraSpec(Operation mu_, std::string name_ = {}) : dim(mu_.dim()), mu(std::move(mu_)), name(std::move(name_)) {
    if (mu.degree() != 2) throw DomainError("an algebra needs a binary operation, got degree " +
                                            std::to_string(mu.degree()));
  }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Builds μ from a callback table(a, b, k) = e_k-coefficient of μ(e_a, e_b).
template <class Table>
Operation binary_from_table(std::size_t dim, Table&& table) {
  std::vector<Scalar> c(dim * dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t k = 0; k < dim; ++k) c[(a * dim + b) * dim + k] = table(a, b, k);
  return Operation(dim, 2, std::move(c));
}

/// One-dimensional module with μ(e, e) = m·e.
inline AlgebraSpec scalar_model(const Scalar& m = 1) {
  return AlgebraSpec(Operation(1, 2, {m}), "scalar");
}

/// K[ε]/(ε²) in the basis e0 = 1, e1 = ε.
inline AlgebraSpec dual_numbers() {
  return AlgebraSpec(binary_from_table(2,
                                       [](std::size_t a, std::size_t b, std::size_t k) -> Scalar {
                                         return (a + b <= 1 && k == a + b) ? 1 : 0;
                                       }),
                     "dual_numbers");
}

/// Full matrix algebra M_n(K) in the basis E_{rc} ↦ index r·n + c.
inline AlgebraSpec matrix_algebra(std::size_t n) {
  const std::size_t d = n * n;
  return AlgebraSpec(binary_from_table(d,
                                       [n](std::size_t a, std::size_t b, std::size_t k) -> Scalar {
                                         const std::size_t ar = a / n, ac = a % n, br = b / n, bc = b % n;
                                         return (ac == br && k == ar * n + bc) ? 1 : 0;
                                       }),
                     "mat" + std::to_string(n));
}

}  // namespace opflow
