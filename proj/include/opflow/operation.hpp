#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opflow/errors.hpp"
#include "opflow/rng.hpp"
#include "opflow/scalar.hpp"

namespace opflow {

/// Homogeneous element of the endomorphism operad of K^d: a multilinear map
/// (K^d)^{⊗n} -> K^d with n = degree().
///
/// Coefficients are stored densely. The entry for inputs (j1, ..., jn) and
/// output k sits at flat index ((j1·d + j2)·d + ... + jn)·d + k, so the
/// output index varies fastest and j1 slowest. A degree-0 operation is a
/// vector of K^d.
class Operation {
 public:
  Operation(std::size_t dim, int degree, std::vector<Scalar> coeffs)
      : dim_(dim), degree_(degree), coeffs_(std::move(coeffs)) {
    if (dim_ == 0) throw DomainError("module dimension must be positive");
    if (degree_ < 0) throw DomainError("operation degree must be non-negative");
    const std::size_t expected = checked_pow(dim_, degree_ + 1);
    if (coeffs_.size() != expected) {
      throw DimensionError("expected " + std::to_string(expected) + " coefficients for dim " +
                           std::to_string(dim_) + ", degree " + std::to_string(degree_) + "; got " +
                           std::to_string(coeffs_.size()));
    }
    for (auto& c : coeffs_) c.canonicalize();
  }

  static Operation zero(std::size_t dim, int degree) {
    if (dim == 0) throw DomainError("module dimension must be positive");
    if (degree < 0) throw DomainError("operation degree must be non-negative");
    return Operation(dim, degree, std::vector<Scalar>(checked_pow(dim, degree + 1)));
  }

  std::size_t dim() const { return dim_; }
  int degree() const { return degree_; }
  /// Desuspended degree |f| = deg f - 1; equals -1 for vectors.
  int reduced_degree() const { return degree_ - 1; }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const Scalar> coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t flat) const { return coeffs_[flat]; }

  /// Coefficient of e_out in f(e_{inputs[0]}, ..., e_{inputs[n-1]}).
  const Scalar& at(std::span<const std::size_t> inputs, std::size_t out) const {
    if (inputs.size() != static_cast<std::size_t>(degree_)) throw DimensionError("arity mismatch in Operation::at");
    std::size_t flat = 0;
    for (auto j : inputs) flat = flat * dim_ + j;
    return coeffs_[flat * dim_ + out];
  }
  const Scalar& at(std::initializer_list<std::size_t> inputs, std::size_t out) const {
    return at(std::span<const std::size_t>(inputs.begin(), inputs.size()), out);
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == 0; });
  }

  Operation& operator+=(const Operation& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Operation& operator-=(const Operation& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  Operation& operator*=(Scalar s) {
    s.canonicalize();
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Operation operator+(Operation a, const Operation& b) { return a += b; }
  friend Operation operator-(Operation a, const Operation& b) { return a -= b; }
  friend Operation operator*(const Scalar& s, Operation a) { return a *= s; }
  friend Operation operator*(Operation a, const Scalar& s) { return a *= s; }
  friend Operation operator-(Operation a) { return a *= Scalar(-1); }

  friend bool operator==(const Operation& a, const Operation& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same_shape(const Operation& o, const char* op) const {
    if (dim_ != o.dim_ || degree_ != o.degree_) {
      throw DimensionError(std::string("operands of '") + op + "' differ in shape: (dim " + std::to_string(dim_) +
                           ", deg " + std::to_string(degree_) + ") vs (dim " + std::to_string(o.dim_) + ", deg " +
                           std::to_string(o.degree_) + ")");
    }
  }

  std::size_t dim_;
  int degree_;
  std::vector<Scalar> coeffs_;
};

/// Validated construction from a flat coefficient list.
inline Operation make_operation(std::size_t dim, int degree, std::vector<Scalar> coeffs) {
  return Operation(dim, degree, std::move(coeffs));
}

/// The operadic unit: the identity map of K^d, an element of C^1.
inline Operation unit(std::size_t dim) {
  Operation id = Operation::zero(dim, 1);
  std::vector<Scalar> c(id.coeffs().begin(), id.coeffs().end());
  for (std::size_t j = 0; j < dim; ++j) c[j * dim + j] = 1;
  return Operation(dim, 1, std::move(c));
}

/// f ∘ (1^{⊗i} ⊗ g ⊗ 1^{⊗(|f|-i)}) without the operadic sign.
inline Operation substitute(const Operation& f, const Operation& g, int i) {
  if (f.dim() != g.dim()) {
    throw DimensionError("cannot compose operations over dims " + std::to_string(f.dim()) + " and " +
                         std::to_string(g.dim()));
  }
  if (f.degree() < 1) throw CompositionRangeError("a degree-0 operation has no input slots");
  if (i < 0 || i > f.reduced_degree()) {
    throw CompositionRangeError("slot " + std::to_string(i) + " outside [0, " + std::to_string(f.reduced_degree()) +
                                "]");
  }
  const std::size_t d = f.dim();
  const int m = f.degree();
  const int n = g.degree();
  const std::size_t pre = checked_pow(d, i);
  const std::size_t mid = checked_pow(d, n);
  const std::size_t suf = checked_pow(d, m - 1 - i);
  std::vector<Scalar> out(checked_pow(d, m + n));
  Scalar acc;
  for (std::size_t p = 0; p < pre; ++p) {
    for (std::size_t mi = 0; mi < mid; ++mi) {
      for (std::size_t s = 0; s < suf; ++s) {
        for (std::size_t k = 0; k < d; ++k) {
          acc = 0;
          for (std::size_t l = 0; l < d; ++l) {
            const Scalar& gv = g[mi * d + l];
            if (gv == 0) continue;
            acc += gv * f[((p * d + l) * suf + s) * d + k];
          }
          out[((p * mid + mi) * suf + s) * d + k] = acc;
        }
      }
    }
  }
  return Operation(d, m + n - 1, std::move(out));
}

/// Partial composition f ∘_i g = (-1)^{i|g|} f ∘ (1^{⊗i} ⊗ g ⊗ 1^{⊗(|f|-i)}),
/// for 0 <= i <= |f|. Result degree is deg f + deg g - 1.
inline Operation partial_compose(const Operation& f, const Operation& g, int i) {
  Operation r = substitute(f, g, i);
  if (parity_sign(static_cast<long long>(i) * g.reduced_degree()) < 0) r *= Scalar(-1);
  return r;
}

/// Exact multilinear evaluation f(args[0], ..., args[n-1]) in the standard basis.
inline std::vector<Scalar> apply(const Operation& f, std::span<const std::vector<Scalar>> args) {
  if (args.size() != static_cast<std::size_t>(f.degree())) {
    throw DimensionError("operation of degree " + std::to_string(f.degree()) + " applied to " +
                         std::to_string(args.size()) + " arguments");
  }
  const std::size_t d = f.dim();
  std::vector<Scalar> cur(f.coeffs().begin(), f.coeffs().end());
  for (const auto& a : args) {
    if (a.size() != d) throw DimensionError("argument vector has length " + std::to_string(a.size()));
    const std::size_t rest = cur.size() / d;
    std::vector<Scalar> next(rest);
    for (std::size_t j = 0; j < d; ++j) {
      if (a[j] == 0) continue;
      for (std::size_t r = 0; r < rest; ++r) next[r] += a[j] * cur[j * rest + r];
    }
    cur = std::move(next);
  }
  for (auto& c : cur) c.canonicalize();
  return cur;
}

/// Integer coefficients uniform in [-bound, bound], drawn from `rng` in flat order.
inline Operation random_operation(std::size_t dim, int degree, Lcg& rng, long coeff_bound) {
  if (coeff_bound < 1) throw DomainError("coefficient bound must be at least 1");
  std::vector<Scalar> c(checked_pow(dim, degree + 1));
  for (auto& x : c) x = static_cast<long>(rng.uniform(-coeff_bound, coeff_bound));
  return Operation(dim, degree, std::move(c));
}

inline Operation random_operation(std::size_t dim, int degree, std::uint64_t seed, long coeff_bound) {
  Lcg rng(seed);
  return random_operation(dim, degree, rng, coeff_bound);
}

}  // namespace opflow
