#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "opflow/algebra.hpp"
#include "opflow/flows.hpp"
#include "opflow/linalg.hpp"

namespace opflow {

/// δ_μ f = -[f, μ], of degree f + 1.
inline Operation coboundary(const Operation& mu, const Operation& f) {
  if (mu.degree() != 2) throw DomainError("coboundary needs a binary μ, got degree " + std::to_string(mu.degree()));
  return -bracket(f, mu);
}

/// The explicit Hochschild expansion
///   μ∘(1⊗f) - Σ_{i=0}^{|f|} (-1)^i f∘(1^{⊗i}⊗μ⊗1^{⊗(|f|-i)}) + (-1)^{|f|} μ∘(f⊗1),
/// built from unsigned substitutions.
inline Operation hochschild_coboundary(const Operation& mu, const Operation& f) {
  if (mu.degree() != 2) throw DomainError("coboundary needs a binary μ, got degree " + std::to_string(mu.degree()));
  Operation r = substitute(mu, f, 1);
  for (int i = 0; i <= f.reduced_degree(); ++i) {
    Operation t = substitute(f, mu, i);
    if (i % 2 == 0) {
      r -= t;
    } else {
      r += t;
    }
  }
  Operation tail = substitute(mu, f, 0);
  if (parity_sign(f.reduced_degree()) > 0) {
    r += tail;
  } else {
    r -= tail;
  }
  return r;
}

inline bool is_associative(const Operation& mu) { return associator(mu).is_zero(); }

/// Human-readable list of the nonzero associator entries, for diagnostics.
inline std::string describe_nonzero(const Operation& op, std::size_t max_items = 8) {
  std::ostringstream os;
  std::size_t shown = 0, total = 0;
  const std::size_t d = op.dim();
  for (std::size_t flat = 0; flat < op.size(); ++flat) {
    if (op[flat] == 0) continue;
    ++total;
    if (shown == max_items) continue;
    std::vector<std::size_t> idx(op.degree());
    std::size_t rest = flat / d;
    for (int s = op.degree() - 1; s >= 0; --s) {
      idx[s] = rest % d;
      rest /= d;
    }
    os << (shown ? ", " : "") << "[";
    for (std::size_t s = 0; s < idx.size(); ++s) os << (s ? "," : "") << idx[s];
    os << ";" << flat % d << "]=" << format_scalar(op[flat]);
    ++shown;
  }
  if (total > shown) os << ", ... (" << total << " nonzero entries)";
  return os.str();
}

inline void require_associative(const Operation& mu, const char* context) {
  const Operation a = associator(mu);
  if (!a.is_zero()) {
    throw AssociativityRequired(std::string(context) + " requires an associative μ; associator entries: " +
                                describe_nonzero(a));
  }
}

/// Matrix of δ_μ : C^n -> C^{n+1} in the standard tensor basis; column j is
/// the coboundary of the j-th basis cochain.
struct CoboundaryMatrix {
  int n;
  RationalMatrix entries;
};

inline CoboundaryMatrix coboundary_matrix(const Operation& mu, int n, std::size_t max_entries = kDefaultMaxEntries) {
  if (mu.degree() != 2) throw DomainError("coboundary needs a binary μ");
  if (n < 0) throw DomainError("cochain degree must be non-negative");
  const std::size_t d = mu.dim();
  const std::size_t cols = checked_pow(d, n + 1, max_entries);
  const std::size_t rows = checked_pow(d, n + 2, max_entries);
  RationalMatrix m(rows, cols, max_entries);
  std::vector<Scalar> basis(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    basis[j] = 1;
    const Operation col = coboundary(mu, Operation(d, n, basis));
    basis[j] = 0;
    for (std::size_t r = 0; r < rows; ++r) m(r, j) = col[r];
  }
  return CoboundaryMatrix{n, std::move(m)};
}

inline std::vector<Scalar> vectorize(const Operation& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

struct DegreeDim {
  int n;
  std::size_t dim;
  friend bool operator==(const DegreeDim&, const DegreeDim&) = default;
};

struct DegreeRank {
  int n;
  std::size_t rank;
  std::size_t nullity;
  friend bool operator==(const DegreeRank&, const DegreeRank&) = default;
};

struct CohomologyReport {
  AlgebraSpec algebra;
  std::vector<DegreeDim> dims;
  std::vector<DegreeRank> ranks;
  std::optional<std::vector<std::vector<Operation>>> representatives;
};

namespace detail {
/// Pivot columns, among `candidates`, of the matrix whose columns are
/// [spanning..., candidates...]: the candidates independent modulo `spanning`.
inline std::vector<std::size_t> independent_modulo(const std::vector<std::vector<Scalar>>& spanning,
                                                   const std::vector<std::vector<Scalar>>& candidates,
                                                   std::size_t len, std::size_t max_entries) {
  RationalMatrix m(len, spanning.size() + candidates.size(), max_entries);
  for (std::size_t c = 0; c < spanning.size(); ++c)
    for (std::size_t r = 0; r < len; ++r) m(r, c) = spanning[c][r];
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (std::size_t r = 0; r < len; ++r) m(r, spanning.size() + c) = candidates[c][r];
  std::vector<std::size_t> chosen;
  for (auto p : row_reduce(m).pivots) {
    if (p >= spanning.size()) chosen.push_back(p - spanning.size());
  }
  return chosen;
}

inline std::vector<std::vector<Scalar>> columns(const RationalMatrix& m) {
  std::vector<std::vector<Scalar>> out(m.cols(), std::vector<Scalar>(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[c][r] = m(r, c);
  return out;
}
}  // namespace detail

/// Cocycle representatives of a basis of H^n_μ. Kernel vectors of δ_n are
/// taken in echelon order and kept when independent of Im δ_{n-1} and of the
/// vectors already kept.
inline std::vector<Operation> cohomology_basis(const Operation& mu, int n,
                                               std::size_t max_entries = kDefaultMaxEntries) {
  require_associative(mu, "cohomology_basis");
  const std::size_t d = mu.dim();
  const std::size_t len = checked_pow(d, n + 1, max_entries);
  const auto kernel = kernel_basis(coboundary_matrix(mu, n, max_entries).entries);
  std::vector<std::vector<Scalar>> image;
  if (n > 0) image = detail::columns(coboundary_matrix(mu, n - 1, max_entries).entries);
  std::vector<Operation> reps;
  for (auto c : detail::independent_modulo(image, kernel, len, max_entries)) reps.emplace_back(d, n, kernel[c]);
  return reps;
}

struct CohomologyOptions {
  std::size_t max_entries = kDefaultMaxEntries;
  bool representatives = false;
};

/// dim H^n = dim Ker δ_n - rank δ_{n-1} for n = 0..n_max, with Im δ_{-1} = 0.
inline CohomologyReport cohomology_dimensions(const AlgebraSpec& algebra, int n_max, CohomologyOptions opts = {}) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  require_associative(algebra.mu, "cohomology_dimensions");
  CohomologyReport rep{algebra, {}, {}, std::nullopt};
  std::size_t prev_rank = 0;
  for (int n = 0; n <= n_max; ++n) {
    const auto m = coboundary_matrix(algebra.mu, n, opts.max_entries);
    const std::size_t rk = rank(m.entries);
    const std::size_t nullity = m.entries.cols() - rk;
    rep.ranks.push_back({n, rk, nullity});
    rep.dims.push_back({n, nullity - prev_rank});
    prev_rank = rk;
  }
  if (opts.representatives) {
    std::vector<std::vector<Operation>> reps;
    for (int n = 0; n <= n_max; ++n) reps.push_back(cohomology_basis(algebra.mu, n, opts.max_entries));
    rep.representatives = std::move(reps);
  }
  return rep;
}

/// Ker δ_μ membership; defined for any binary μ.
inline bool is_cocycle(const Operation& mu, const Operation& f) { return coboundary(mu, f).is_zero(); }

/// A witness x with δ_μ x = f, or nullopt when f is not a coboundary.
/// Needs an associative μ and deg f >= 1 (coboundaries in degree 0 are zero
/// by convention; see lies_in_image).
inline std::optional<Operation> is_coboundary(const Operation& mu, const Operation& f,
                                              std::size_t max_entries = kDefaultMaxEntries) {
  require_associative(mu, "is_coboundary");
  if (f.dim() != mu.dim()) throw DimensionError("cochain and μ live over different dims");
  if (f.degree() == 0) throw DomainError("degree-0 cochains have no preimage degree");
  const auto m = coboundary_matrix(mu, f.degree() - 1, max_entries);
  auto x = solve(m.entries, vectorize(f));
  if (!x) return std::nullopt;
  return Operation(mu.dim(), f.degree() - 1, std::move(*x));
}

/// f ∈ Im δ_μ, including degree 0 where the image is zero.
inline bool lies_in_image(const Operation& mu, const Operation& f, std::size_t max_entries = kDefaultMaxEntries) {
  if (f.degree() == 0) {
    require_associative(mu, "lies_in_image");
    return f.is_zero();
  }
  return is_coboundary(mu, f, max_entries).has_value();
}

}  // namespace opflow
