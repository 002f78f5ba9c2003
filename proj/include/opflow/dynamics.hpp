#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "opflow/deformation.hpp"

namespace opflow {

enum class Integrator { rk4 };

/// Parameters of df/dt = λ [h, f]. The factor i/ℏ of the Heisenberg form is
/// folded into the single real rate λ.
struct DynamicsConfig {
  double lambda = 1.0;
  double t_end = 1.0;
  double dt = 1e-2;
  Integrator method = Integrator::rk4;
};

/// Sampled solution; states share one (dim, degree) shape and use the flat
/// coefficient layout of Operation.
struct Trajectory {
  std::size_t dim = 0;
  int degree = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

/// Dense double matrix of a linear map between flat coefficient spaces.
struct FloatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> y(rows, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < cols; ++c) s += data[r * cols + c] * x[c];
      y[r] = s;
    }
    return y;
  }
};

/// Exact matrix of f ↦ [h, f] on C^degree, rounded to binary64.
inline FloatMatrix adjoint_matrix(const Operation& h, int degree, std::size_t max_entries = kDefaultMaxEntries) {
  const std::size_t d = h.dim();
  const std::size_t cols = checked_pow(d, degree + 1, max_entries);
  const std::size_t rows = checked_pow(d, degree + h.degree(), max_entries);
  if (cols != 0 && rows > max_entries / cols) throw ResourceError("adjoint matrix exceeds the entry budget");
  FloatMatrix m{rows, cols, std::vector<double>(rows * cols)};
  std::vector<Scalar> basis(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    basis[j] = 1;
    const Operation col = bracket(h, Operation(d, degree, basis));
    basis[j] = 0;
    for (std::size_t r = 0; r < rows; ++r) m.data[r * cols + j] = col[r].get_d();
  }
  return m;
}

/// Matrix of δ_μ on C^degree, rounded to binary64.
inline FloatMatrix coboundary_float_matrix(const Operation& mu, int degree,
                                           std::size_t max_entries = kDefaultMaxEntries) {
  const auto exact = coboundary_matrix(mu, degree, max_entries).entries;
  FloatMatrix m{exact.rows(), exact.cols(), std::vector<double>(exact.rows() * exact.cols())};
  for (std::size_t r = 0; r < exact.rows(); ++r)
    for (std::size_t c = 0; c < exact.cols(); ++c) m.data[r * m.cols + c] = exact(r, c).get_d();
  return m;
}

inline std::vector<double> to_floats(const Operation& f) {
  std::vector<double> out;
  out.reserve(f.size());
  for (const auto& c : f.coeffs()) out.push_back(c.get_d());
  return out;
}

namespace detail {
inline void validate(const DynamicsConfig& cfg) {
  if (!std::isfinite(cfg.lambda)) throw DomainError("lambda must be finite");
  if (!(cfg.t_end >= 0.0) || !std::isfinite(cfg.t_end)) throw DomainError("t_end must be a finite value >= 0");
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw DomainError("dt must be a finite value > 0");
}

/// Classical fourth-order Runge–Kutta for x' = λ·G·x on a grid t_k = k·dt,
/// with one shorter final step when dt does not divide t_end. A step larger
/// than t_end leaves only the initial sample.
inline Trajectory integrate_linear(const FloatMatrix& gen, std::vector<double> x, const DynamicsConfig& cfg,
                                   std::size_t dim, int degree) {
  Trajectory tr{dim, degree, {0.0}, {x}};
  if (cfg.dt > cfg.t_end) return tr;
  const double lam = cfg.lambda;
  auto rhs = [&](const std::vector<double>& v) {
    auto y = gen.apply(v);
    for (auto& e : y) e *= lam;
    return y;
  };
  auto axpy = [](const std::vector<double>& a, double s, const std::vector<double>& b) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
  };
  const double slack = 1e-12 * std::max(1.0, cfg.t_end);
  for (std::size_t k = 1;; ++k) {
    const double t_prev = tr.times.back();
    if (t_prev >= cfg.t_end - slack) break;
    double t_next = static_cast<double>(k) * cfg.dt;
    if (t_next > cfg.t_end - slack) t_next = cfg.t_end;
    const double h = t_next - t_prev;
    const auto k1 = rhs(x);
    const auto k2 = rhs(axpy(x, h / 2, k1));
    const auto k3 = rhs(axpy(x, h / 2, k2));
    const auto k4 = rhs(axpy(x, h, k3));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    tr.times.push_back(t_next);
    tr.states.push_back(x);
  }
  return tr;
}
}  // namespace detail

/// Checks that μ is associative, h has degree 1 and δ_μ h = 0.
inline void require_hamiltonian(const Operation& mu, const Operation& h) {
  if (mu.degree() != 2) throw DomainError("μ must be binary");
  if (h.dim() != mu.dim()) throw DimensionError("h and μ live over different dims");
  require_associative(mu, "heisenberg_flow");
  if (h.degree() != 1) throw PreconditionError("generator h must have degree 1, got " + std::to_string(h.degree()));
  if (!is_cocycle(mu, h)) throw PreconditionError("generator h is not a cocycle of μ: δh has entries " +
                                                  describe_nonzero(coboundary(mu, h)));
}

/// Integrates df/dt = λ [h, f] from f(0) = f0.
inline Trajectory heisenberg_flow(const Operation& mu, const Operation& h, const Operation& f0,
                                  const DynamicsConfig& cfg, std::size_t max_entries = kDefaultMaxEntries) {
  detail::validate(cfg);
  require_hamiltonian(mu, h);
  if (f0.dim() != mu.dim()) throw DimensionError("initial state and μ live over different dims");
  const FloatMatrix gen = adjoint_matrix(h, f0.degree(), max_entries);
  return detail::integrate_linear(gen, to_floats(f0), cfg, f0.dim(), f0.degree());
}

/// Evolves the curvature Ω = dω + ½[ω, ω] of `pair` under the same flow.
inline Trajectory curvature_flow(const Operation& mu, const Operation& h, const DeformationPair& pair,
                                 const DynamicsConfig& cfg, std::size_t max_entries = kDefaultMaxEntries) {
  if (!(pair.mu == mu)) throw DomainError("deformation pair is based on a different ground operation");
  return heisenberg_flow(mu, h, curvature(mu, pair.omega), cfg, max_entries);
}

/// max_k |(δ_μ f(t))_k| at every sample of the trajectory.
inline std::vector<double> cocycle_defects(const Operation& mu, const Trajectory& tr,
                                           std::size_t max_entries = kDefaultMaxEntries) {
  const FloatMatrix delta = coboundary_float_matrix(mu, tr.degree, max_entries);
  std::vector<double> out;
  out.reserve(tr.states.size());
  for (const auto& s : tr.states) {
    double m = 0.0;
    for (double v : delta.apply(s)) m = std::max(m, std::abs(v));
    out.push_back(m);
  }
  return out;
}

/// Coefficientwise max |a - b| between two equally shaped states.
inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DimensionError("state vectors differ in length");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace opflow
