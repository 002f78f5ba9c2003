#pragma once

#include <optional>
#include <utility>

#include "opflow/cohomology.hpp"

namespace opflow {

/// A ground operation μ, its perturbed value μ₀ and the deformation ω = μ₀ - μ.
struct DeformationPair {
  Operation mu;
  Operation mu0;
  Operation omega;

  static DeformationPair from_operations(Operation mu, Operation mu0) {
    check_binary(mu, "μ");
    check_binary(mu0, "μ₀");
    if (mu.dim() != mu0.dim()) throw DimensionError("μ and μ₀ live over different dims");
    Operation omega = mu0 - mu;
    return DeformationPair{std::move(mu), std::move(mu0), std::move(omega)};
  }

  static DeformationPair from_deformation(Operation mu, Operation omega) {
    check_binary(mu, "μ");
    check_binary(omega, "ω");
    if (mu.dim() != omega.dim()) throw DimensionError("μ and ω live over different dims");
    Operation mu0 = mu + omega;
    return DeformationPair{std::move(mu), std::move(mu0), std::move(omega)};
  }

 private:
  static void check_binary(const Operation& op, const char* what) {
    if (op.degree() != 2) {
      throw DomainError(std::string(what) + " must be binary, got degree " + std::to_string(op.degree()));
    }
  }
};

/// d := -δ_μ, i.e. d f = [f, μ].
inline Operation differential(const Operation& mu, const Operation& f) { return -coboundary(mu, f); }

/// Ω = dω + ½[ω, ω].
inline Operation curvature(const Operation& mu, const Operation& omega) {
  if (omega.degree() != 2) throw DomainError("deformation ω must be binary");
  return differential(mu, omega) + Scalar(1, 2) * bracket(omega, omega);
}

/// ∇f = df + [f, ω].
inline Operation covariant_derivative(const Operation& mu, const Operation& omega, const Operation& f) {
  if (omega.degree() != 2) throw DomainError("deformation ω must be binary");
  return differential(mu, f) + bracket(f, omega);
}

/// ∇A₀ = dA₀ + [A₀, ω] with A₀ = μ₀².
inline Operation bianchi_residual(const DeformationPair& pair) {
  return covariant_derivative(pair.mu, pair.omega, associator(pair.mu0));
}

struct AlbertResiduals {
  Operation power3;  // μ² ∘ μ - μ ∘ μ²
  Operation power4;  // (μ² ∘ μ) ∘ μ - μ² ∘ μ²
};

inline AlbertResiduals albert_residuals(const Operation& mu) {
  const Operation sq = associator(mu);
  const Operation cube = total_compose(sq, mu);
  return {cube - total_compose(mu, sq), total_compose(cube, mu) - total_compose(sq, sq)};
}

enum class DualMode { self_dual, anti_self_dual, custom };

inline const char* to_string(DualMode m) {
  switch (m) {
    case DualMode::self_dual: return "self_dual";
    case DualMode::anti_self_dual: return "anti_self_dual";
    case DualMode::custom: return "custom";
  }
  return "?";
}

/// Gauge-equation quantities; present only when the ground μ is associative.
struct GaugeResiduals {
  DualMode dual_mode;
  Operation dual;                   // Ω†
  Operation current;                // 𝒥
  Operation residual1;              // ∇Ω
  Operation residual2;              // ∇Ω† - 𝒥
  Operation conservation_residual;  // ∇𝒥 - [Ω†, Ω]
};

struct DeformationReport {
  Operation A;             // μ²
  Operation A0;            // μ₀²
  Operation Omega;         // A₀ - A
  Operation curvature;     // dω + ½[ω, ω]
  Operation mc_residual;   // curvature - Omega
  Operation bianchi_residual;
  std::optional<GaugeResiduals> gauge;
};

/// Curvature, Maurer–Cartan residual and Bianchi residual of a pair.
inline DeformationReport deformation_report(const DeformationPair& pair) {
  Operation A = associator(pair.mu);
  Operation A0 = associator(pair.mu0);
  Operation Omega = A0 - A;
  Operation curv = curvature(pair.mu, pair.omega);
  Operation mc = curv - Omega;
  return DeformationReport{std::move(A),    std::move(A0), std::move(Omega), std::move(curv),
                           std::move(mc),   bianchi_residual(pair), std::nullopt};
}

/// The gauge equations ∇Ω = 0, ∇Ω† = 𝒥 and the conservation law ∇𝒥 = [Ω†, Ω].
///
/// The ground μ must be associative (the equations assume d² = 0). Ω† is
/// ±Ω or a supplied degree-3 operation; 𝒥 defaults to ∇Ω†.
inline DeformationReport gauge_residuals(const DeformationPair& pair, DualMode mode,
                                         const std::optional<Operation>& custom_dual = std::nullopt,
                                         const std::optional<Operation>& current = std::nullopt) {
  require_associative(pair.mu, "gauge_residuals");
  DeformationReport rep = deformation_report(pair);
  Operation dual = [&] {
    switch (mode) {
      case DualMode::self_dual: return rep.Omega;
      case DualMode::anti_self_dual: return -rep.Omega;
      case DualMode::custom:
        if (!custom_dual) throw DomainError("custom dual mode needs a supplied Ω†");
        if (custom_dual->degree() != 3 || custom_dual->dim() != pair.mu.dim()) {
          throw DomainError("Ω† must be a degree-3 operation over the same module");
        }
        return *custom_dual;
    }
    throw DomainError("unknown dual mode");
  }();
  const Operation nabla_dual = covariant_derivative(pair.mu, pair.omega, dual);
  Operation J = current.value_or(nabla_dual);
  if (J.degree() != dual.degree() + 1 || J.dim() != pair.mu.dim()) {
    throw DomainError("current must have degree deg Ω† + 1 = " + std::to_string(dual.degree() + 1));
  }
  Operation r1 = covariant_derivative(pair.mu, pair.omega, rep.Omega);
  Operation r2 = nabla_dual - J;
  Operation cons = covariant_derivative(pair.mu, pair.omega, J) - bracket(dual, rep.Omega);
  rep.gauge = GaugeResiduals{mode, std::move(dual), std::move(J), std::move(r1), std::move(r2), std::move(cons)};
  return rep;
}

/// max |c| over the coefficients ("weak current" diagnostic).
inline Scalar max_abs_coeff(const Operation& op) {
  Scalar m = 0;
  for (const auto& c : op.coeffs()) {
    Scalar a = abs_scalar(c);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace opflow
