// Walks through the tangent cohomology of the dual numbers K[ε]/(ε²).

#include <iostream>

#include "opflow/opflow.hpp"

int main() {
  using namespace opflow;
  const AlgebraSpec alg = dual_numbers();
  const Operation D = make_operation(2, 1, {0, 0, 0, 1});  // D(1) = 0, D(ε) = ε

  const auto report = cohomology_dimensions(alg, 3);
  std::cout << "dim H^n(" << alg.name << "):";
  for (const auto& d : report.dims) std::cout << " " << d.dim;
  std::cout << "\n";

  std::cout << "D is a cocycle: " << std::boolalpha << is_cocycle(alg.mu, D) << "\n";
  std::cout << "D is a coboundary: " << is_coboundary(alg.mu, D).has_value() << "\n";

  const Operation cup_dd = cup(alg.mu, D, D);
  std::cout << "D ⌣ D is a cocycle: " << is_cocycle(alg.mu, cup_dd)
            << ", in the image: " << lies_in_image(alg.mu, cup_dd) << "\n";
  std::cout << "[D, D] = 0: " << bracket(D, D).is_zero() << "\n";
  std::cout << "[D, μ] = 0: " << bracket(D, alg.mu).is_zero() << "\n";

  // e^{tD} acts on μ trivially, so the flow of μ is stationary.
  const auto traj = heisenberg_flow(alg.mu, D, alg.mu, DynamicsConfig{1.0, 1.0, 0.1});
  const auto defects = cocycle_defects(alg.mu, traj);
  double worst = 0;
  for (double v : defects) worst = std::max(worst, v);
  std::cout << "flow of μ under D: " << traj.times.size() << " samples, drift "
            << max_abs_diff(traj.states.front(), traj.states.back()) << ", max cocycle defect " << worst << "\n";
}
