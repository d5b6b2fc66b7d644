#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acx/deformation.hpp"

namespace acx::fixtures {

/// Abelian frame (complex torus): all dθ = 0.
FrameSpec torus(uint32_t n);
/// n = 3, dθ^1 = θ^2̄∧θ^3̄ — the minimal frame with a pure μ̄ piece.
FrameSpec mubar3();
/// n = 2, dθ^2 = θ^1∧θ^1̄ — integrable 4-real-dimensional nilmanifold frame.
FrameSpec kodaira_thurston();
/// n = 3, dθ^1 = θ^2∧θ^3 + θ^2̄∧θ^3̄ — both a ∂ and a μ̄ piece.
FrameSpec hybrid3();
/// n = 3, dθ^1 = θ^1∧θ^3, dθ^2 = -2·θ^2∧θ^3 — solvable, nontrivial ∂ action.
FrameSpec solvable3();
/// n = 3, dθ^1 = θ^2̄∧θ^3̄, dθ^2 = θ^2∧θ^3 — μ̄ piece plus ∂ action.
FrameSpec mixed3();
/// n = 2 frame with d² ≠ 0 (regression witness for validation).
FrameSpec invalid_d2();

/// t·θ^1̄⊗e_1.
Beltrami phi_t(uint32_t n, const Scalar& t);
/// Diagonal entry t at position (k,k̄).
Beltrami phi_diag(uint32_t n, uint32_t k, const Scalar& t);

std::vector<std::pair<std::string, FrameSpec>> all_valid();

}  // namespace acx::fixtures
