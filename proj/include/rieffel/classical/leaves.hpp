#pragma once

#include <string>

#include "rieffel/classical/flow.hpp"

namespace rieffel::classical {

/// Pieces of the kappa = 0 constraint cone |p_x| = |p_y|:
/// PP+ (p_x = p_y > 0), PP- (p_x = p_y < 0), PM+ (p_x = -p_y > 0),
/// PM- (p_x = -p_y < 0) and the singular set p_x = p_y = 0.
enum class LeafLabel { PPPlus, PPMinus, PMPlus, PMMinus, Sing };

const char* to_string(LeafLabel l);

/// Throws DomainError when |H_0(s)| >= on_shell_tol. SING iff
/// max(|p_x|, |p_y|) < sing_tol.
LeafLabel leaf_classify(const PhasePoint& s, double on_shell_tol = kOnShellTol, double sing_tol = 1e-9);

/// Flows s along the Hamiltonian vector field of `observable` for time t and
/// reports whether the leaf label is unchanged. The flow is numerical, so the
/// end point is classified with the looser tolerance `flow_tol`.
struct LeafCheck {
    LeafLabel before, after;
    bool preserved;
};
LeafCheck leaf_invariance_check(const Observable& observable, const PhasePoint& s, double t, double flow_tol = 1e-7);

}  // namespace rieffel::classical
