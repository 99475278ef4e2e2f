#include "rieffel/classical/leaves.hpp"

#include <cmath>
#include <sstream>

#include "rieffel/error.hpp"

namespace rieffel::classical {

const char* to_string(LeafLabel l) {
    switch (l) {
        case LeafLabel::PPPlus: return "PP+";
        case LeafLabel::PPMinus: return "PP-";
        case LeafLabel::PMPlus: return "PM+";
        case LeafLabel::PMMinus: return "PM-";
        case LeafLabel::Sing: return "SING";
    }
    return "?";
}

LeafLabel leaf_classify(const PhasePoint& s, double on_shell_tol, double sing_tol) {
    const double h = constraint_value(0, s);
    if (!(std::abs(h) < on_shell_tol)) {
        std::ostringstream os;
        os << "leaf_classify: point is off the kappa=0 constraint surface (H = " << h << ")";
        throw DomainError(os.str());
    }
    if (std::max(std::abs(s.px), std::abs(s.py)) < sing_tol) return LeafLabel::Sing;
    // On the cone p_x and p_y have equal magnitude; the signs pick the branch.
    const bool same_sign = (s.px >= 0) == (s.py >= 0);
    if (same_sign) return s.px > 0 ? LeafLabel::PPPlus : LeafLabel::PPMinus;
    return s.px > 0 ? LeafLabel::PMPlus : LeafLabel::PMMinus;
}

LeafCheck leaf_invariance_check(const Observable& observable, const PhasePoint& s, double t, double flow_tol) {
    LeafCheck c;
    c.before = leaf_classify(s);
    const PhasePoint end = observable_flow(observable, s, t);
    const double scale = std::max(1.0, std::max(std::abs(end.px), std::abs(end.py)));
    c.after = leaf_classify(end, flow_tol * scale * scale, flow_tol * scale);
    c.preserved = c.before == c.after;
    return c;
}

}  // namespace rieffel::classical
