#pragma once

#include <string>
#include <vector>

#include "rieffel/groups/finite_group.hpp"

namespace rieffel::groups {

/// "z2", "z3", "z4", "s3", "d4", "q8".
const std::vector<std::string>& builtin_group_names();

/// Built from faithful matrix generators by closure; elements are numbered in
/// breadth-first order from the identity (index 0). Irreps are generated from
/// their images of the generators and validated. Non-cyclic groups carry their
/// cyclic subgroups as named subgroups (s3: "a3", "c2"; d4: "c4"; q8: "c4").
/// Throws ValidationError for an unknown name.
GroupData builtin_group(const std::string& name);

}  // namespace rieffel::groups
