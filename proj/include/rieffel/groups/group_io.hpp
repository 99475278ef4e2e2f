#pragma once

#include <iosfwd>
#include <string>

#include "rieffel/groups/finite_group.hpp"

namespace rieffel::groups {

// Group definition files are line oriented; '#' starts a comment.
//
//   group S3
//   order 6
//   table
//   <order rows of order 0-based indices>
//   irrep LABEL DIM
//   <order rows, each DIM*DIM "re im" pairs, matrix row-major>
//   subgroup LABEL i1 i2 ...        (optional, any number)
//   end
//
// Loading validates the table, every irrep and dual completeness.

GroupData read_group(std::istream& is);
GroupData read_group_file(const std::string& path);

void write_group(std::ostream& os, const GroupData& data);
void write_group_file(const std::string& path, const GroupData& data);

}  // namespace rieffel::groups
