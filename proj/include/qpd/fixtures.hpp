#pragma once

#include <string>
#include <vector>

#include "qpd/potential.hpp"

namespace qpd {

// Built-in example QPs, stored as text in the library's file format.
//   dp1                   completed dP1 quiver, 4 vertices / 10 arrows / 6-term S
//   dp1-collection-quiver pre-completion dP1 quiver (relations noted in comments)
//   triangle              3-cycle with S = cba
//   a3                    acyclic 1 -> 2 -> 3 with S = 0
std::vector<std::string> fixture_names();
bool has_fixture(const std::string& name);
std::string fixture_text(const std::string& name); // throws SemanticError if unknown
QuiverWithPotential fixture_qp(const std::string& name);

} // namespace qpd
