#pragma once

#include "ilcp/linear_system.hpp"

#include <optional>
#include <vector>

namespace ilcp {

/// Exact V-representation of a halfspace system (which always includes
/// nonnegativity of every variable, so the feasible set is pointed).
struct Polyhedron {
    LinearSystem halfspaces;
    std::vector<RatVec> vertices;  // sorted lexicographically, pairwise distinct
    std::vector<RatVec> rays;      // primitive integer directions, sorted
    std::optional<RatVec> infeasibility_witness;  // over canonical_rows(halfspaces)

    bool empty() const { return vertices.empty(); }
    bool bounded() const { return rays.empty(); }
    bool contains(const RatVec& x) const { return satisfies(halfspaces, x); }
};

/// Double description over the homogenization cone. The orthant rows seed
/// the initial pointed cone; general rows are added in input order with an
/// exact rank-based adjacency test, so the output is deterministic.
/// Infeasible systems come back empty with a Farkas witness.
Polyhedron vertex_enumeration(const LinearSystem& sys);

}  // namespace ilcp
