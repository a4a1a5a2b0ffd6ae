#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vko/cells.hpp"
#include "vko/sparse.hpp"

namespace vko {

enum class Ring { Z, Z2 };

std::string_view ring_name(Ring r);
/// Accepts "Z", "Z2" and "Z/2".
Ring parse_ring(std::string_view s);

/// Finitely supported cochain keyed by cell id.  Coefficients are nonzero;
/// over Z/2 they are all 1.
struct Cochain {
    Ring ring = Ring::Z;
    int degree = 0;
    std::map<std::string, mpz_class> support;

    static Cochain from_values(const CellComplex& x, Ring ring, int degree, std::span<const mpz_class> values);
    /// Dense coefficient vector in canonical cell order; throws ParameterError on unknown cells.
    std::vector<mpz_class> values(const CellComplex& x) const;
    bool operator==(const Cochain& other) const = default;
};

struct GroupDescriptor {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;  // each >= 2, each dividing the next

    /// e.g. "Z^2 + Z/2", "0".
    std::string to_string() const;
    bool operator==(const GroupDescriptor& other) const = default;
};

enum class Direction { homology, cohomology };

/// Matrix of the boundary from dimension d to d-1 (rows: (d-1)-cells, columns: d-cells).
/// For d = 0 the matrix has no rows.  Over Z/2 entries are reduced.
SparseIntMatrix boundary_matrix(const CellComplex& x, int d, Ring ring);

GroupDescriptor homology_groups(const CellComplex& x, int d, Ring ring, Direction direction);

/// Coboundary of b; over Z/2 coefficients are reduced.
Cochain coboundary(const CellComplex& x, const Cochain& b);

/// Result of deciding whether c is a coboundary.
///   solvable: `witness` b satisfies coboundary(b) = c.
///   otherwise: `dual` y on the cells of c's degree satisfies
///     over Z:   y^T A integral and y^T c not an integer,
///     over Z/2: y^T A = 0 and y^T c = 1,
///   where A is the coboundary matrix into c's degree.
struct CoboundarySolution {
    Ring ring = Ring::Z;
    bool solvable = false;
    Cochain witness;
    std::map<std::string, mpq_class> dual;
};

/// Throws PreconditionError if c is not a cocycle.  The result is checked by
/// exact multiplication before it is returned.
CoboundarySolution coboundary_solve(const CellComplex& x, const Cochain& c);

/// Replays a solution against c; returns an empty list iff it checks out.
std::vector<std::string> verify_solution(const CellComplex& x, const Cochain& c, const CoboundarySolution& s);

} // namespace vko
