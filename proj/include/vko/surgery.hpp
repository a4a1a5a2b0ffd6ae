#pragma once

#include <map>
#include <string>
#include <vector>

#include "vko/chains.hpp"
#include "vko/complex.hpp"

namespace vko {

/// The 2:1 map from the len-cycle onto the (len/2)-cycle, i -> i mod len/2.
/// len must be even and at least 6.
SimplicialMap double_cover_cycle(int len);

struct SurgeryResult {
    Complex complex;
    /// Facets of the reglued disk C (the image of D').
    std::vector<Simplex> reglued_disk;
    /// Facets of the exterior N0 = everything else.
    std::vector<Simplex> exterior;
    /// "p": in the subdivided facet outside D; "q": a facet disjoint from the
    /// surgered one; "r": interior to C.
    std::map<std::string, Simplex> marked;
    /// The 12-gon boundary of D' onto the hexagon boundary of D.
    SimplicialMap seam;
};

/// Subdivides `facet` so that a hexagon bounds a disk D inside it, drops the
/// interior of D, and glues in a disk D' along double_cover_cycle(12).  D' is
/// an outer 12-gon, an annulus to an inner 12-gon, and a cone on that, so the
/// identification creates no duplicate simplices.  New vertices are named
/// "~h0".."~h5", "~u00".."~u11" and "~o".
SurgeryResult reglue_degree2(const Complex& k, const Simplex& facet);

/// Primitive integral generator of ker d_top when that kernel has rank 1,
/// indexed like the top simplices.  Throws PreconditionError otherwise.
std::vector<mpz_class> top_cycle(const Complex& x);

/// Cochain with value `coefficient` on one top simplex.
Cochain facet_dual(const Complex& x, const Simplex& facet, const mpz_class& coefficient);

} // namespace vko
