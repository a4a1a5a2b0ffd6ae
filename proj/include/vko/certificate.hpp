#pragma once

#include <string>
#include <vector>

#include "vko/complex_io.hpp"
#include "vko/mapjoin.hpp"
#include "vko/obstruction.hpp"

namespace vko {

/// {"ring": "Z"|"Z2", "degree": d, "support": {cell-id: int}}; coefficients that
/// do not fit in 64 bits are written as decimal strings.
json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j);

/// {"solvable": bool, "witness": cochain} or {"solvable": false, "dual": {id: "p/q"}}.
json solution_to_json(const CoboundarySolution& s);
CoboundarySolution solution_from_json(const json& j, Ring ring);

/// {"m": m, "fingerprint": hex, "coords": {vertex: ["p/q", ...]}}.
json map_to_json(const PLMap& f);
/// Coordinates are matched to the complex by vertex name.
PLMap map_from_json(const json& j, const Complex& source);

/// Self-contained certificate files.  Each embeds its complex so that `verify`
/// needs nothing else.
json obstruction_certificate(const ObstructionReport& r);
json join_certificate(const Complex& factor, const JoinCertificate& c);
json coboundary_certificate(const Complex& x, const Cochain& c, const CoboundarySolution& s);

ObstructionReport report_from_certificate(const json& j, Complex& complex_out);

/// Dispatches on "kind"; empty iff the certificate checks out.  Nothing is
/// re-solved: obstruction certificates replay the cocycle from the stored map
/// and the witness or dual; join certificates re-derive the crossings of h
/// from its coordinates and push the witness to its cofaces.
std::vector<std::string> verify_certificate(const json& j);

} // namespace vko
