#pragma once

#include <chrono>
#include <memory>

#include "vko/chains.hpp"
#include "vko/deleted.hpp"
#include "vko/plmap.hpp"

namespace vko {

/// Limits for a verdict run; zero means unlimited.
struct Budget {
    std::size_t max_cells = 0;  // ordered cells in grades m-1, m, m+1
    double max_seconds = 0;
};

struct ObstructionReport {
    std::string complex_name;
    int m = 0;
    Ring ring = Ring::Z2;
    SignMode mode = SignMode::product_sign;
    std::uint64_t seed = 0;
    bool nonzero = false;
    std::shared_ptr<const PLMap> map;
    Cochain cocycle;                   // on the orbit complex, degree m
    CoboundarySolution solution;       // witness when zero, dual certificate when nonzero
    std::size_t orbit_cells = 0;       // grade m of the orbit complex
    std::size_t crossing_orbits = 0;   // orbit cells where the cocycle is nonzero

    std::string verdict() const { return nonzero ? "nonzero" : "zero"; }
};

/// Intersection cocycle on the ordered cells of grade m = f's ambient dimension.
/// c(tau, sigma) = (-1)^{dim sigma * dim tau} c(sigma, tau).
Cochain vk_cocycle(const DeletedCellComplex& d, const PLMap& f);

/// The same cocycle read on orbit representatives, reduced for the ring.
Cochain orbit_cocycle(const OrbitComplex& q, const PLMap& f, Ring ring);

/// Decides whether the obstruction class of x in dimension m vanishes, using
/// the moment map for `seed`.  Over Z requires m = 2 dim x; over Z/2 any
/// 1 <= m <= 2 dim x.  Throws BudgetExceeded when over budget.
ObstructionReport vk_obstruction(const Complex& x, int m, Ring ring, std::uint64_t seed, const Budget& budget = {});

/// Replays a report: map genericity, cocycle recomputation, certificate.
std::vector<std::string> verify_report(const Complex& x, const ObstructionReport& r);

} // namespace vko
