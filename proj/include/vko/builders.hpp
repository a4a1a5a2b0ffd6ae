#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "vko/complex.hpp"

namespace vko {

// Named families.  Vertex names are deterministic and zero-padded so that the
// canonical (lexicographic) vertex order matches the natural numbering.

Complex point_complex();
/// (k)-skeleton of the d-simplex; requires 0 <= k <= d.
Complex skeleton_of_simplex(int d, int k);
/// Join of k copies of the 3-point set.
Complex three_point_join(int k);
/// Join of the k_i-skeleta of the (2k_i+2)-simplices.
Complex flores_join(std::span<const int> skeleton_dims);
/// Cone over three points: center "0", leaves "1","2","3".
Complex triod();
Complex complete_graph(int n);
Complex cycle(int n);
/// Boundary of the d-simplex, a (d-1)-sphere.
Complex boundary_sphere(int d);
/// The 6-vertex triangulation of the real projective plane.
Complex rp2_six_vertex();

/// Complete bipartite graph K_{a,b}; parts named "a0.." and "b0..".
Complex complete_bipartite(int a, int b);
/// Planar graph on n >= 3 vertices: a stacked triangulation built by seeded face
/// insertions, with a seeded subset of its non-spanning-tree edges kept.
Complex random_planar_graph(int n, std::uint64_t seed);
/// Seeded random tree on n >= 1 vertices.
Complex random_tree(int n, std::uint64_t seed);

/// Dispatches on the family name; throws ParameterError for unknown names or bad params.
Complex build_named(std::string_view family, std::span<const int> params);
std::vector<std::string_view> named_families();

/// Simplices are unions of a simplex (or nothing) from each side.  Vertices are
/// renamed with "L." and "R." prefixes.
Complex join(const Complex& a, const Complex& b);

/// Staircase triangulation of |a| x |b| using the canonical vertex orders.
/// Vertex (u, w) is named "L.u:R.w".
Complex product(const Complex& a, const Complex& b);

enum class ConeMode { cone, suspension };
/// k-fold cone (join with a point) or k-fold suspension (join with S^0).
Complex cone_suspend(const Complex& x, ConeMode mode, int k);

/// Barycentric subdivision; the barycenter of {a,b,...} is named "a+b+...",
/// original vertices keep their names.
Complex barycentric_subdivision(const Complex& x);

} // namespace vko
