#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vko/complex.hpp"
#include "vko/rational.hpp"

namespace vko {

std::string sha256_hex(std::string_view text);

/// Simplexwise-linear map of a complex into Q^m given by exact vertex images.
class PLMap {
public:
    PLMap(Complex source, int m, std::vector<QVec> coords);

    const Complex& source() const noexcept { return source_; }
    int ambient_dim() const noexcept { return m_; }
    const std::vector<QVec>& coords() const noexcept { return coords_; }
    const QVec& point(VertexId v) const { return coords_.at(v); }

    /// Coordinates times their common denominator.  Every predicate here is
    /// invariant under this positive scaling.
    const std::vector<std::vector<mpz_class>>& scaled() const noexcept { return scaled_; }

    /// Image of the point with barycentric coordinates `weights` on simplex `s`.
    QVec image(std::span<const VertexId> s, std::span<const mpq_class> weights) const;

    /// Hex sha256 of the canonical serialization (m, vertex names, coordinates).
    std::string fingerprint() const;

private:
    Complex source_;
    int m_;
    std::vector<QVec> coords_;
    std::vector<std::vector<mpz_class>> scaled_;
};

/// Vertex i goes to (t, t^2, ..., t^m).  Seed 0 takes t_i = i + 1; other seeds
/// take a seeded permutation of 1..n.
PLMap moment_map(const Complex& x, int m, std::uint64_t seed);

/// The parameters t if every image is (t, t^2, ..., t^m) with distinct t.
std::optional<std::vector<mpq_class>> moment_parameters(const PLMap& f);

/// Transverse crossing of f(sigma) and f(tau) for dim sigma + dim tau = m.
struct Crossing {
    int sign = 0;      // sign det[sigma edges | tau edges]
    QVec first;        // barycentric coordinates on sigma, all > 0
    QVec second;       // barycentric coordinates on tau, all > 0
};

/// Crossing of the images of two disjoint simplices of complementary dimension,
/// or nullopt when the images are disjoint.  Throws GenericityError when they
/// meet degenerately (on a proper face, or in more than a point).
std::optional<Crossing> crossing(const PLMap& f, std::span<const VertexId> sigma, std::span<const VertexId> tau);

/// Signed intersection count of the open images (0 or +-1).
int intersection_number(const PLMap& f, std::span<const VertexId> sigma, std::span<const VertexId> tau);

/// Whether the closed images of two simplices share a point.
bool closed_images_meet(const PLMap& f, std::span<const VertexId> sigma, std::span<const VertexId> tau);

enum class MeetKind { none, point, degenerate };

/// Whether f(x) = f(y) for some x interior to a_only + shared and y interior to
/// b_only + shared (a_only, b_only nonempty).  A solution set that is not a
/// single point, or any solution when `shared` is nonempty, is degenerate.
MeetKind open_simplices_meet(const PLMap& f, std::span<const VertexId> a_only, std::span<const VertexId> b_only,
                             std::span<const VertexId> shared);

struct OpenMeet {
    MeetKind kind = MeetKind::none;
    QVec first;   // weights on a_only when kind == point
    QVec second;  // weights on b_only when kind == point
};

/// open_simplices_meet together with the meeting point when it is unique.
OpenMeet open_meet(const PLMap& f, std::span<const VertexId> a_only, std::span<const VertexId> b_only,
                   std::span<const VertexId> shared);

/// Whether the images of the given vertices are affinely independent.
bool affinely_independent(const PLMap& f, std::span<const VertexId> vs);

enum class GenericityMode {
    /// Accept a moment-curve map by its parameters, else fall back to exhaustive.
    automatic,
    exhaustive,
};

/// Empty iff f is generic: every simplex of dim <= m has affinely independent
/// image, disjoint pairs with dim sum < m have disjoint images, disjoint pairs
/// with dim sum m meet at most in one transverse interior point, and
/// overlapping pairs spanning at most m+1 vertices are independent.
std::vector<std::string> genericity_check(const PLMap& f, GenericityMode mode = GenericityMode::automatic);

} // namespace vko
