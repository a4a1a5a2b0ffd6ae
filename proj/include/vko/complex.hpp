#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vko {

using VertexId = std::uint32_t;

/// Strictly increasing list of vertex ids.
using Simplex = std::vector<VertexId>;

/// Uncanonicalized simplex data as it appears in files or before closure.
struct SimplexList {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> simplices;
};

/// Finite abstract simplicial complex stored as its full face lattice.
///
/// Vertices are kept in lexicographic order of their names and a vertex id is
/// its position in that order.  Simplices of each dimension are kept in
/// lexicographic order of their vertex-id lists; together with the dimension
/// this gives every simplex a stable global id (dimension-major).
///
/// Instances are immutable after construction.
class Complex {
public:
    Complex() = default;

    /// Closure of the given facets.  Facets are lists of indices into `vertices`.
    static Complex from_index_facets(std::string name, std::vector<std::string> vertices,
                                     const std::vector<Simplex>& facets);

    /// Closure of the given facets, addressed by vertex name.
    static Complex from_facets(std::string name, std::vector<std::string> vertices,
                               const std::vector<std::vector<std::string>>& facets);

    const std::string& name() const noexcept { return name_; }
    Complex renamed(std::string name) const;

    /// -1 for the empty complex.
    int dim() const noexcept { return static_cast<int>(flat_.size()) - 1; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    std::optional<VertexId> find_vertex(std::string_view name) const;

    std::size_t count(int d) const noexcept;
    std::span<const VertexId> simplex(int d, std::size_t i) const;
    Simplex simplex_vector(int d, std::size_t i) const;

    /// Index (within its dimension) of a simplex given as increasing vertex ids.
    std::optional<std::size_t> find(std::span<const VertexId> s) const;

    /// Index in dimension d-1 of the face of simplex (d, i) that omits its j-th vertex.
    std::uint32_t face_index(int d, std::size_t i, int j) const;

    std::size_t global_id(int d, std::size_t i) const { return offsets_.at(d) + i; }
    std::size_t total_count() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }
    std::pair<int, std::size_t> from_global(std::size_t gid) const;

    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;

    /// Maximal simplices in canonical order.
    std::vector<Simplex> facets() const;

    /// Comma-joined vertex names, e.g. "a,b,c".
    std::string simplex_id(int d, std::size_t i) const;
    std::string simplex_id(std::span<const VertexId> s) const;

    /// Parses a comma-joined list of vertex names into a sorted simplex (not necessarily present).
    Simplex parse_simplex(std::string_view id) const;

    SimplexList to_list() const;

    bool operator==(const Complex& other) const;

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<std::vector<VertexId>> flat_;        // per dim, stride d+1
    std::vector<std::vector<std::uint32_t>> faces_;  // per dim >= 1, stride d+1
    std::vector<std::size_t> offsets_;               // offsets_[d] = first global id of dim d; back() = total
};

/// Vertex assignment between complexes that carries simplices to simplices.
struct SimplicialMap {
    Complex source;
    Complex target;
    std::vector<VertexId> assignment;  // indexed by source vertex id

    Simplex image(std::span<const VertexId> s) const;
    /// Empty iff every source simplex lands on a target simplex.
    std::vector<std::string> validate() const;
};

/// Diagnostics for the complex invariants (closure, canonical form, no duplicates).
std::vector<std::string> validate(const SimplexList& raw);
std::vector<std::string> validate(const Complex& x);

/// Zero-padded decimal name so lexicographic and numeric order agree below `count`.
std::string indexed_name(std::string_view prefix, std::size_t i, std::size_t count);

} // namespace vko
