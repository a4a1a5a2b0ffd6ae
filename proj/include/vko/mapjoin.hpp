#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vko/chains.hpp"
#include "vko/plmap.hpp"

namespace vko {

/// One ordered double point (x, y) of a generic map: x interior to `first`,
/// y interior to `second`, f(x) = f(y).
struct DoublePoint {
    Simplex first;
    Simplex second;
    QVec first_weights;
    QVec second_weights;
    QVec image;
    std::size_t orbit = 0;        // index of the unordered pair
    std::size_t swapped = 0;      // index of (y, x) in the set
    bool representative = false;  // first has the smaller global id
};

/// Both orderings of every double point, ordered by (orbit, representative first).
struct DoublePointSet {
    std::vector<DoublePoint> pairs;
    std::size_t orbits = 0;
};

/// All double points of f; requires m = 2 dim(source) and a generic f.
DoublePointSet double_points(const PLMap& f);

/// Equivariant sign labeling: value[orbit] is the sign on the representative,
/// the swapped pair carries the opposite sign.
struct SignLabeling {
    std::vector<int> value;

    int operator()(const DoublePointSet& d, std::size_t pair) const;
    /// Bit k of `bits` set means orbit k is labeled -1.
    static SignLabeling from_bits(std::size_t orbits, std::uint64_t bits);
};

enum class Projection { first, second };

/// Source subdivided at the double points, with a vertexwise function that is
/// 0 at original vertices and s((pi|_D)^{-1}(v)) at the new vertex v over a
/// double point, pi the chosen projection.
struct ExtendedLabeling {
    PLMap map;                         // the original map on the subdivision
    std::vector<mpq_class> values;     // per vertex of the subdivision
    std::vector<VertexId> first_vertex;   // per ordered double point: vertex over x
    std::vector<VertexId> second_vertex;  // per ordered double point: vertex over y

    const Complex& subdivided() const { return map.source(); }
};

/// Stellar subdivision at every double point; new vertices are named
/// "~d00", "~d01", ...  Throws ConstructionError when two double points
/// share a location or one lands on the boundary of an earlier piece.
ExtendedLabeling extend_labeling(const PLMap& f, const DoublePointSet& d, const SignLabeling& s,
                                 Projection projection = Projection::first);

/// Pairs of distinct simplices of a subdivided source whose open images meet.
/// For a generic map after subdivision these are exactly the vertex pairs over
/// double points; anything else is recorded as a problem.
struct SheetPairs {
    std::vector<std::pair<Simplex, Simplex>> meeting;
    std::vector<std::string> problems;
};
SheetPairs meeting_pairs(const PLMap& f);

/// h on P' * Q': a P'-vertex v goes to (f(v), 0, +1, phi(v)) and a Q'-vertex w
/// to (0, g(w), -1, psi(w)).
struct JoinMap {
    ExtendedLabeling phi;
    ExtendedLabeling psi;
    PLMap map;
    std::vector<int> side;          // +1 for P', -1 for Q', per join vertex
    std::vector<VertexId> origin;   // vertex id in P' or Q'
    std::shared_ptr<const SheetPairs> p_pairs;
    std::shared_ptr<const SheetPairs> q_pairs;
};

/// Sheet pairs are computed unless supplied (they do not depend on labels).
JoinMap build_h(const ExtendedLabeling& phi, const ExtendedLabeling& psi,
                std::shared_ptr<const SheetPairs> p_pairs = nullptr,
                std::shared_ptr<const SheetPairs> q_pairs = nullptr);

/// A double point of h: x = sum first_weights * first, y likewise; p_pair and
/// q_pair index the double points of f and g it sits over.
struct JoinDoublePoint {
    Simplex first;
    Simplex second;
    QVec first_weights;
    QVec second_weights;
    std::size_t p_pair = 0;
    std::size_t q_pair = 0;
};

struct MapJoinVerdict {
    bool ok = false;
    std::size_t candidates = 0;   // simplex pairs solved exactly
    std::size_t predicted = 0;
    std::vector<JoinDoublePoint> found;
    std::vector<std::string> problems;
};

/// Exact enumeration of the double points of h compared with the prediction
/// {((a,b),(c,d)) : phi(a,b) = psi(c,d)} at join level 1/2.
///
/// Candidate pairs (S, T) = (s1*s2, t1*t2): the frame coordinate of a point
/// of S is 1 - 2(Q-weight), so equal images force equal Q-weight; the P-block
/// then forces f(x) = f(x') and the Q-block g(y) = g(y').  Hence s1 and t1 are
/// both empty or (s1, t1) is equal or in p_pairs, and likewise on the Q side.
/// Every such pair is solved exactly; each double point must be isolated,
/// transverse on all adjacent top simplices, and at weights 1/2.
MapJoinVerdict verify_double_points(const JoinMap& h, const DoublePointSet& df, const SignLabeling& phi,
                                    const DoublePointSet& dg, const SignLabeling& psi);

/// Mod-2 certificate that the obstruction of p * p vanishes in dimension
/// 4 dim p + 2, built from the mod-2 witness of p itself.
struct JoinCertificate {
    std::string complex_name;
    int m = 0;
    std::string map_fingerprint;
    std::size_t p_crossings = 0;          // unordered double points of f
    std::size_t top_cells = 0;            // orbit cells of the top grade
    std::size_t next_cells = 0;           // orbit cells one grade below
    std::size_t cocycle_support = 0;      // orbit cells where c_h = 1
    std::size_t witness_support = 0;      // orbit cells where B = 1
    std::size_t predicate_checks = 0;     // cells where c_h was recomputed from h
    std::size_t transverse_points = 0;
    std::vector<std::string> problems;
    bool verified = false;
    std::shared_ptr<const PLMap> map;  // h on p * p
    Cochain cocycle;  // c_h on orbit representatives, Z/2
    Cochain witness;  // B on orbit representatives, Z/2
};

/// Builds h for p * p from the moment map f of p in R^{2 dim p} and vertex
/// values phi(v) = t_v^{2 dim p + 1}, and the witness
///   B = tr(e (x) t b + b (x) w'),   w' = e + d b,
/// where e is the mod-2 cocycle of f restricted to crossings with
/// phi(x) > phi(y), b the mod-2 witness of p on representative cells and tr the
/// transfer a -> a + t a.  A double point of h over S x T (S = s1*s2,
/// T = t1*t2) forces crossings of s1, t1 and of s2, t2 under f at one join
/// level, which exists iff phi orders the two crossings oppositely; hence
/// c_h = e (x) te + te (x) e, and h is generic once f is.  Verifies d B = c_h
/// exactly by pushing B to its cofaces, and recomputes c_h from h on every
/// pair of crossing cells and on `sample` random cells, each crossing checked
/// for transversality.
JoinCertificate certify_join_mod2(const Complex& p, std::uint64_t seed, std::size_t sample = 2000);

} // namespace vko
