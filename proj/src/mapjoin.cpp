#include "vko/mapjoin.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vko/builders.hpp"
#include "vko/errors.hpp"

namespace vko {

namespace {

Simplex intersect(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex subtract(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<Simplex> all_simplices(const Complex& x)
{
    std::vector<Simplex> out;
    for (int d = 0; d <= x.dim(); ++d)
        for (std::size_t i = 0; i < x.count(d); ++i)
            out.push_back(x.simplex_vector(d, i));
    return out;
}

// Barycentric coordinates of `target` with respect to the columns `basis`
// (square, invertible); nullopt if singular.
std::optional<QVec> solve_square(const std::vector<QVec>& basis, const QVec& target)
{
    const std::size_t n = target.size();
    QMat m(n, QVec(basis.size() + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c)
            m[r][c] = basis[c][r];
        m[r][basis.size()] = target[r];
    }
    const auto pivots = rref(m);
    if (pivots.size() != basis.size() || (!pivots.empty() && pivots.back() == basis.size()))
        return std::nullopt;
    QVec out(basis.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out[pivots[r]] = m[r][basis.size()];
    return out;
}

std::string pair_label(const Complex& x, const Simplex& a, const Simplex& b)
{
    return "(" + x.simplex_id(a) + ")|(" + x.simplex_id(b) + ")";
}

} // namespace

DoublePointSet double_points(const PLMap& f)
{
    const auto& x = f.source();
    const int n = x.dim();
    if (f.ambient_dim() != 2 * n)
        throw ParameterError("double_points needs m = 2 dim = " + std::to_string(2 * n));
    if (auto problems = genericity_check(f); !problems.empty())
        throw GenericityError("map is not generic: " + problems.front());
    DoublePointSet out;
    for (std::size_t i = 0; i < x.count(n); ++i)
        for (std::size_t j = i + 1; j < x.count(n); ++j) {
            const auto a = x.simplex(n, i), b = x.simplex(n, j);
            if (!intersect(Simplex(a.begin(), a.end()), Simplex(b.begin(), b.end())).empty())
                continue;
            auto c = crossing(f, a, b);
            if (!c)
                continue;
            const std::size_t k = out.pairs.size();
            DoublePoint rep{Simplex(a.begin(), a.end()), Simplex(b.begin(), b.end()), c->first, c->second,
                            f.image(a, c->first), out.orbits, k + 1, true};
            DoublePoint other{rep.second, rep.first, c->second, c->first, rep.image, out.orbits, k, false};
            out.pairs.push_back(std::move(rep));
            out.pairs.push_back(std::move(other));
            ++out.orbits;
        }
    return out;
}

int SignLabeling::operator()(const DoublePointSet& d, std::size_t pair) const
{
    const auto& p = d.pairs.at(pair);
    const int v = value.at(p.orbit);
    return p.representative ? v : -v;
}

SignLabeling SignLabeling::from_bits(std::size_t orbits, std::uint64_t bits)
{
    SignLabeling s;
    for (std::size_t k = 0; k < orbits; ++k)
        s.value.push_back((bits >> k) & 1 ? -1 : 1);
    return s;
}

ExtendedLabeling extend_labeling(const PLMap& f, const DoublePointSet& d, const SignLabeling& s, Projection projection)
{
    if (s.value.size() != d.orbits)
        throw ParameterError("labeling has " + std::to_string(s.value.size()) + " values for " +
                             std::to_string(d.orbits) + " double points");
    for (int v : s.value)
        if (v != 1 && v != -1)
            throw ParameterError("labels must be +1 or -1");
    const auto& x = f.source();
    std::vector<std::string> names = x.vertices();
    std::vector<QVec> points = f.coords();
    std::vector<mpq_class> values(names.size());
    const std::size_t first_new = names.size();
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        names.push_back(indexed_name("~d", i, d.pairs.size()));
        if (x.find_vertex(names.back()))
            throw ConstructionError("vertex name '" + names.back() + "' is already taken");
        points.push_back(d.pairs[i].image);
        values.push_back(s(d, projection == Projection::first ? i : d.pairs[i].swapped));
    }

    // Pieces of each subdivided simplex, as (vertex, barycentric position) lists.
    using Piece = std::vector<std::pair<VertexId, QVec>>;
    std::map<Simplex, std::vector<Piece>> pieces;
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        const auto& p = d.pairs[i];
        auto& list = pieces[p.first];
        if (list.empty()) {
            Piece whole;
            for (std::size_t k = 0; k < p.first.size(); ++k) {
                QVec unit(p.first.size());
                unit[k] = 1;
                whole.emplace_back(p.first[k], unit);
            }
            list.push_back(std::move(whole));
        }
        const auto vertex = static_cast<VertexId>(first_new + i);
        bool placed = false;
        for (std::size_t k = 0; k < list.size() && !placed; ++k) {
            std::vector<QVec> basis;
            for (const auto& [v, pos] : list[k])
                basis.push_back(pos);
            auto beta = solve_square(basis, p.first_weights);
            if (!beta || std::any_of(beta->begin(), beta->end(), [](const mpq_class& b) { return b < 0; }))
                continue;
            if (std::any_of(beta->begin(), beta->end(), [](const mpq_class& b) { return b == 0; }))
                throw ConstructionError("double point " + names[vertex] + " lies on the boundary of a piece of (" +
                                        x.simplex_id(p.first) + "); regenerate the map with another seed");
            Piece old = std::move(list[k]);
            list.erase(list.begin() + static_cast<std::ptrdiff_t>(k));
            for (std::size_t drop = 0; drop < old.size(); ++drop) {
                Piece cone = old;
                cone[drop] = {vertex, p.first_weights};
                list.push_back(std::move(cone));
            }
            placed = true;
        }
        if (!placed)
            throw ConstructionError("double point " + names[vertex] + " was not located in (" +
                                    x.simplex_id(p.first) + ")");
    }

    std::vector<Simplex> facets;
    for (const auto& facet : x.facets())
        if (!pieces.count(facet))
            facets.push_back(facet);
    for (const auto& [carrier, list] : pieces) {
        if (!std::binary_search(facets.begin(), facets.end(), carrier) &&
            std::find(x.facets().begin(), x.facets().end(), carrier) == x.facets().end())
            throw ConstructionError("double point carrier (" + x.simplex_id(carrier) + ") is not a facet");
        for (const auto& piece : list) {
            Simplex s;
            for (const auto& [v, pos] : piece)
                s.push_back(v);
            std::sort(s.begin(), s.end());
            facets.push_back(std::move(s));
        }
    }
    Complex sub = Complex::from_index_facets(x.name() + "'", names, facets);

    // from_index_facets orders vertices by name; carry coordinates and values along.
    std::vector<QVec> coords(names.size());
    std::vector<mpq_class> sub_values(names.size());
    std::vector<VertexId> relabel(names.size());
    for (std::size_t v = 0; v < names.size(); ++v) {
        relabel[v] = *sub.find_vertex(names[v]);
        coords[relabel[v]] = points[v];
        sub_values[relabel[v]] = values[v];
    }
    ExtendedLabeling out{PLMap(sub, f.ambient_dim(), std::move(coords)), std::move(sub_values), {}, {}};
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        out.first_vertex.push_back(relabel[first_new + i]);
        out.second_vertex.push_back(relabel[first_new + d.pairs[i].swapped]);
    }
    return out;
}

SheetPairs meeting_pairs(const PLMap& f)
{
    const auto& x = f.source();
    SheetPairs out;
    const auto simplices = all_simplices(x);
    for (const auto& s : simplices)
        if (!affinely_independent(f, s))
            out.problems.push_back("image of (" + x.simplex_id(s) + ") is degenerate");
    for (std::size_t i = 0; i < simplices.size(); ++i)
        for (std::size_t j = i + 1; j < simplices.size(); ++j) {
            const auto& a = simplices[i];
            const auto& b = simplices[j];
            const auto shared = intersect(a, b);
            const auto a_only = subtract(a, shared), b_only = subtract(b, shared);
            if (a_only.empty() || b_only.empty())
                continue;  // a face of the other; injectivity covers it
            const auto meet = open_meet(f, a_only, b_only, shared);
            if (meet.kind == MeetKind::none)
                continue;
            if (meet.kind == MeetKind::point && a.size() == 1 && b.size() == 1) {
                out.meeting.emplace_back(a, b);
                out.meeting.emplace_back(b, a);
            } else {
                out.problems.push_back("open images of " + pair_label(x, a, b) + " meet");
            }
        }
    std::sort(out.meeting.begin(), out.meeting.end());
    return out;
}

JoinMap build_h(const ExtendedLabeling& phi, const ExtendedLabeling& psi, std::shared_ptr<const SheetPairs> p_pairs,
                std::shared_ptr<const SheetPairs> q_pairs)
{
    const auto& p = phi.subdivided();
    const auto& q = psi.subdivided();
    const int mp = phi.map.ambient_dim(), mq = psi.map.ambient_dim();
    Complex j = join(p, q);
    std::vector<QVec> coords(j.vertex_count());
    std::vector<int> side(j.vertex_count());
    std::vector<VertexId> origin(j.vertex_count());
    for (VertexId v = 0; v < j.vertex_count(); ++v) {
        const auto& name = j.vertex_name(v);
        const bool left = name.starts_with("L.");
        const auto& part = left ? p : q;
        const VertexId o = *part.find_vertex(std::string_view(name).substr(2));
        side[v] = left ? 1 : -1;
        origin[v] = o;
        QVec point(mp + mq + 2);
        if (left)
            for (int k = 0; k < mp; ++k)
                point[k] = phi.map.point(o)[k];
        else
            for (int k = 0; k < mq; ++k)
                point[mp + k] = psi.map.point(o)[k];
        point[mp + mq] = side[v];
        point[mp + mq + 1] = left ? phi.values[o] : psi.values[o];
        coords[v] = std::move(point);
    }
    if (!p_pairs)
        p_pairs = std::make_shared<const SheetPairs>(meeting_pairs(phi.map));
    if (!q_pairs)
        q_pairs = std::make_shared<const SheetPairs>(meeting_pairs(psi.map));
    PLMap h(j, mp + mq + 2, std::move(coords));
    return JoinMap{phi, psi, std::move(h), std::move(side), std::move(origin), std::move(p_pairs), std::move(q_pairs)};
}

MapJoinVerdict verify_double_points(const JoinMap& h, const DoublePointSet& df, const SignLabeling& phi,
                                    const DoublePointSet& dg, const SignLabeling& psi)
{
    MapJoinVerdict out;
    for (const auto& p : h.p_pairs->problems)
        out.problems.push_back("P: " + p);
    for (const auto& p : h.q_pairs->problems)
        out.problems.push_back("Q: " + p);
    if (h.phi.first_vertex.size() != df.pairs.size() || h.psi.first_vertex.size() != dg.pairs.size())
        throw ParameterError("labelings were extended over different double-point sets");

    const auto& j = h.map.source();
    std::vector<VertexId> p_to_join(h.phi.subdivided().vertex_count()), q_to_join(h.psi.subdivided().vertex_count());
    for (VertexId v = 0; v < j.vertex_count(); ++v)
        (h.side[v] > 0 ? p_to_join : q_to_join)[h.origin[v]] = v;

    auto sheets = [](const Complex& x, const SheetPairs& sp) {
        std::vector<std::pair<Simplex, Simplex>> out{{Simplex{}, Simplex{}}};
        for (const auto& s : all_simplices(x))
            out.emplace_back(s, s);
        out.insert(out.end(), sp.meeting.begin(), sp.meeting.end());
        return out;
    };
    const auto ps = sheets(h.phi.subdivided(), *h.p_pairs);
    const auto qs = sheets(h.psi.subdivided(), *h.q_pairs);
    auto lift = [&](const Simplex& a, const Simplex& b) {
        Simplex s;
        for (VertexId v : a)
            s.push_back(p_to_join[v]);
        for (VertexId v : b)
            s.push_back(q_to_join[v]);
        std::sort(s.begin(), s.end());
        return s;
    };

    std::map<std::pair<VertexId, VertexId>, std::size_t> p_index, q_index;
    for (std::size_t i = 0; i < df.pairs.size(); ++i)
        p_index[{h.phi.first_vertex[i], h.phi.second_vertex[i]}] = i;
    for (std::size_t i = 0; i < dg.pairs.size(); ++i)
        q_index[{h.psi.first_vertex[i], h.psi.second_vertex[i]}] = i;

    std::vector<Simplex> tops;
    for (std::size_t i = 0; i < j.count(j.dim()); ++i)
        tops.push_back(j.simplex_vector(j.dim(), i));
    const int m = h.map.ambient_dim();
    const mpq_class half(1, 2);

    for (const auto& [s1, t1] : ps)
        for (const auto& [s2, t2] : qs) {
            const Simplex s = lift(s1, s2), t = lift(t1, t2);
            if (s.empty() || t.empty() || s == t)
                continue;
            const auto shared = intersect(s, t);
            const auto a_only = subtract(s, shared), b_only = subtract(t, shared);
            if (a_only.empty() || b_only.empty())
                continue;  // h is injective on each join simplex
            ++out.candidates;
            const auto meet = open_meet(h.map, a_only, b_only, shared);
            if (meet.kind == MeetKind::none)
                continue;
            if (meet.kind == MeetKind::degenerate) {
                out.problems.push_back("images of " + pair_label(j, s, t) + " meet degenerately");
                continue;
            }
            JoinDoublePoint dp{s, t, meet.first, meet.second, 0, 0};
            if (h.map.image(s, dp.first_weights) != h.map.image(t, dp.second_weights)) {
                out.problems.push_back("double point on " + pair_label(j, s, t) + " does not replay");
                continue;
            }
            const bool shape = s.size() == 2 && t.size() == 2 && h.side[s[0]] > 0 && h.side[s[1]] < 0 &&
                               h.side[t[0]] > 0 && h.side[t[1]] < 0;
            const bool level = std::all_of(dp.first_weights.begin(), dp.first_weights.end(),
                                           [&](const mpq_class& w) { return w == half; }) &&
                               std::all_of(dp.second_weights.begin(), dp.second_weights.end(),
                                           [&](const mpq_class& w) { return w == half; });
            auto pi = p_index.find({h.origin[s[0]], h.origin[t[0]]});
            auto qi = q_index.find({h.origin[s[1]], h.origin[t[1]]});
            if (!shape || !level || pi == p_index.end() || qi == q_index.end()) {
                out.problems.push_back("double point on " + pair_label(j, s, t) + " is off the predicted locus");
                continue;
            }
            dp.p_pair = pi->second;
            dp.q_pair = qi->second;

            // Transversality on every pair of adjacent top simplices.
            for (const auto& sa : tops) {
                if (!std::includes(sa.begin(), sa.end(), s.begin(), s.end()))
                    continue;
                for (const auto& tb : tops) {
                    if (!std::includes(tb.begin(), tb.end(), t.begin(), t.end()))
                        continue;
                    if (static_cast<int>(sa.size() + tb.size()) != m + 2) {
                        out.problems.push_back("top simplices do not have complementary dimension");
                        continue;
                    }
                    ZMat edges(m);
                    for (int k = 0; k < m; ++k) {
                        for (std::size_t i = 1; i < sa.size(); ++i)
                            edges[k].push_back(h.map.scaled()[sa[i]][k] - h.map.scaled()[sa[0]][k]);
                        for (std::size_t i = 1; i < tb.size(); ++i)
                            edges[k].push_back(h.map.scaled()[tb[i]][k] - h.map.scaled()[tb[0]][k]);
                    }
                    if (determinant(std::move(edges)) == 0)
                        out.problems.push_back("double point on " + pair_label(j, s, t) + " is not transverse on " +
                                               pair_label(j, sa, tb));
                }
            }
            out.found.push_back(std::move(dp));
        }

    std::set<std::pair<std::size_t, std::size_t>> predicted, found;
    for (std::size_t a = 0; a < df.pairs.size(); ++a)
        for (std::size_t b = 0; b < dg.pairs.size(); ++b)
            if (phi(df, a) == psi(dg, b))
                predicted.emplace(a, b);
    for (const auto& dp : out.found)
        if (!found.emplace(dp.p_pair, dp.q_pair).second)
            out.problems.push_back("double point over (" + std::to_string(dp.p_pair) + ", " +
                                   std::to_string(dp.q_pair) + ") found twice");
    for (const auto& [a, b] : found)
        if (!found.count({df.pairs[a].swapped, dg.pairs[b].swapped}))
            out.problems.push_back("double points are not closed under the swap");
    out.predicted = predicted.size();
    if (found != predicted)
        out.problems.push_back("found " + std::to_string(found.size()) + " double points, predicted " +
                               std::to_string(predicted.size()));
    out.ok = out.problems.empty();
    return out;
}

} // namespace vko
