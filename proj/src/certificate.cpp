#include "vko/certificate.hpp"

#include <algorithm>
#include <set>

#include "vko/builders.hpp"
#include "vko/errors.hpp"

namespace vko {

namespace {

json integer_to_json(const mpz_class& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

mpz_class integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return mpz_class(j.get<long>());
    if (j.is_string())
        return mpz_class(j.get<std::string>());
    throw ParameterError("expected an integer, got " + j.dump());
}

mpq_class rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return mpq_class(j.get<long>());
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return q;
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParameterError(std::string("certificate lacks \"") + key + "\"");
    return j.at(key);
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto k = s.find(sep, start);
        out.emplace_back(s.substr(start, k - start));
        if (k == std::string_view::npos)
            return out;
        start = k + 1;
    }
}

std::vector<std::string> verify_obstruction(const json& j)
{
    Complex x;
    const auto r = report_from_certificate(j, x);
    std::vector<std::string> problems;
    if (r.map->fingerprint() != field(field(j, "map"), "fingerprint").get<std::string>())
        problems.push_back("map fingerprint does not match its coordinates");
    if (r.verdict() != field(j, "verdict").get<std::string>())
        problems.push_back("verdict field disagrees with the certificate");
    for (auto& p : verify_report(x, r))
        problems.push_back(p);
    return problems;
}

std::vector<std::string> verify_coboundary(const json& j)
{
    const SimplicialCells cells(complex_from_json(field(j, "complex")));
    const auto c = cochain_from_json(field(j, "cocycle"));
    const auto s = solution_from_json(field(j, "solution"), c.ring);
    return verify_solution(cells, c, s);
}

std::vector<std::string> verify_join(const json& j)
{
    std::vector<std::string> problems;
    const Complex p = complex_from_json(field(j, "factor"));
    const int n = p.dim();
    const int m = field(j, "m").get<int>();
    if (m != 4 * n + 2)
        return {"m must be 4 dim + 2"};
    const Complex k = join(p, p);
    const PLMap h = map_from_json(field(j, "map"), k);
    if (h.fingerprint() != field(field(j, "map"), "fingerprint").get<std::string>())
        problems.push_back("map fingerprint does not match its coordinates");

    // Frame: L.v -> (f(v), 0, 1, phi(v)), R.v -> (0, g(v), -1, psi(v)).
    std::vector<VertexId> left, right;
    std::vector<QVec> fc, gc;
    std::vector<mpq_class> phi, psi;
    for (const auto& name : p.vertices()) {
        left.push_back(*k.find_vertex("L." + name));
        right.push_back(*k.find_vertex("R." + name));
        const auto& a = h.point(left.back());
        const auto& b = h.point(right.back());
        fc.emplace_back(a.begin(), a.begin() + 2 * n);
        gc.emplace_back(b.begin() + 2 * n, b.begin() + 4 * n);
        const bool framed = std::all_of(a.begin() + 2 * n, a.begin() + 4 * n, [](auto& c) { return c == 0; }) &&
                            std::all_of(b.begin(), b.begin() + 2 * n, [](auto& c) { return c == 0; }) &&
                            a[4 * n] == 1 && b[4 * n] == -1;
        if (!framed)
            problems.push_back("vertex " + name + " is not in the join frame");
        phi.push_back(a[4 * n + 1]);
        psi.push_back(b[4 * n + 1]);
    }
    if (!problems.empty())
        return problems;
    const PLMap f(p, 2 * n, fc), g(p, 2 * n, gc);
    for (auto& e : genericity_check(f))
        problems.push_back("left factor: " + e);
    for (auto& e : genericity_check(g))
        problems.push_back("right factor: " + e);
    if (!problems.empty())
        return problems;

    struct Cross {
        Simplex first, second;
    };
    auto crossings = [&](const PLMap& map, const std::vector<mpq_class>& values, const char* side) {
        std::vector<Cross> out;
        for (std::size_t a = 0; a < p.count(n); ++a)
            for (std::size_t b = 0; b < p.count(n); ++b) {
                auto s = p.simplex_vector(n, a), t = p.simplex_vector(n, b);
                if (std::find_first_of(s.begin(), s.end(), t.begin(), t.end()) != s.end())
                    continue;
                auto x = crossing(map, s, t);
                if (!x)
                    continue;
                mpq_class u = 0, w = 0;
                for (int i = 0; i <= n; ++i) {
                    u += x->first[i] * values[s[i]];
                    w += x->second[i] * values[t[i]];
                }
                if (u == w)
                    problems.push_back(std::string(side) + " values do not separate a crossing");
                out.push_back({std::move(s), std::move(t)});
            }
        return out;
    };
    const auto fx = crossings(f, phi, "left");
    const auto gx = crossings(g, psi, "right");
    if (!problems.empty())
        return problems;

    auto lift = [&](const Simplex& a, const Simplex& b) {
        Simplex s;
        for (VertexId v : a)
            s.push_back(left[v]);
        for (VertexId v : b)
            s.push_back(right[v]);
        std::sort(s.begin(), s.end());
        return s;
    };
    auto gid = [&](const Simplex& s) { return k.global_id(static_cast<int>(s.size()) - 1, *k.find(s)); };
    auto orbit_id = [&](const Simplex& s, const Simplex& t) {
        return gid(s) < gid(t) ? k.simplex_id(s) + "|" + k.simplex_id(t) : k.simplex_id(t) + "|" + k.simplex_id(s);
    };

    // A double point of h over S x T lies over crossings of both factors.
    std::set<std::string> cocycle;
    for (const auto& a : fx)
        for (const auto& b : gx) {
            const auto s = lift(a.first, b.first), t = lift(a.second, b.second);
            try {
                if (crossing(h, s, t))
                    cocycle.insert(orbit_id(s, t));
            } catch (const GenericityError& e) {
                problems.push_back(std::string("h: ") + e.what());
            }
        }
    const auto c = cochain_from_json(field(j, "cocycle"));
    const auto b = cochain_from_json(field(j, "witness"));
    std::set<std::string> stated;
    for (const auto& [id, v] : c.support)
        if (mpz_odd_p(v.get_mpz_t()))
            stated.insert(id);
    if (stated != cocycle)
        problems.push_back("cocycle does not match the crossings of h (" + std::to_string(cocycle.size()) +
                           " crossing orbits, " + std::to_string(stated.size()) + " stated)");

    // d B on orbit cells: push each witness cell and its swap to cofaces, keep
    // representatives.
    std::set<std::string> boundary;
    auto toggle = [&](const std::string& id) {
        if (!boundary.erase(id))
            boundary.insert(id);
    };
    for (const auto& [id, v] : b.support) {
        if (!mpz_odd_p(v.get_mpz_t()))
            continue;
        const auto parts = split(id, '|');
        if (parts.size() != 2) {
            problems.push_back("bad witness cell id " + id);
            continue;
        }
        const Simplex s = k.parse_simplex(parts[0]), t = k.parse_simplex(parts[1]);
        if (!k.find(s) || !k.find(t) || static_cast<int>(s.size() + t.size()) != m + 1 ||
            std::find_first_of(s.begin(), s.end(), t.begin(), t.end()) != s.end() || gid(s) > gid(t)) {
            problems.push_back("witness cell " + id + " is not an orbit representative of degree m - 1");
            continue;
        }
        for (const auto& [x, y] : {std::pair{s, t}, std::pair{t, s}})
            for (VertexId v = 0; v < k.vertex_count(); ++v) {
                if (std::binary_search(x.begin(), x.end(), v) || std::binary_search(y.begin(), y.end(), v))
                    continue;
                Simplex grown = x;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), v), v);
                if (!k.find(grown))
                    continue;
                if (gid(grown) < gid(y))
                    toggle(k.simplex_id(grown) + "|" + k.simplex_id(y));
                if (gid(y) < gid(grown))
                    toggle(k.simplex_id(y) + "|" + k.simplex_id(grown));
            }
    }
    // A representative cell is reached once per face of it lying in the orbit.
    if (boundary != stated)
        problems.push_back("coboundary of the witness differs from the cocycle");
    return problems;
}

} // namespace

json cochain_to_json(const Cochain& c)
{
    json support = json::object();
    for (const auto& [id, v] : c.support)
        support[id] = integer_to_json(v);
    return {{"ring", std::string(ring_name(c.ring))}, {"degree", c.degree}, {"support", support}};
}

Cochain cochain_from_json(const json& j)
{
    Cochain c{parse_ring(field(j, "ring").get<std::string>()), field(j, "degree").get<int>(), {}};
    for (const auto& [id, v] : field(j, "support").items()) {
        auto value = integer_from_json(v);
        if (c.ring == Ring::Z2)
            value = mpz_odd_p(value.get_mpz_t()) ? 1 : 0;
        if (value != 0)
            c.support.emplace(id, value);
    }
    return c;
}

json solution_to_json(const CoboundarySolution& s)
{
    json out{{"solvable", s.solvable}};
    if (s.solvable) {
        out["witness"] = cochain_to_json(s.witness);
    } else {
        json dual = json::object();
        for (const auto& [id, v] : s.dual)
            dual[id] = v.get_str();
        out["dual"] = dual;
    }
    return out;
}

CoboundarySolution solution_from_json(const json& j, Ring ring)
{
    CoboundarySolution s;
    s.ring = ring;
    s.solvable = field(j, "solvable").get<bool>();
    if (s.solvable) {
        s.witness = cochain_from_json(field(j, "witness"));
    } else {
        for (const auto& [id, v] : field(j, "dual").items())
            s.dual.emplace(id, rational_from_json(v));
    }
    return s;
}

json map_to_json(const PLMap& f)
{
    json coords = json::object();
    for (VertexId v = 0; v < f.source().vertex_count(); ++v) {
        json row = json::array();
        for (const auto& c : f.point(v))
            row.push_back(c.get_str());
        coords[f.source().vertex_name(v)] = row;
    }
    return {{"m", f.ambient_dim()}, {"fingerprint", f.fingerprint()}, {"coords", coords}};
}

PLMap map_from_json(const json& j, const Complex& source)
{
    const int m = field(j, "m").get<int>();
    const auto& coords = field(j, "coords");
    std::vector<QVec> points;
    for (const auto& name : source.vertices()) {
        if (!coords.contains(name))
            throw ParameterError("map has no coordinates for vertex " + name);
        QVec p;
        for (const auto& c : coords.at(name))
            p.push_back(rational_from_json(c));
        if (static_cast<int>(p.size()) != m)
            throw ParameterError("vertex " + name + " has " + std::to_string(p.size()) + " coordinates, expected " +
                                 std::to_string(m));
        points.push_back(std::move(p));
    }
    if (coords.size() != source.vertex_count())
        throw ParameterError("map has coordinates for vertices outside the complex");
    return PLMap(source, m, std::move(points));
}

json obstruction_certificate(const ObstructionReport& r)
{
    json out{{"kind", "obstruction"},
             {"complex", complex_to_json(r.map->source())},
             {"m", r.m},
             {"ring", std::string(ring_name(r.ring))},
             {"sign_mode", std::string(sign_mode_name(r.mode))},
             {"seed", r.seed},
             {"verdict", r.verdict()},
             {"orbit_cells", r.orbit_cells},
             {"crossing_orbits", r.crossing_orbits},
             {"map", map_to_json(*r.map)},
             {"cocycle", cochain_to_json(r.cocycle)},
             {"solution", solution_to_json(r.solution)}};
    return out;
}

ObstructionReport report_from_certificate(const json& j, Complex& complex_out)
{
    if (field(j, "kind") != "obstruction")
        throw ParameterError("not an obstruction certificate");
    complex_out = complex_from_json(field(j, "complex"));
    ObstructionReport r;
    r.complex_name = complex_out.name();
    r.m = field(j, "m").get<int>();
    r.ring = parse_ring(field(j, "ring").get<std::string>());
    r.mode = parse_sign_mode(field(j, "sign_mode").get<std::string>());
    r.seed = field(j, "seed").get<std::uint64_t>();
    r.nonzero = field(j, "verdict").get<std::string>() == "nonzero";
    r.map = std::make_shared<const PLMap>(map_from_json(field(j, "map"), complex_out));
    r.cocycle = cochain_from_json(field(j, "cocycle"));
    r.solution = solution_from_json(field(j, "solution"), r.ring);
    r.orbit_cells = field(j, "orbit_cells").get<std::size_t>();
    r.crossing_orbits = field(j, "crossing_orbits").get<std::size_t>();
    return r;
}

json join_certificate(const Complex& factor, const JoinCertificate& c)
{
    return {{"kind", "join_mod2"},
            {"factor", complex_to_json(factor)},
            {"complex", c.complex_name},
            {"m", c.m},
            {"ring", "Z2"},
            {"verdict", c.verified ? "zero" : "unverified"},
            {"factor_crossings", c.p_crossings},
            {"top_orbit_cells", c.top_cells},
            {"next_orbit_cells", c.next_cells},
            {"predicate_checks", c.predicate_checks},
            {"transverse_points", c.transverse_points},
            {"map", map_to_json(*c.map)},
            {"cocycle", cochain_to_json(c.cocycle)},
            {"witness", cochain_to_json(c.witness)}};
}

json coboundary_certificate(const Complex& x, const Cochain& c, const CoboundarySolution& s)
{
    return {{"kind", "coboundary"},
            {"complex", complex_to_json(x)},
            {"cocycle", cochain_to_json(c)},
            {"solution", solution_to_json(s)}};
}

std::vector<std::string> verify_certificate(const json& j)
{
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "obstruction")
        return verify_obstruction(j);
    if (kind == "join_mod2")
        return verify_join(j);
    if (kind == "coboundary")
        return verify_coboundary(j);
    throw ParameterError("unknown certificate kind '" + kind + "'");
}

} // namespace vko
