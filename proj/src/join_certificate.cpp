#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "vko/builders.hpp"
#include "vko/deleted.hpp"
#include "vko/errors.hpp"
#include "vko/mapjoin.hpp"
#include "vko/obstruction.hpp"

namespace vko {

namespace {

// A cell of the deleted join as a pair of deleted-product cells: c1 holds the
// left parts (s1, t1), c2 the right parts (s2, t2).  `top_first` says c1 lies in
// the top grade and c2 one below (or both top when the pair is in grade 2G+2).
std::uint64_t tensor_key(bool top_first, std::size_t i1, std::size_t i2)
{
    return (static_cast<std::uint64_t>(top_first) << 63) | (static_cast<std::uint64_t>(i1) << 32) | i2;
}

struct JoinContext {
    const Complex& p;
    const DeletedCellComplex& d;
    const Complex& k;
    std::vector<VertexId> left, right;
    int top = 0;

    Simplex lift(const ProductCell& c1, bool first1, const ProductCell& c2, bool first2) const
    {
        Simplex s;
        for (VertexId v : p.simplex_vector(first1 ? c1.dim_first : c1.dim_second, first1 ? c1.first : c1.second))
            s.push_back(left[v]);
        for (VertexId v : p.simplex_vector(first2 ? c2.dim_first : c2.dim_second, first2 ? c2.first : c2.second))
            s.push_back(right[v]);
        std::sort(s.begin(), s.end());
        return s;
    }

    // S = s1 * s2 and T = t1 * t2 for the pair (c1 in grade g1, c2 in grade g2).
    std::pair<Simplex, Simplex> parts(int g1, std::size_t i1, int g2, std::size_t i2) const
    {
        const auto& c1 = d.cells(g1)[i1];
        const auto& c2 = d.cells(g2)[i2];
        return {lift(c1, true, c2, true), lift(c1, false, c2, false)};
    }

    std::size_t gid(const Simplex& s) const { return k.global_id(static_cast<int>(s.size()) - 1, *k.find(s)); }

    bool representative(const std::pair<Simplex, Simplex>& st) const { return gid(st.first) < gid(st.second); }

    std::string cell_id(const std::pair<Simplex, Simplex>& st) const
    {
        return k.simplex_id(st.first) + "|" + k.simplex_id(st.second);
    }
};

mpq_class value_at(const std::vector<mpq_class>& phi, const Simplex& s, const QVec& w)
{
    mpq_class v = 0;
    for (std::size_t k = 0; k < s.size(); ++k)
        v += w[k] * phi[s[k]];
    return v;
}

} // namespace

JoinCertificate certify_join_mod2(const Complex& p, std::uint64_t seed, std::size_t sample)
{
    const int n = p.dim();
    if (n < 1)
        throw ParameterError("certify_join_mod2 needs a complex of dimension >= 1");
    JoinCertificate out;
    out.complex_name = p.name() + "*" + p.name();
    out.m = 4 * n + 2;

    const auto f = moment_map(p, 2 * n, seed);
    if (auto problems = genericity_check(f); !problems.empty())
        throw GenericityError("moment map of " + p.name() + " is not generic: " + problems.front());
    const auto report = vk_obstruction(p, 2 * n, Ring::Z2, seed);
    if (report.nonzero) {
        out.problems.push_back("mod-2 obstruction of " + p.name() + " is nonzero");
        return out;
    }
    if (report.map->fingerprint() != f.fingerprint())
        out.problems.push_back("obstruction report used a different map");

    const auto dp = deleted_product(p);
    const auto& d = *dp;
    const auto q = quotient(dp, SignMode::product_sign);
    const int top = 2 * n;
    const auto& tops = d.cells(top);
    const auto& below = d.cells(top - 1);

    // Crossings of f, and vertex values separating every crossing.
    struct Cross {
        std::size_t cell;
        Simplex first, second;
        QVec a, b;
    };
    std::vector<Cross> crossings;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        const auto& c = tops[i];
        if (c.dim_first != n)
            continue;
        auto s = p.simplex_vector(n, c.first), t = p.simplex_vector(n, c.second);
        if (auto x = crossing(f, s, t))
            crossings.push_back({i, std::move(s), std::move(t), x->first, x->second});
    }
    out.p_crossings = crossings.size() / 2;

    const auto t_of = [&] {
        std::vector<mpq_class> t;
        for (const auto& pt : f.coords())
            t.push_back(pt[0]);
        return t;
    }();
    // The next moment coordinate: on the curve in R^{2n+1} disjoint n-simplices
    // have disjoint images, so it separates the two points of each crossing.
    std::vector<mpq_class> phi(p.vertex_count());
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), t_of[v].get_num_mpz_t(), static_cast<unsigned long>(2 * n + 1));
        phi[v] = power;
    }
    for (const auto& c : crossings)
        if (value_at(phi, c.first, c.a) == value_at(phi, c.second, c.b))
            throw GenericityError("vertex values do not separate a crossing of " + p.name());

    // e on ordered top cells: crossing with phi(x) > phi(y).
    std::vector<char> e(tops.size(), 0), crosses(tops.size(), 0);
    for (const auto& c : crossings) {
        crosses[c.cell] = 1;
        e[c.cell] = value_at(phi, c.first, c.a) > value_at(phi, c.second, c.b);
    }
    auto te = [&](std::size_t i) { return e[d.swap_index(top, i)]; };

    // beta lifts the mod-2 witness; b keeps it on representatives.
    std::vector<char> beta(below.size(), 0), b(below.size(), 0);
    for (std::size_t i = 0; i < below.size(); ++i) {
        const auto orbit = q->orbit_of(top - 1, i).first;
        auto it = report.solution.witness.support.find(q->cell_id(top - 1, orbit));
        beta[i] = it != report.solution.witness.support.end() && mpz_odd_p(it->second.get_mpz_t());
        b[i] = beta[i] && q->representative(top - 1, orbit) == i;
    }
    auto tb = [&](std::size_t i) { return b[d.swap_index(top - 1, i)]; };

    std::vector<std::vector<std::size_t>> cofaces(below.size());
    std::vector<char> db(tops.size(), 0), dbeta(tops.size(), 0);
    std::vector<std::pair<std::size_t, int>> faces;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        faces.clear();
        d.boundary(top, i, faces);
        for (auto [j, sign] : faces) {
            cofaces[j].push_back(i);
            db[i] ^= b[j];
            dbeta[i] ^= beta[j];
        }
    }
    std::vector<char> w(tops.size());
    for (std::size_t i = 0; i < tops.size(); ++i) {
        w[i] = e[i] ^ db[i];
        if (dbeta[i] != (e[i] ^ te(i)))
            out.problems.push_back("lifted witness does not bound the cocycle of " + p.name());
    }
    for (std::size_t i = 0; i < tops.size(); ++i)
        if (w[i] != w[d.swap_index(top, i)]) {
            out.problems.push_back("e + db is not swap invariant");
            break;
        }
    if (!out.problems.empty())
        return out;

    const Complex k = join(p, p);
    JoinContext ctx{p, d, k, {}, {}, top};
    for (const auto& name : p.vertices()) {
        ctx.left.push_back(*k.find_vertex("L." + name));
        ctx.right.push_back(*k.find_vertex("R." + name));
    }
    std::vector<QVec> coords(k.vertex_count(), QVec(out.m));
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
        for (int c = 0; c < 2 * n; ++c) {
            coords[ctx.left[v]][c] = f.point(v)[c];
            coords[ctx.right[v]][2 * n + c] = f.point(v)[c];
        }
        coords[ctx.left[v]][4 * n] = 1;
        coords[ctx.right[v]][4 * n] = -1;
        coords[ctx.left[v]][4 * n + 1] = phi[v];
        coords[ctx.right[v]][4 * n + 1] = phi[v];
    }
    out.map = std::make_shared<const PLMap>(k, out.m, std::move(coords));
    out.map_fingerprint = out.map->fingerprint();
    out.top_cells = d.count(top) * d.count(top) / 2;
    out.next_cells = d.count(top) * d.count(top - 1);

    // B = e (x) tb + te (x) b + beta (x) w, all ordered cells of grade 4n+1.
    std::unordered_set<std::uint64_t> witness;
    auto toggle = [](std::unordered_set<std::uint64_t>& set, std::uint64_t key) {
        if (!set.erase(key))
            set.insert(key);
    };
    std::vector<std::size_t> e_support, te_support, w_support, b_support, tb_support, beta_support;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        if (e[i])
            e_support.push_back(i);
        if (te(i))
            te_support.push_back(i);
        if (w[i])
            w_support.push_back(i);
    }
    for (std::size_t i = 0; i < below.size(); ++i) {
        if (b[i])
            b_support.push_back(i);
        if (tb(i))
            tb_support.push_back(i);
        if (beta[i])
            beta_support.push_back(i);
    }
    for (auto i : e_support)
        for (auto j : tb_support)
            toggle(witness, tensor_key(true, i, j));
    for (auto i : te_support)
        for (auto j : b_support)
            toggle(witness, tensor_key(true, i, j));
    for (auto i : beta_support)
        for (auto j : w_support)
            toggle(witness, tensor_key(false, i, j));

    // Push B to its cofaces.  The top parts have no cofaces, so only the part
    // one grade below grows.
    std::unordered_set<std::uint64_t> boundary;
    for (auto key : witness) {
        const bool top_first = key >> 63;
        const std::size_t i1 = (key >> 32) & 0x7fffffff, i2 = key & 0xffffffff;
        if (top_first)
            for (auto j : cofaces[i2])
                toggle(boundary, tensor_key(true, i1, j));
        else
            for (auto j : cofaces[i1])
                toggle(boundary, tensor_key(true, j, i2));
    }
    auto c_h = [&](std::size_t i1, std::size_t i2) { return (e[i1] && te(i2)) || (te(i1) && e[i2]); };
    const std::size_t expected = 2 * e_support.size() * te_support.size();
    for (auto key : boundary) {
        const std::size_t i1 = (key >> 32) & 0x7fffffff, i2 = key & 0xffffffff;
        if (!c_h(i1, i2)) {
            out.problems.push_back("dB is nonzero off the support of c_h");
            break;
        }
    }
    if (boundary.size() != expected)
        out.problems.push_back("dB has " + std::to_string(boundary.size()) + " cells, c_h has " +
                               std::to_string(expected));

    // Orbit cochains on representatives.
    out.cocycle = Cochain{Ring::Z2, out.m, {}};
    out.witness = Cochain{Ring::Z2, out.m - 1, {}};
    auto record = [&](Cochain& c, int g1, std::size_t i1, int g2, std::size_t i2) {
        const auto st = ctx.parts(g1, i1, g2, i2);
        if (ctx.representative(st))
            c.support.emplace(ctx.cell_id(st), 1);
    };
    for (auto i : e_support)
        for (auto j : te_support) {
            record(out.cocycle, top, i, top, j);
            record(out.cocycle, top, j, top, i);
        }
    for (auto key : witness) {
        const bool top_first = key >> 63;
        const std::size_t i1 = (key >> 32) & 0x7fffffff, i2 = key & 0xffffffff;
        record(out.witness, top_first ? top : top - 1, i1, top_first ? top - 1 : top, i2);
    }
    out.cocycle_support = out.cocycle.support.size();
    out.witness_support = out.witness.support.size();
    if (2 * out.cocycle_support != expected || 2 * out.witness_support != witness.size())
        out.problems.push_back("cochains are not swap invariant");

    // Replay the crossing predicate of h.
    std::mt19937_64 rng(seed ^ 0x6a6f696eULL);
    auto check = [&](std::size_t i1, std::size_t i2) {
        const auto [s, t] = ctx.parts(top, i1, top, i2);
        ++out.predicate_checks;
        try {
            auto x = crossing(*out.map, s, t);
            if (x.has_value() != c_h(i1, i2))
                out.problems.push_back("c_h disagrees with h on " + ctx.cell_id({s, t}));
            if (x && x->sign != 0)
                ++out.transverse_points;
        } catch (const GenericityError& err) {
            out.problems.push_back("h is not generic on " + ctx.cell_id({s, t}) + ": " + err.what());
        }
    };
    // Every pair of crossing cells (this contains the support of c_h), then
    // uniformly sampled cells.
    std::vector<std::size_t> crossing_cells;
    for (std::size_t i = 0; i < tops.size(); ++i)
        if (crosses[i])
            crossing_cells.push_back(i);
    for (auto i : crossing_cells)
        for (auto j : crossing_cells)
            check(i, j);
    for (std::size_t k = 0; k < sample && !tops.empty(); ++k)
        check(rng() % tops.size(), rng() % tops.size());
    out.verified = out.problems.empty();
    return out;
}

} // namespace vko
