#include "pipelines.hpp"

#include <fstream>
#include <iostream>

#include "vko/builders.hpp"
#include "vko/errors.hpp"
#include "vko/mapjoin.hpp"
#include "vko/surgery.hpp"

namespace vko::cli {

namespace fs = std::filesystem;

std::string write_text(const fs::path& path, const std::string& text)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParameterError("cannot write " + path.string());
    out << text;
    return sha256_hex(text);
}

Run::Run(std::string pipeline, const PipelineOptions& options) : pipeline_(std::move(pipeline)), options_(options)
{
    fs::create_directories(options_.out);
}

void Run::step(const std::string& name, const std::function<json()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    json result;
    try {
        result = body();
    } catch (const BudgetExceeded& e) {
        timings_[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        steps_.push_back({{"step", name}, {"ok", false}, {"budget_exceeded", e.what()}});
        mark_incomplete(name + ": " + e.what());
        return;
    }
    timings_[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!result.contains("ok"))
        result["ok"] = true;
    if (!result["ok"].get<bool>())
        failed_ = true;
    result["step"] = name;
    std::cerr << (result["ok"].get<bool>() ? "ok    " : "FAIL  ") << name << '\n';
    steps_.push_back(std::move(result));
}

json Run::certificate(const std::string& file, const json& cert)
{
    const std::string text = cert.dump(2) + "\n";
    const auto hash = write_text(options_.out / file, text);
    const auto problems = verify_certificate(json::parse(text));
    if (!problems.empty()) {
        failed_ = true;
        return {{"path", file}, {"sha256", hash}, {"verified", false}, {"problems", problems}};
    }
    return {{"path", file}, {"sha256", hash}, {"verified", true}};
}

json Run::artifact(const std::string& file, const json& content)
{
    return {{"path", file}, {"sha256", write_text(options_.out / file, content.dump(2) + "\n")}};
}

void Run::mark_incomplete(const std::string& reason)
{
    incomplete_ = reason;
}

int Run::finish()
{
    json report{{"pipeline", pipeline_},
                {"seed", options_.seed},
                {"max_cells", options_.budget.max_cells},
                {"max_seconds", options_.budget.max_seconds},
                {"steps", steps_},
                {"complete", incomplete_.empty()},
                {"ok", !failed_ && incomplete_.empty()}};
    if (!incomplete_.empty())
        report["incomplete"] = incomplete_;
    write_text(options_.out / "report.json", report.dump(2) + "\n");
    write_text(options_.out / "timings.json", json{{"pipeline", pipeline_}, {"seconds", timings_}}.dump(2) + "\n");
    if (failed_)
        return verification_failed;
    if (!incomplete_.empty())
        return budget_exceeded;
    return ok;
}

namespace {

std::string file_stem(std::string name)
{
    for (char& c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.')
            c = '_';
    return name;
}

// One obstruction verdict with its certificate; `expect` is "zero", "nonzero" or empty.
json obstruction_step(Run& run, const Complex& x, int m, Ring ring, const std::string& expect)
{
    const auto r = vk_obstruction(x, m, ring, run.options().seed, run.options().budget);
    const auto file = file_stem(x.name()) + ".m" + std::to_string(m) + "." + std::string(ring_name(ring)) + ".cert.json";
    json out{{"complex", x.name()},
             {"m", m},
             {"ring", std::string(ring_name(ring))},
             {"verdict", r.verdict()},
             {"orbit_cells", r.orbit_cells},
             {"crossing_orbits", r.crossing_orbits},
             {"map_fingerprint", r.map->fingerprint()},
             {"certificate", run.certificate(file, obstruction_certificate(r))}};
    if (!expect.empty())
        out["expected"] = expect;
    out["ok"] = out["certificate"]["verified"].get<bool>() && (expect.empty() || expect == r.verdict());
    return out;
}

json group_json(const GroupDescriptor& g)
{
    json torsion = json::array();
    for (const auto& t : g.torsion)
        torsion.push_back(t.get_str());
    return {{"group", g.to_string()}, {"free_rank", g.free_rank}, {"torsion", torsion}};
}

int graph_planarity(const PipelineOptions& o)
{
    Run run("graph_planarity", o);
    const std::vector<std::pair<Complex, std::string>> graphs = {
        {complete_graph(5), "nonzero"},
        {complete_bipartite(3, 3), "nonzero"},
        {complete_graph(4), "zero"},
        {cycle(5), "zero"},
        {random_planar_graph(10, o.seed), "zero"},
    };
    for (const auto& [g, expect] : graphs)
        for (Ring ring : {Ring::Z, Ring::Z2})
            run.step(g.name() + " " + std::string(ring_name(ring)),
                     [&] { return obstruction_step(run, g, 2, ring, expect); });
    return run.finish();
}

int example_e1(const PipelineOptions& o)
{
    Run run("example_e1", o);
    const auto x = rp2_six_vertex();
    const SimplicialCells cells(x);
    run.step("cohomology", [&] {
        json groups = json::object();
        for (Ring ring : {Ring::Z, Ring::Z2})
            for (int d = 0; d <= 2; ++d)
                groups[std::string(ring_name(ring))]["H" + std::to_string(d)] =
                    group_json(homology_groups(cells, d, ring, Direction::cohomology));
        const auto top = homology_groups(cells, 2, Ring::Z, Direction::cohomology);
        return json{{"complex", x.name()},
                    {"f_vector", x.f_vector()},
                    {"cohomology", groups},
                    {"ok", top == GroupDescriptor{0, {mpz_class(2)}}}};
    });
    run.step("facet dual has order 2", [&] {
        const auto c = facet_dual(x, x.simplex_vector(2, 0), 1);
        auto twice = c;
        twice.support.begin()->second = 2;
        const auto once = coboundary_solve(cells, c);
        const auto double_ = coboundary_solve(cells, twice);
        json out{{"facet", x.simplex_id(x.simplex_vector(2, 0))},
                 {"dual_is_coboundary", once.solvable},
                 {"twice_dual_is_coboundary", double_.solvable},
                 {"not_coboundary", run.certificate("e1.dual.cert.json", coboundary_certificate(x, c, once))},
                 {"twice_coboundary", run.certificate("e1.twice.cert.json", coboundary_certificate(x, twice, double_))}};
        out["ok"] = !once.solvable && double_.solvable && out["not_coboundary"]["verified"].get<bool>() &&
                    out["twice_coboundary"]["verified"].get<bool>();
        return out;
    });
    return run.finish();
}

int example_e2(const PipelineOptions& o)
{
    Run run("example_e2", o);
    const auto sphere = barycentric_subdivision(boundary_sphere(3));
    const auto r = reglue_degree2(sphere, sphere.simplex_vector(2, 0));
    const auto& n = r.complex;
    const SimplicialCells cells(n);
    run.step("regluing", [&] {
        return json{{"complex", n.name()},
                    {"f_vector", n.f_vector()},
                    {"euler_characteristic", n.euler_characteristic()},
                    {"file", run.artifact("N.json", complex_to_json(n))},
                    {"ok", validate(n).empty()}};
    });
    run.step("cohomology", [&] {
        const auto h2 = homology_groups(cells, 2, Ring::Z, Direction::cohomology);
        return json{{"H2", group_json(h2)}, {"ok", h2 == GroupDescriptor{1, {}}}};
    });
    run.step("p cobordant to 2r", [&] {
        const auto z = top_cycle(n);
        auto weight = [&](const Simplex& s) { return z[*n.find(s)]; };
        const Simplex p = r.marked.at("p"), rr = r.marked.at("r");
        const mpz_class sp = sgn(weight(p)), sr = sgn(weight(rr));
        auto combine = [&](const mpz_class& k) {
            Cochain c = facet_dual(n, p, sp);
            c.support.emplace(n.simplex_id(rr), -k * sr);
            return c;
        };
        const auto twice = coboundary_solve(cells, combine(2));
        const auto once = coboundary_solve(cells, combine(1));
        json out{{"p", n.simplex_id(p)},
                 {"r", n.simplex_id(rr)},
                 {"top_cycle_weight_p", weight(p).get_str()},
                 {"top_cycle_weight_r", weight(rr).get_str()},
                 {"p_minus_2r_is_coboundary", twice.solvable},
                 {"p_minus_r_is_coboundary", once.solvable},
                 {"witness", run.certificate("e2.p-2r.cert.json", coboundary_certificate(n, combine(2), twice))},
                 {"obstruction", run.certificate("e2.p-r.cert.json", coboundary_certificate(n, combine(1), once))}};
        out["ok"] = twice.solvable && !once.solvable && out["witness"]["verified"].get<bool>() &&
                    out["obstruction"]["verified"].get<bool>();
        return out;
    });
    return run.finish();
}

int flores(const PipelineOptions& o)
{
    Run run("flores", o);
    for (const auto& x : {skeleton_of_simplex(6, 2), three_point_join(3)})
        for (Ring ring : {Ring::Z2, Ring::Z})
            run.step(x.name() + " " + std::string(ring_name(ring)),
                     [&] { return obstruction_step(run, x, 4, ring, "nonzero"); });
    return run.finish();
}

int bkk_join(const PipelineOptions& o)
{
    Run run("bkk_join", o);
    const auto k = join(complete_bipartite(3, 3), complete_bipartite(3, 3));
    run.step(k.name() + " Z2", [&] { return obstruction_step(run, k, 6, Ring::Z2, "nonzero"); });
    return run.finish();
}

int theorem1(const PipelineOptions& o)
{
    if (o.level != "mod2" && o.level != "generic")
        throw ParameterError("--level must be mod2 or generic");
    Run run("theorem1", o);
    const auto t3 = three_point_join(3);
    const auto r = reglue_degree2(t3, t3.simplex_vector(2, 0));
    const auto& l = r.complex;
    run.step("regluing", [&] {
        return json{{"from", t3.name()},
                    {"facet", t3.simplex_id(t3.simplex_vector(2, 0))},
                    {"complex", l.name()},
                    {"f_vector", l.f_vector()},
                    {"file", run.artifact("L.json", complex_to_json(l))},
                    {"ok", validate(l).empty()}};
    });
    run.step("T3 Z2", [&] { return obstruction_step(run, t3, 4, Ring::Z2, "nonzero"); });
    run.step("L Z2", [&] { return obstruction_step(run, l, 4, Ring::Z2, "zero"); });
    run.step("L Z", [&] { return obstruction_step(run, l, 4, Ring::Z, "nonzero"); });
    run.step("L*L Z2", [&] {
        const auto c = certify_join_mod2(l, o.seed);
        json out{{"complex", c.complex_name},
                 {"m", c.m},
                 {"verdict", c.verified ? "zero" : "unverified"},
                 {"factor_crossings", c.p_crossings},
                 {"top_orbit_cells", c.top_cells},
                 {"next_orbit_cells", c.next_cells},
                 {"cocycle_support", c.cocycle_support},
                 {"witness_support", c.witness_support},
                 {"predicate_checks", c.predicate_checks},
                 {"transverse_points", c.transverse_points},
                 {"map_fingerprint", c.map_fingerprint},
                 {"problems", c.problems}};
        if (c.map)
            out["certificate"] = run.certificate("L_L.m10.Z2.cert.json", join_certificate(l, c));
        out["ok"] = c.verified && out.contains("certificate") && out["certificate"]["verified"].get<bool>();
        return out;
    });
    if (o.level == "generic") {
        const auto k = join(l, l);
        run.step("L*L census", [&] {
            const auto d = deleted_product(k);
            json grades = json::object();
            for (int g = 9; g <= 10; ++g)
                grades[std::to_string(g)] = d->count_only(g);
            return json{{"complex", k.name()}, {"f_vector", k.f_vector()}, {"ordered_cells", grades}};
        });
        run.step("L*L Z2 moment map", [&] { return obstruction_step(run, k, 10, Ring::Z2, "zero"); });
    }
    return run.finish();
}

int mapjoin_demo(const PipelineOptions& o)
{
    Run run("mapjoin_demo", o);
    const auto f = moment_map(complete_graph(5), 2, o.seed);
    const auto d = double_points(f);
    run.step("double points", [&] {
        return json{{"complex", f.source().name()}, {"orbits", d.orbits}, {"ordered", d.pairs.size()},
                    {"ok", d.orbits == 5}};
    });
    run.step("all labelings", [&] {
        std::shared_ptr<const SheetPairs> pp, qp;
        std::map<std::size_t, std::size_t> sizes;
        std::size_t failures = 0, labelings = 0;
        json first_problem;
        for (std::uint64_t a = 0; a < (1u << d.orbits); ++a)
            for (std::uint64_t b = 0; b < (1u << d.orbits); ++b) {
                const auto phi = SignLabeling::from_bits(d.orbits, a), psi = SignLabeling::from_bits(d.orbits, b);
                const auto h = build_h(extend_labeling(f, d, phi, Projection::first),
                                       extend_labeling(f, d, psi, Projection::second), pp, qp);
                pp = h.p_pairs;
                qp = h.q_pairs;
                const auto v = verify_double_points(h, d, phi, d, psi);
                ++labelings;
                ++sizes[v.found.size()];
                if (!v.ok && failures++ == 0)
                    first_problem = {{"phi", a}, {"psi", b}, {"problems", v.problems}};
            }
        json hist = json::object();
        for (auto [size, count] : sizes)
            hist[std::to_string(size)] = count;
        json out{{"labelings", labelings}, {"double_point_counts", hist}, {"failures", failures}};
        if (failures)
            out["first_failure"] = first_problem;
        out["ok"] = failures == 0;
        return out;
    });
    return run.finish();
}

using PipelineFn = int (*)(const PipelineOptions&);
const std::vector<std::pair<std::string, PipelineFn>>& registry()
{
    static const std::vector<std::pair<std::string, PipelineFn>> r = {
        {"theorem1", theorem1},         {"example_e1", example_e1}, {"example_e2", example_e2},
        {"graph_planarity", graph_planarity}, {"flores", flores}, {"bkk_join", bkk_join},
        {"mapjoin_demo", mapjoin_demo},
    };
    return r;
}

} // namespace

const std::vector<std::string>& pipeline_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, fn] : registry())
            out.push_back(n);
        return out;
    }();
    return names;
}

int run_pipeline(const std::string& name, const PipelineOptions& options)
{
    for (const auto& [n, fn] : registry())
        if (n == name)
            return fn(options);
    throw ParameterError("unknown pipeline '" + name + "'");
}

} // namespace vko::cli
