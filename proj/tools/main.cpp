#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pipelines.hpp"
#include "vko/builders.hpp"
#include "vko/errors.hpp"
#include "vko/mapjoin.hpp"
#include "vko/surgery.hpp"

using namespace vko;
using namespace vko::cli;

namespace {

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        out.push_back(item);
    return out;
}

void emit(const std::string& path, const json& j)
{
    if (path.empty() || path == "-")
        std::cout << j.dump(2) << '\n';
    else
        write_text(path, j.dump(2) + "\n");
}

SignLabeling load_labeling(const std::string& path, std::size_t orbits)
{
    if (path.empty())
        return SignLabeling{std::vector<int>(orbits, 1)};
    const auto j = read_json_file(path);
    SignLabeling s;
    for (const auto& v : j.at("values"))
        s.value.push_back(v.get<int>());
    return s;
}

json double_points_json(const PLMap& f, const DoublePointSet& d, const SignLabeling& s)
{
    json out = json::array();
    const auto& x = f.source();
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        const auto& p = d.pairs[i];
        json wa = json::array(), wb = json::array();
        for (const auto& w : p.first_weights)
            wa.push_back(w.get_str());
        for (const auto& w : p.second_weights)
            wb.push_back(w.get_str());
        out.push_back({{"index", i},
                       {"orbit", p.orbit},
                       {"first", x.simplex_id(p.first)},
                       {"second", x.simplex_id(p.second)},
                       {"first_weights", wa},
                       {"second_weights", wb},
                       {"label", s(d, i)}});
    }
    return out;
}

int mapjoin_command(const std::string& p_path, const std::string& q_path, int mp, int mq, const std::string& phi_path,
                    const std::string& psi_path, std::uint64_t seed, const std::string& report)
{
    const auto p = load_complex(p_path), q = load_complex(q_path);
    const auto f = moment_map(p, mp, seed), g = moment_map(q, mq, seed);
    const auto df = double_points(f), dg = double_points(g);
    const auto phi = load_labeling(phi_path, df.orbits), psi = load_labeling(psi_path, dg.orbits);
    const auto h = build_h(extend_labeling(f, df, phi, Projection::first), extend_labeling(g, dg, psi, Projection::second));
    const auto v = verify_double_points(h, df, phi, dg, psi);
    const auto& j = h.map.source();
    json found = json::array();
    for (const auto& dp : v.found)
        found.push_back({{"first", j.simplex_id(dp.first)},
                         {"second", j.simplex_id(dp.second)},
                         {"p_pair", dp.p_pair},
                         {"q_pair", dp.q_pair}});
    emit(report, {{"p", p.name()},
                  {"q", q.name()},
                  {"mp", mp},
                  {"mq", mq},
                  {"seed", seed},
                  {"p_double_points", double_points_json(f, df, phi)},
                  {"q_double_points", double_points_json(g, dg, psi)},
                  {"h", map_to_json(h.map)},
                  {"candidates", v.candidates},
                  {"predicted", v.predicted},
                  {"found", found},
                  {"problems", v.problems},
                  {"ok", v.ok}});
    return v.ok ? ok : verification_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"van Kampen obstructions, regluing and map joins"};
    app.require_subcommand(1);

    std::string family, out_path, in_path, facet, marks, ring = "Z2", cert, direction = "cohomology";
    std::vector<int> params;
    int dim = 0, m = 0, mp = 2, mq = 2;
    std::uint64_t seed = 0;
    std::size_t max_cells = 0;
    double max_seconds = 0;

    auto* build = app.add_subcommand("build", "build a named complex");
    build->add_option("--family", family, "family name")->required();
    build->add_option("--params", params, "integer parameters");
    build->add_option("--out", out_path, "output file (stdout if omitted)");

    auto* surgery = app.add_subcommand("surgery", "degree-2 regluing at a 2-simplex");
    surgery->add_option("--in", in_path)->required();
    surgery->add_option("--facet", facet, "v1,v2,v3")->required();
    surgery->add_option("--out", out_path)->required();
    surgery->add_option("--marks", marks, "marked simplices p, q, r");

    auto* homology = app.add_subcommand("homology", "simplicial (co)homology");
    homology->add_option("--in", in_path)->required();
    homology->add_option("--dim", dim)->required();
    homology->add_option("--ring", ring);
    homology->add_option("--direction", direction, "homology or cohomology");

    auto* obstruct = app.add_subcommand("obstruct", "van Kampen obstruction with certificate");
    obstruct->add_option("--in", in_path)->required();
    obstruct->add_option("--m", m)->required();
    obstruct->add_option("--ring", ring);
    obstruct->add_option("--seed", seed);
    obstruct->add_option("--cert", cert, "certificate file");
    obstruct->add_option("--max-cells", max_cells);
    obstruct->add_option("--max-seconds", max_seconds);

    std::string p_path, q_path, phi_path, psi_path, report;
    auto* mapjoin = app.add_subcommand("mapjoin", "double points of the joined map h");
    mapjoin->add_option("--p", p_path)->required();
    mapjoin->add_option("--q", q_path)->required();
    mapjoin->add_option("--mp", mp);
    mapjoin->add_option("--mq", mq);
    mapjoin->add_option("--phi", phi_path, "{\"values\": [+-1 per orbit]}; all +1 if omitted");
    mapjoin->add_option("--psi", psi_path);
    mapjoin->add_option("--seed", seed);
    mapjoin->add_option("--report", report);

    std::vector<std::string> cert_files;
    auto* verify = app.add_subcommand("verify", "re-verify certificate files");
    verify->add_option("certificates", cert_files)->required();

    std::string pipeline;
    PipelineOptions options;
    auto* pipe = app.add_subcommand("pipeline", "named reproduction pipeline");
    pipe->add_option("name", pipeline)->required()->check(CLI::IsMember(pipeline_names()));
    pipe->add_option("--out", options.out);
    pipe->add_option("--seed", options.seed);
    pipe->add_option("--level", options.level, "theorem1: mod2 or generic");
    pipe->add_option("--max-cells", options.budget.max_cells);
    pipe->add_option("--max-seconds", options.budget.max_seconds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*build) {
            emit(out_path, complex_to_json(build_named(family, params)));
        } else if (*surgery) {
            const auto k = load_complex(in_path);
            const auto r = reglue_degree2(k, k.parse_simplex(facet));
            save_complex(out_path, r.complex);
            if (!marks.empty()) {
                json j = json::object();
                for (const auto& [name, s] : r.marked)
                    j[name] = r.complex.simplex_id(s);
                emit(marks, j);
            }
        } else if (*homology) {
            const auto x = load_complex(in_path);
            const auto g = homology_groups(SimplicialCells(x), dim, parse_ring(ring),
                                           direction == "homology" ? Direction::homology : Direction::cohomology);
            emit("", {{"complex", x.name()}, {"dim", dim}, {"ring", ring}, {"direction", direction}, {"group", g.to_string()}});
        } else if (*obstruct) {
            const auto x = load_complex(in_path);
            const auto r = vk_obstruction(x, m, parse_ring(ring), seed, Budget{max_cells, max_seconds});
            const auto j = obstruction_certificate(r);
            if (!cert.empty())
                write_text(cert, j.dump(2) + "\n");
            std::cout << x.name() << " m=" << m << " " << ring << ": " << r.verdict() << '\n';
            if (!verify_report(x, r).empty())
                return verification_failed;
        } else if (*mapjoin) {
            return mapjoin_command(p_path, q_path, mp, mq, phi_path, psi_path, seed, report);
        } else if (*verify) {
            bool all = true;
            for (const auto& file : cert_files) {
                const auto problems = verify_certificate(read_json_file(file));
                std::cout << (problems.empty() ? "verified " : "FAILED   ") << file << '\n';
                for (const auto& p : problems)
                    std::cout << "  " << p << '\n';
                all = all && problems.empty();
            }
            return all ? ok : verification_failed;
        } else if (*pipe) {
            return run_pipeline(pipeline, options);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return budget_exceeded;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return verification_failed;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}
