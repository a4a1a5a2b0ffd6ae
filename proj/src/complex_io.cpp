#include "vko/complex_io.hpp"

#include <fstream>

#include "vko/errors.hpp"

namespace vko {

json complex_to_json(const Complex& x)
{
    json facets = json::array();
    for (const auto& f : x.facets()) {
        json names = json::array();
        for (VertexId v : f)
            names.push_back(x.vertex_name(v));
        facets.push_back(std::move(names));
    }
    return json{{"name", x.name()}, {"vertices", x.vertices()}, {"facets", std::move(facets)}};
}

Complex complex_from_json(const json& j)
{
    try {
        auto vertices = j.at("vertices").get<std::vector<std::string>>();
        auto facets = j.at("facets").get<std::vector<std::vector<std::string>>>();
        std::string name = j.value("name", std::string("unnamed"));
        return Complex::from_facets(std::move(name), std::move(vertices), facets);
    } catch (const json::exception& e) {
        throw ParameterError(std::string("malformed complex JSON: ") + e.what());
    }
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParameterError("cannot parse " + path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw ParameterError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

Complex load_complex(const std::filesystem::path& path)
{
    return complex_from_json(read_json_file(path));
}

void save_complex(const std::filesystem::path& path, const Complex& x)
{
    write_json_file(path, complex_to_json(x));
}

} // namespace vko
