#pragma once

#include <filesystem>

#include "json.hpp"
#include "vko/complex.hpp"

namespace vko {

using json = nlohmann::json;

/// {"name": ..., "vertices": [...], "facets": [[...], ...]} in canonical order.
json complex_to_json(const Complex& x);
/// Closure is computed on load.
Complex complex_from_json(const json& j);

Complex load_complex(const std::filesystem::path& path);
void save_complex(const std::filesystem::path& path, const Complex& x);

json read_json_file(const std::filesystem::path& path);
/// Writes `j` with two-space indentation and a trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);

} // namespace vko
