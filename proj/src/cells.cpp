#include "vko/cells.hpp"

namespace vko {

std::optional<std::size_t> SimplicialCells::find_cell(int d, std::string_view id) const
{
    Simplex s;
    try {
        s = x_.parse_simplex(id);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (static_cast<int>(s.size()) != d + 1)
        return std::nullopt;
    return x_.find(s);
}

void SimplicialCells::boundary(int d, std::size_t i, std::vector<std::pair<std::size_t, int>>& out) const
{
    if (d == 0)
        return;
    for (int j = 0; j <= d; ++j)
        out.emplace_back(x_.face_index(d, i, j), j % 2 == 0 ? 1 : -1);
}

} // namespace vko
