#include "vko/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "vko/errors.hpp"

namespace vko {

namespace {

void check_vertex_name(const std::string& name)
{
    if (name.empty())
        throw ParameterError("vertex names must be non-empty");
    if (name.find_first_of(",|\"") != std::string::npos)
        throw ParameterError("vertex name '" + name + "' contains a reserved character (',', '|' or '\"')");
}

bool lex_less(std::span<const VertexId> a, std::span<const VertexId> b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

std::string indexed_name(std::string_view prefix, std::size_t i, std::size_t count)
{
    std::size_t width = 1;
    for (std::size_t c = count > 0 ? count - 1 : 0; c >= 10; c /= 10)
        ++width;
    std::string digits = std::to_string(i);
    if (digits.size() < width)
        digits.insert(0, width - digits.size(), '0');
    return std::string(prefix) + digits;
}

Complex Complex::from_index_facets(std::string name, std::vector<std::string> vertices,
                                   const std::vector<Simplex>& facets)
{
    for (const auto& v : vertices)
        check_vertex_name(v);

    std::vector<VertexId> order(vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return vertices[a] < vertices[b]; });
    std::vector<VertexId> relabel(vertices.size());
    Complex x;
    x.name_ = std::move(name);
    x.vertices_.reserve(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && vertices[order[i]] == vertices[order[i - 1]])
            throw ParameterError("duplicate vertex name '" + vertices[order[i]] + "'");
        relabel[order[i]] = static_cast<VertexId>(i);
        x.vertices_.push_back(vertices[order[i]]);
    }

    std::vector<std::set<Simplex>> by_dim;
    auto insert = [&](const Simplex& s) {
        const std::size_t d = s.size() - 1;
        if (by_dim.size() <= d)
            by_dim.resize(d + 1);
        by_dim[d].insert(s);
    };

    std::vector<bool> used(vertices.size(), false);
    for (const auto& facet : facets) {
        if (facet.empty())
            throw ParameterError("empty facet");
        if (facet.size() > 30)
            throw ParameterError("facet dimension exceeds supported maximum of 29");
        Simplex s;
        s.reserve(facet.size());
        for (VertexId v : facet) {
            if (v >= vertices.size())
                throw ParameterError("facet refers to vertex index " + std::to_string(v) + " out of range");
            s.push_back(relabel[v]);
            used[v] = true;
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ParameterError("facet repeats a vertex");
        if (by_dim.size() >= s.size() && by_dim[s.size() - 1].count(s))
            continue;
        const std::uint32_t n = static_cast<std::uint32_t>(s.size());
        Simplex face;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            face.clear();
            for (std::uint32_t j = 0; j < n; ++j)
                if (mask & (1u << j))
                    face.push_back(s[j]);
            insert(face);
        }
    }
    // Isolated vertices listed in `vertices` are part of the complex.
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (!used[v])
            insert(Simplex{relabel[v]});

    x.flat_.resize(by_dim.size());
    x.offsets_.assign(by_dim.size() + 1, 0);
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        auto& flat = x.flat_[d];
        flat.reserve(by_dim[d].size() * (d + 1));
        for (const auto& s : by_dim[d])
            flat.insert(flat.end(), s.begin(), s.end());
        x.offsets_[d + 1] = x.offsets_[d] + by_dim[d].size();
    }
    x.faces_.resize(by_dim.size());
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
        const std::size_t n = x.count(static_cast<int>(d));
        auto& faces = x.faces_[d];
        faces.resize(n * (d + 1));
        Simplex face(d);
        for (std::size_t i = 0; i < n; ++i) {
            auto s = x.simplex(static_cast<int>(d), i);
            for (std::size_t j = 0; j <= d; ++j) {
                std::size_t k = 0;
                for (std::size_t t = 0; t <= d; ++t)
                    if (t != j)
                        face[k++] = s[t];
                faces[i * (d + 1) + j] = static_cast<std::uint32_t>(*x.find(face));
            }
        }
    }
    return x;
}

Complex Complex::from_facets(std::string name, std::vector<std::string> vertices,
                             const std::vector<std::vector<std::string>>& facets)
{
    std::map<std::string, VertexId> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index.emplace(vertices[i], static_cast<VertexId>(i));
    std::vector<Simplex> idx;
    idx.reserve(facets.size());
    for (const auto& f : facets) {
        Simplex s;
        for (const auto& v : f) {
            auto it = index.find(v);
            if (it == index.end())
                throw ParameterError("facet refers to unknown vertex '" + v + "'");
            s.push_back(it->second);
        }
        idx.push_back(std::move(s));
    }
    return from_index_facets(std::move(name), std::move(vertices), idx);
}

Complex Complex::renamed(std::string name) const
{
    Complex copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

std::optional<VertexId> Complex::find_vertex(std::string_view name) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == vertices_.end() || *it != name)
        return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
}

std::size_t Complex::count(int d) const noexcept
{
    if (d < 0 || d > dim())
        return 0;
    return flat_[d].size() / (d + 1);
}

std::span<const VertexId> Complex::simplex(int d, std::size_t i) const
{
    const std::size_t stride = static_cast<std::size_t>(d) + 1;
    return {flat_.at(d).data() + i * stride, stride};
}

Simplex Complex::simplex_vector(int d, std::size_t i) const
{
    auto s = simplex(d, i);
    return {s.begin(), s.end()};
}

std::optional<std::size_t> Complex::find(std::span<const VertexId> s) const
{
    if (s.empty())
        return std::nullopt;
    const int d = static_cast<int>(s.size()) - 1;
    if (d > dim())
        return std::nullopt;
    std::size_t lo = 0, hi = count(d);
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (lex_less(simplex(d, mid), s))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count(d) && std::ranges::equal(simplex(d, lo), s))
        return lo;
    return std::nullopt;
}

std::uint32_t Complex::face_index(int d, std::size_t i, int j) const
{
    return faces_.at(d)[i * (static_cast<std::size_t>(d) + 1) + j];
}

std::pair<int, std::size_t> Complex::from_global(std::size_t gid) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), gid);
    const int d = static_cast<int>(it - offsets_.begin()) - 1;
    return {d, gid - offsets_[d]};
}

std::vector<std::size_t> Complex::f_vector() const
{
    std::vector<std::size_t> f;
    for (int d = 0; d <= dim(); ++d)
        f.push_back(count(d));
    return f;
}

long long Complex::euler_characteristic() const
{
    long long chi = 0;
    for (int d = 0; d <= dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
    return chi;
}

std::vector<Simplex> Complex::facets() const
{
    std::vector<std::vector<bool>> covered(dim() + 1);
    for (int d = 0; d <= dim(); ++d)
        covered[d].assign(count(d), false);
    for (int d = 1; d <= dim(); ++d)
        for (std::size_t i = 0; i < count(d); ++i)
            for (int j = 0; j <= d; ++j)
                covered[d - 1][face_index(d, i, j)] = true;
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d)
        for (std::size_t i = 0; i < count(d); ++i)
            if (!covered[d][i])
                out.push_back(simplex_vector(d, i));
    return out;
}

std::string Complex::simplex_id(int d, std::size_t i) const
{
    return simplex_id(simplex(d, i));
}

std::string Complex::simplex_id(std::span<const VertexId> s) const
{
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k)
            out += ',';
        out += vertices_.at(s[k]);
    }
    return out;
}

Simplex Complex::parse_simplex(std::string_view id) const
{
    Simplex s;
    std::size_t start = 0;
    while (start <= id.size()) {
        std::size_t end = id.find(',', start);
        if (end == std::string_view::npos)
            end = id.size();
        auto v = find_vertex(id.substr(start, end - start));
        if (!v)
            throw ParameterError("unknown vertex '" + std::string(id.substr(start, end - start)) + "' in '" +
                                 std::string(id) + "'");
        s.push_back(*v);
        start = end + 1;
    }
    std::sort(s.begin(), s.end());
    return s;
}

SimplexList Complex::to_list() const
{
    SimplexList out{name_, vertices_, {}};
    for (int d = 0; d <= dim(); ++d)
        for (std::size_t i = 0; i < count(d); ++i) {
            std::vector<std::string> names;
            for (VertexId v : simplex(d, i))
                names.push_back(vertices_[v]);
            out.simplices.push_back(std::move(names));
        }
    return out;
}

bool Complex::operator==(const Complex& other) const
{
    return vertices_ == other.vertices_ && flat_ == other.flat_;
}

Simplex SimplicialMap::image(std::span<const VertexId> s) const
{
    Simplex out;
    for (VertexId v : s)
        out.push_back(assignment.at(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> SimplicialMap::validate() const
{
    std::vector<std::string> issues;
    if (assignment.size() != source.vertex_count()) {
        issues.push_back("assignment covers " + std::to_string(assignment.size()) + " of " +
                         std::to_string(source.vertex_count()) + " source vertices");
        return issues;
    }
    for (VertexId v : assignment)
        if (v >= target.vertex_count()) {
            issues.push_back("assignment points outside the target vertex set");
            return issues;
        }
    for (int d = 0; d <= source.dim(); ++d)
        for (std::size_t i = 0; i < source.count(d); ++i) {
            const Simplex img = image(source.simplex(d, i));
            if (!target.find(img))
                issues.push_back("image of [" + source.simplex_id(d, i) + "] is not a simplex of the target");
        }
    return issues;
}

std::vector<std::string> validate(const SimplexList& raw)
{
    std::vector<std::string> issues;
    std::set<std::string> names;
    for (const auto& v : raw.vertices)
        if (!names.insert(v).second)
            issues.push_back("duplicate vertex '" + v + "'");

    std::set<std::vector<std::string>> present;
    for (const auto& s : raw.simplices) {
        std::string shown;
        for (const auto& v : s)
            shown += (shown.empty() ? "" : ",") + v;
        if (s.empty()) {
            issues.push_back("empty simplex");
            continue;
        }
        for (const auto& v : s)
            if (!names.count(v))
                issues.push_back("simplex [" + shown + "] uses undeclared vertex '" + v + "'");
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
            issues.push_back("simplex [" + shown + "] is not a strictly sorted vertex list (canonicalization)");
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (!present.insert(sorted).second)
            issues.push_back("duplicate simplex [" + shown + "]");
    }
    for (const auto& s : present) {
        if (s.size() < 2)
            continue;
        for (std::size_t j = 0; j < s.size(); ++j) {
            auto face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
            if (!present.count(face)) {
                std::string shown;
                for (const auto& v : face)
                    shown += (shown.empty() ? "" : ",") + v;
                issues.push_back("closure: missing face [" + shown + "]");
            }
        }
    }
    std::sort(issues.begin(), issues.end());
    issues.erase(std::unique(issues.begin(), issues.end()), issues.end());
    return issues;
}

std::vector<std::string> validate(const Complex& x)
{
    auto issues = validate(x.to_list());
    for (int d = 0; d <= x.dim(); ++d)
        if (x.count(d) == 0)
            issues.push_back("no simplices in dimension " + std::to_string(d) + " below the top dimension");
    return issues;
}

} // namespace vko
