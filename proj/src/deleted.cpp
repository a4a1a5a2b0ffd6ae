#include "vko/deleted.hpp"

#include "vko/errors.hpp"

namespace vko {

DeletedCellComplex::DeletedCellComplex(Complex base) : base_(std::move(base))
{
    words_ = std::max<std::size_t>(1, (base_.vertex_count() + 63) / 64);
    masks_.resize(static_cast<std::size_t>(std::max(0, base_.dim() + 1)));
    for (int d = 0; d <= base_.dim(); ++d) {
        auto& m = masks_[d];
        m.assign(base_.count(d) * words_, 0);
        for (std::size_t i = 0; i < base_.count(d); ++i)
            for (VertexId v : base_.simplex(d, i))
                m[i * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
    }
}

bool DeletedCellComplex::disjoint(int d1, std::size_t i1, int d2, std::size_t i2) const
{
    const std::uint64_t* a = masks_[d1].data() + i1 * words_;
    const std::uint64_t* b = masks_[d2].data() + i2 * words_;
    for (std::size_t w = 0; w < words_; ++w)
        if (a[w] & b[w])
            return false;
    return true;
}

std::uint64_t DeletedCellComplex::key(const ProductCell& c) const
{
    return (static_cast<std::uint64_t>(base_.global_id(c.dim_first, c.first)) << 32) |
           base_.global_id(c.dim_second, c.second);
}

const DeletedCellComplex::Grade& DeletedCellComplex::grade(int g) const
{
    std::lock_guard lock(mutex_);
    auto& slot = grades_[g];
    if (slot)
        return *slot;
    auto built = std::make_unique<Grade>();
    const int top = base_.dim();
    for (int a = std::max(0, g - top); a <= std::min(top, g); ++a) {
        const int b = g - a;
        for (std::size_t i = 0; i < base_.count(a); ++i)
            for (std::size_t j = 0; j < base_.count(b); ++j)
                if (disjoint(a, i, b, j))
                    built->cells.push_back(ProductCell{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                                       static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
    if (built->cells.size() >= std::numeric_limits<std::uint32_t>::max())
        throw BudgetExceeded("grade " + std::to_string(g) + " has too many cells to index");
    built->index.reserve(built->cells.size());
    for (std::uint32_t k = 0; k < built->cells.size(); ++k)
        built->index.emplace(key(built->cells[k]), k);
    slot = std::move(built);
    return *slot;
}

std::size_t DeletedCellComplex::count(int g) const
{
    if (g < 0 || g > dim())
        return 0;
    return grade(g).cells.size();
}

const std::vector<ProductCell>& DeletedCellComplex::cells(int g) const
{
    if (g < 0 || g > dim())
        throw ParameterError("grade " + std::to_string(g) + " out of range");
    return grade(g).cells;
}

std::optional<std::size_t> DeletedCellComplex::find(const ProductCell& c) const
{
    const auto& gr = grade(c.dim_first + c.dim_second);
    auto it = gr.index.find(key(c));
    if (it == gr.index.end())
        return std::nullopt;
    return it->second;
}

std::size_t DeletedCellComplex::swap_index(int g, std::size_t i) const
{
    const ProductCell c = cells(g).at(i);
    return *find(ProductCell{c.dim_second, c.dim_first, c.second, c.first});
}

std::string DeletedCellComplex::cell_id(int g, std::size_t i) const
{
    const ProductCell c = cells(g).at(i);
    return base_.simplex_id(c.dim_first, c.first) + "|" + base_.simplex_id(c.dim_second, c.second);
}

std::optional<std::size_t> DeletedCellComplex::find_cell(int g, std::string_view id) const
{
    const auto bar = id.find('|');
    if (bar == std::string_view::npos)
        return std::nullopt;
    Simplex s, t;
    try {
        s = base_.parse_simplex(id.substr(0, bar));
        t = base_.parse_simplex(id.substr(bar + 1));
    } catch (const ParameterError&) {
        return std::nullopt;
    }
    if (static_cast<int>(s.size() + t.size()) - 2 != g)
        return std::nullopt;
    auto i = base_.find(s);
    auto j = base_.find(t);
    if (!i || !j)
        return std::nullopt;
    return find(ProductCell{static_cast<std::uint8_t>(s.size() - 1), static_cast<std::uint8_t>(t.size() - 1),
                            static_cast<std::uint32_t>(*i), static_cast<std::uint32_t>(*j)});
}

void DeletedCellComplex::boundary(int g, std::size_t i, std::vector<std::pair<std::size_t, int>>& out) const
{
    const ProductCell c = cells(g).at(i);
    if (c.dim_first > 0)
        for (int j = 0; j <= c.dim_first; ++j) {
            ProductCell f{static_cast<std::uint8_t>(c.dim_first - 1), c.dim_second,
                          base_.face_index(c.dim_first, c.first, j), c.second};
            out.emplace_back(*find(f), j % 2 == 0 ? 1 : -1);
        }
    if (c.dim_second > 0) {
        const int outer = c.dim_first % 2 == 0 ? 1 : -1;
        for (int j = 0; j <= c.dim_second; ++j) {
            ProductCell f{c.dim_first, static_cast<std::uint8_t>(c.dim_second - 1), c.first,
                          base_.face_index(c.dim_second, c.second, j)};
            out.emplace_back(*find(f), outer * (j % 2 == 0 ? 1 : -1));
        }
    }
}

std::size_t DeletedCellComplex::count_only(int g) const
{
    std::size_t n = 0;
    const int top = base_.dim();
    for (int a = std::max(0, g - top); a <= std::min(top, g); ++a)
        for (std::size_t i = 0; i < base_.count(a); ++i)
            for (std::size_t j = 0; j < base_.count(g - a); ++j)
                n += disjoint(a, i, g - a, j);
    return n;
}

std::map<std::pair<int, int>, std::size_t> DeletedCellComplex::census() const
{
    std::map<std::pair<int, int>, std::size_t> out;
    for (int a = 0; a <= base_.dim(); ++a)
        for (int b = 0; b <= base_.dim(); ++b) {
            std::size_t n = 0;
            for (std::size_t i = 0; i < base_.count(a); ++i)
                for (std::size_t j = 0; j < base_.count(b); ++j)
                    n += disjoint(a, i, b, j);
            if (n)
                out[{a, b}] = n;
        }
    return out;
}

std::string_view sign_mode_name(SignMode m)
{
    return m == SignMode::untwisted ? "untwisted" : "product_sign";
}

SignMode parse_sign_mode(std::string_view s)
{
    if (s == "untwisted")
        return SignMode::untwisted;
    if (s == "product_sign")
        return SignMode::product_sign;
    throw ParameterError("unknown sign mode '" + std::string(s) + "'");
}

OrbitComplex::OrbitComplex(std::shared_ptr<const DeletedCellComplex> cover, SignMode mode)
    : cover_(std::move(cover)), mode_(mode)
{
}

std::string OrbitComplex::name() const
{
    return "orbits(" + cover_->base().name() + "," + std::string(sign_mode_name(mode_)) + ")";
}

int OrbitComplex::transport_sign(const ProductCell& c) const
{
    if (mode_ == SignMode::untwisted)
        return 1;
    return (c.dim_first * c.dim_second) % 2 == 0 ? 1 : -1;
}

const OrbitComplex::Grade& OrbitComplex::grade(int g) const
{
    const auto& cells = cover_->cells(g);
    std::lock_guard lock(mutex_);
    auto& slot = grades_[g];
    if (slot)
        return *slot;
    auto built = std::make_unique<Grade>();
    const Complex& base = cover_->base();
    built->orbit.assign(cells.size(), 0);
    built->sign.assign(cells.size(), 1);
    std::vector<bool> is_rep(cells.size());
    for (std::uint32_t k = 0; k < cells.size(); ++k) {
        const auto& c = cells[k];
        is_rep[k] = base.global_id(c.dim_first, c.first) < base.global_id(c.dim_second, c.second);
        if (is_rep[k]) {
            built->orbit[k] = static_cast<std::uint32_t>(built->reps.size());
            built->reps.push_back(k);
        }
    }
    for (std::uint32_t k = 0; k < cells.size(); ++k)
        if (!is_rep[k]) {
            const std::size_t partner = cover_->swap_index(g, k);
            built->orbit[k] = built->orbit[partner];
            built->sign[k] = static_cast<std::int8_t>(transport_sign(cells[k]));
        }
    slot = std::move(built);
    return *slot;
}

std::size_t OrbitComplex::count(int g) const
{
    if (g < 0 || g > dim())
        return 0;
    return grade(g).reps.size();
}

std::size_t OrbitComplex::representative(int g, std::size_t i) const
{
    return grade(g).reps.at(i);
}

std::pair<std::size_t, int> OrbitComplex::orbit_of(int g, std::size_t ordered) const
{
    const auto& gr = grade(g);
    return {gr.orbit.at(ordered), gr.sign.at(ordered)};
}

std::string OrbitComplex::cell_id(int g, std::size_t i) const
{
    return cover_->cell_id(g, representative(g, i));
}

std::optional<std::size_t> OrbitComplex::find_cell(int g, std::string_view id) const
{
    auto k = cover_->find_cell(g, id);
    if (!k)
        return std::nullopt;
    const auto& gr = grade(g);
    const std::size_t o = gr.orbit[*k];
    if (gr.reps[o] != *k)
        return std::nullopt;
    return o;
}

void OrbitComplex::boundary(int g, std::size_t i, std::vector<std::pair<std::size_t, int>>& out) const
{
    std::vector<std::pair<std::size_t, int>> faces;
    cover_->boundary(g, representative(g, i), faces);
    for (const auto& [f, s] : faces) {
        const auto [o, eps] = orbit_of(g - 1, f);
        out.emplace_back(o, s * eps);
    }
}

std::shared_ptr<const DeletedCellComplex> deleted_product(const Complex& x)
{
    return std::make_shared<const DeletedCellComplex>(x);
}

std::shared_ptr<const OrbitComplex> quotient(std::shared_ptr<const DeletedCellComplex> d, SignMode mode)
{
    return std::make_shared<const OrbitComplex>(std::move(d), mode);
}

} // namespace vko
