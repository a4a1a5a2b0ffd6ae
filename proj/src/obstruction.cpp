#include "vko/obstruction.hpp"

#include "vko/errors.hpp"
#include "vko/parallel.hpp"

namespace vko {

namespace {

std::vector<mpz_class> representative_values(const OrbitComplex& q, const PLMap& f)
{
    const int m = f.ambient_dim();
    const auto& cover = q.cover();
    const auto& base = cover.base();
    const auto& cells = cover.cells(m);
    std::vector<mpz_class> values(q.count(m));
    parallel_for(values.size(), [&](std::size_t i) {
        const auto& c = cells[q.representative(m, i)];
        values[i] = intersection_number(f, base.simplex(c.dim_first, c.first), base.simplex(c.dim_second, c.second));
    });
    return values;
}

void check_map(const Complex& x, const PLMap& f)
{
    if (!(f.source() == x))
        throw ParameterError("map is defined on a different complex");
}

class Clock {
public:
    explicit Clock(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}
    void check(const std::string& stage) const
    {
        if (budget_.max_seconds <= 0)
            return;
        const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start_;
        if (used.count() > budget_.max_seconds)
            throw BudgetExceeded("time budget of " + std::to_string(budget_.max_seconds) + " s exceeded at " + stage);
    }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace

Cochain vk_cocycle(const DeletedCellComplex& d, const PLMap& f)
{
    check_map(d.base(), f);
    const int m = f.ambient_dim();
    if (m > d.dim())
        return Cochain{Ring::Z, m, {}};
    const auto& cells = d.cells(m);
    const auto& base = d.base();
    std::vector<mpz_class> values(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto& c = cells[i];
        values[i] = intersection_number(f, base.simplex(c.dim_first, c.first), base.simplex(c.dim_second, c.second));
    });
    return Cochain::from_values(d, Ring::Z, m, values);
}

Cochain orbit_cocycle(const OrbitComplex& q, const PLMap& f, Ring ring)
{
    check_map(q.cover().base(), f);
    const int m = f.ambient_dim();
    if (m > q.dim())
        return Cochain{ring, m, {}};
    return Cochain::from_values(q, ring, m, representative_values(q, f));
}

ObstructionReport vk_obstruction(const Complex& x, int m, Ring ring, std::uint64_t seed, const Budget& budget)
{
    const int top = 2 * x.dim();
    if (m < 1)
        throw ParameterError("obstruction dimension must be at least 1");
    if (ring == Ring::Z && m != top)
        throw ParameterError("integral obstruction needs m = 2 dim x = " + std::to_string(top));
    if (m > top)
        throw ParameterError("obstruction dimension " + std::to_string(m) + " exceeds 2 dim x = " + std::to_string(top));
    Clock clock(budget);

    auto cover = deleted_product(x);
    if (budget.max_cells) {
        std::size_t cells = 0;
        for (int g = m - 1; g <= std::min(m + 1, top); ++g)
            cells += cover->count_only(g);
        if (cells > budget.max_cells)
            throw BudgetExceeded(std::to_string(cells) + " cells in grades " + std::to_string(m - 1) + ".." +
                                 std::to_string(std::min(m + 1, top)) + " exceed the budget of " +
                                 std::to_string(budget.max_cells));
    }

    ObstructionReport r;
    r.complex_name = x.name();
    r.m = m;
    r.ring = ring;
    r.seed = seed;
    r.map = std::make_shared<const PLMap>(moment_map(x, m, seed));
    if (auto problems = genericity_check(*r.map); !problems.empty())
        throw GenericityError("moment map is not generic: " + problems.front());
    clock.check("map construction");

    auto q = quotient(cover, r.mode);
    r.cocycle = orbit_cocycle(*q, *r.map, ring);
    r.orbit_cells = q->count(m);
    r.crossing_orbits = r.cocycle.support.size();
    clock.check("cocycle assembly");

    r.solution = coboundary_solve(*q, r.cocycle);
    r.nonzero = !r.solution.solvable;
    clock.check("solve");
    return r;
}

std::vector<std::string> verify_report(const Complex& x, const ObstructionReport& r)
{
    std::vector<std::string> problems;
    if (!r.map) {
        problems.push_back("report carries no map");
        return problems;
    }
    if (!(r.map->source() == x)) {
        problems.push_back("map is defined on a different complex");
        return problems;
    }
    if (r.map->ambient_dim() != r.m)
        problems.push_back("map dimension differs from m");
    for (auto& p : genericity_check(*r.map))
        problems.push_back("map: " + p);
    if (!problems.empty())
        return problems;
    auto q = quotient(deleted_product(x), r.mode);
    if (orbit_cocycle(*q, *r.map, r.ring) != r.cocycle)
        problems.push_back("cocycle does not match the map's intersection numbers");
    else if (!coboundary(*q, r.cocycle).support.empty())
        problems.push_back("cocycle is not closed");
    if (r.nonzero == r.solution.solvable)
        problems.push_back("verdict disagrees with the certificate");
    for (auto& p : verify_solution(*q, r.cocycle, r.solution))
        problems.push_back(p);
    return problems;
}

} // namespace vko
