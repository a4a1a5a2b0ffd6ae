#include "vko/plmap.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <openssl/evp.h>

#include "vko/errors.hpp"

namespace vko {

namespace {

std::string pair_name(const Complex& x, std::span<const VertexId> a, std::span<const VertexId> b)
{
    return "(" + x.simplex_id(a) + ")|(" + x.simplex_id(b) + ")";
}

// Homogeneous column (s * point, s) of the scaled image of v.
void push_column(const PLMap& f, ZMat& m, VertexId v, int s)
{
    const auto& p = f.scaled()[v];
    for (std::size_t k = 0; k < p.size(); ++k)
        m[k].push_back(s * p[k]);
    m.back().push_back(s);
}

ZMat homogeneous(const PLMap& f, std::span<const VertexId> plus, std::span<const VertexId> minus)
{
    ZMat m(f.ambient_dim() + 1);
    for (VertexId v : plus)
        push_column(f, m, v, 1);
    for (VertexId v : minus)
        push_column(f, m, v, -1);
    return m;
}

QMat to_rational(const ZMat& m)
{
    QMat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        q[i].assign(m[i].begin(), m[i].end());
    return q;
}

bool boxes_apart(const PLMap& f, std::span<const VertexId> a, std::span<const VertexId> b)
{
    for (int k = 0; k < f.ambient_dim(); ++k) {
        auto lo_hi = [&](std::span<const VertexId> s) {
            mpz_class lo = f.scaled()[s[0]][k], hi = lo;
            for (VertexId v : s) {
                const auto& c = f.scaled()[v][k];
                if (c < lo)
                    lo = c;
                if (c > hi)
                    hi = c;
            }
            return std::pair{lo, hi};
        };
        auto [alo, ahi] = lo_hi(a);
        auto [blo, bhi] = lo_hi(b);
        if (ahi < blo || bhi < alo)
            return true;
    }
    return false;
}

std::size_t rank(QMat m)
{
    return rref(m).size();
}

bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

PLMap::PLMap(Complex source, int m, std::vector<QVec> coords)
    : source_(std::move(source)), m_(m), coords_(std::move(coords))
{
    if (m_ < 1)
        throw ParameterError("ambient dimension must be at least 1");
    if (coords_.size() != source_.vertex_count())
        throw ParameterError("map needs one point per vertex: got " + std::to_string(coords_.size()) + " for " +
                             std::to_string(source_.vertex_count()) + " vertices");
    mpz_class den = 1;
    for (auto& p : coords_) {
        if (p.size() != static_cast<std::size_t>(m_))
            throw ParameterError("point of dimension " + std::to_string(p.size()) + " in R^" + std::to_string(m_));
        for (auto& c : p) {
            c.canonicalize();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    scaled_.resize(coords_.size());
    for (std::size_t v = 0; v < coords_.size(); ++v)
        for (const auto& c : coords_[v])
            scaled_[v].push_back(c.get_num() * (den / c.get_den()));
}

QVec PLMap::image(std::span<const VertexId> s, std::span<const mpq_class> weights) const
{
    if (s.size() != weights.size())
        throw ParameterError("one weight per vertex required");
    QVec out(m_);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int k = 0; k < m_; ++k)
            out[k] += weights[i] * coords_.at(s[i])[k];
    return out;
}

std::string sha256_hex(std::string_view text)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::string PLMap::fingerprint() const
{
    std::string text = "m=" + std::to_string(m_) + "\n";
    for (std::size_t v = 0; v < coords_.size(); ++v) {
        text += source_.vertex_name(static_cast<VertexId>(v));
        for (const auto& c : coords_[v])
            text += " " + c.get_str();
        text += "\n";
    }
    return sha256_hex(text);
}

PLMap moment_map(const Complex& x, int m, std::uint64_t seed)
{
    if (m < 1)
        throw ParameterError("moment_map needs m >= 1");
    const std::size_t n = x.vertex_count();
    std::vector<long> t(n);
    std::iota(t.begin(), t.end(), 1);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = n; i > 1; --i)
            std::swap(t[i - 1], t[rng() % i]);
    }
    std::vector<QVec> coords(n);
    for (std::size_t v = 0; v < n; ++v) {
        mpz_class power = 1;
        for (int k = 0; k < m; ++k) {
            power *= t[v];
            coords[v].emplace_back(power);
        }
    }
    return PLMap(x, m, std::move(coords));
}

std::optional<std::vector<mpq_class>> moment_parameters(const PLMap& f)
{
    std::vector<mpq_class> t;
    for (const auto& p : f.coords()) {
        mpq_class power = p[0];
        for (std::size_t k = 1; k < p.size(); ++k) {
            power *= p[0];
            if (p[k] != power)
                return std::nullopt;
        }
        t.push_back(p[0]);
    }
    std::set<mpq_class> seen(t.begin(), t.end());
    if (seen.size() != t.size())
        return std::nullopt;
    return t;
}

std::optional<Crossing> crossing(const PLMap& f, std::span<const VertexId> sigma, std::span<const VertexId> tau)
{
    const int m = f.ambient_dim();
    if (static_cast<int>(sigma.size() + tau.size()) != m + 2)
        throw ParameterError("crossing needs dim sigma + dim tau = " + std::to_string(m));
    if (boxes_apart(f, sigma, tau))
        return std::nullopt;
    const ZMat full = homogeneous(f, sigma, tau);
    const std::size_t cols = sigma.size() + tau.size();
    std::vector<mpz_class> z(cols);
    int pos = 0, neg = 0, zero = 0;
    for (std::size_t k = 0; k < cols; ++k) {
        ZMat minor(full.size());
        for (std::size_t r = 0; r < full.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (c != k)
                    minor[r].push_back(full[r][c]);
        z[k] = determinant(std::move(minor));
        if (k % 2)
            z[k] = -z[k];
        const int s = sign(z[k]);
        (s > 0 ? pos : s < 0 ? neg : zero) += 1;
    }
    const auto& x = f.source();
    if (pos == 0 && neg == 0) {
        if (closed_images_meet(f, sigma, tau))
            throw GenericityError("images of " + pair_name(x, sigma, tau) + " meet in more than a point");
        return std::nullopt;
    }
    if (pos > 0 && neg > 0)
        return std::nullopt;
    if (zero > 0)
        throw GenericityError("images of " + pair_name(x, sigma, tau) + " meet on a proper face");
    if (neg > 0)
        for (auto& v : z)
            v = -v;

    ZMat edges(m);
    for (int k = 0; k < m; ++k) {
        for (std::size_t i = 1; i < sigma.size(); ++i)
            edges[k].push_back(f.scaled()[sigma[i]][k] - f.scaled()[sigma[0]][k]);
        for (std::size_t j = 1; j < tau.size(); ++j)
            edges[k].push_back(f.scaled()[tau[j]][k] - f.scaled()[tau[0]][k]);
    }
    Crossing out;
    out.sign = sign(determinant(std::move(edges)));
    if (out.sign == 0)
        throw GenericityError("images of " + pair_name(x, sigma, tau) + " meet without spanning R^" + std::to_string(m));
    mpz_class total = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        total += z[i];
    for (std::size_t i = 0; i < sigma.size(); ++i)
        out.first.emplace_back(z[i], total);
    for (std::size_t j = 0; j < tau.size(); ++j)
        out.second.emplace_back(z[sigma.size() + j], total);
    for (auto& v : out.first)
        v.canonicalize();
    for (auto& v : out.second)
        v.canonicalize();
    return out;
}

int intersection_number(const PLMap& f, std::span<const VertexId> sigma, std::span<const VertexId> tau)
{
    auto c = crossing(f, sigma, tau);
    return c ? c->sign : 0;
}

bool closed_images_meet(const PLMap& f, std::span<const VertexId> sigma, std::span<const VertexId> tau)
{
    if (boxes_apart(f, sigma, tau))
        return false;
    const auto basis = nullspace(to_rational(homogeneous(f, sigma, tau)), sigma.size() + tau.size());
    if (basis.empty())
        return false;
    // z = sum c_i basis_i with every coordinate >= 0 and the sigma part summing to > 0.
    std::vector<QVec> rows;
    std::vector<bool> strict;
    QVec mass(basis.size());
    for (std::size_t k = 0; k < sigma.size() + tau.size(); ++k) {
        QVec row(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            row[i] = basis[i][k];
            if (k < sigma.size())
                mass[i] += basis[i][k];
        }
        rows.push_back(std::move(row));
        strict.push_back(false);
    }
    rows.push_back(std::move(mass));
    strict.push_back(true);
    return feasible(std::move(rows), std::move(strict));
}

OpenMeet open_meet(const PLMap& f, std::span<const VertexId> a_only, std::span<const VertexId> b_only,
                   std::span<const VertexId> shared)
{
    if (a_only.empty() || b_only.empty())
        throw ParameterError("open_simplices_meet needs vertices private to each side");
    ZMat m(f.ambient_dim() + 1);
    for (VertexId v : a_only)
        push_column(f, m, v, 1);
    for (VertexId v : shared)
        push_column(f, m, v, 1);
    for (VertexId v : b_only)
        push_column(f, m, v, -1);
    const std::size_t cols = a_only.size() + shared.size() + b_only.size();
    const auto basis = nullspace(to_rational(m), cols);
    OpenMeet out;
    if (basis.empty())
        return out;
    // Private coefficients strictly positive; shared ones are differences and free.
    std::vector<QVec> rows;
    for (std::size_t k = 0; k < cols; ++k) {
        if (k >= a_only.size() && k < a_only.size() + shared.size())
            continue;
        QVec row(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            row[i] = basis[i][k];
        rows.push_back(std::move(row));
    }
    if (!strictly_feasible(std::move(rows)))
        return out;
    if (!shared.empty() || basis.size() != 1) {
        out.kind = MeetKind::degenerate;
        return out;
    }
    out.kind = MeetKind::point;
    const QVec& z = basis[0];
    mpq_class total = 0;
    for (std::size_t k = 0; k < a_only.size(); ++k)
        total += z[k];
    for (std::size_t k = 0; k < a_only.size(); ++k)
        out.first.push_back(z[k] / total);
    for (std::size_t k = 0; k < b_only.size(); ++k)
        out.second.push_back(z[a_only.size() + k] / total);
    return out;
}

MeetKind open_simplices_meet(const PLMap& f, std::span<const VertexId> a_only, std::span<const VertexId> b_only,
                             std::span<const VertexId> shared)
{
    return open_meet(f, a_only, b_only, shared).kind;
}

bool affinely_independent(const PLMap& f, std::span<const VertexId> vs)
{
    if (vs.size() > static_cast<std::size_t>(f.ambient_dim()) + 1)
        return false;
    return rank(to_rational(homogeneous(f, vs, {}))) == vs.size();
}

std::vector<std::string> genericity_check(const PLMap& f, GenericityMode mode)
{
    if (mode == GenericityMode::automatic && moment_parameters(f))
        return {};
    std::vector<std::string> problems;
    const auto& x = f.source();
    const int m = f.ambient_dim();
    const int top = std::min(x.dim(), m);
    for (int d = 1; d <= top; ++d)
        for (std::size_t i = 0; i < x.count(d); ++i)
            if (!affinely_independent(f, x.simplex(d, i)))
                problems.push_back("image of " + x.simplex_id(d, i) + " is degenerate");

    std::vector<std::pair<int, std::size_t>> cells;
    for (int d = 0; d <= top; ++d)
        for (std::size_t i = 0; i < x.count(d); ++i)
            cells.emplace_back(d, i);
    Simplex merged;
    for (std::size_t p = 0; p < cells.size(); ++p) {
        const auto [da, ia] = cells[p];
        const auto a = x.simplex(da, ia);
        for (std::size_t q = p + 1; q < cells.size(); ++q) {
            const auto [db, ib] = cells[q];
            if (da + db > m)
                break;  // cells are sorted by dimension
            const auto b = x.simplex(db, ib);
            merged.clear();
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
            if (merged.size() == a.size() + b.size()) {
                if (da + db < m) {
                    if (closed_images_meet(f, a, b))
                        problems.push_back("images of " + pair_name(x, a, b) + " meet below complementary dimension");
                } else {
                    try {
                        crossing(f, a, b);
                    } catch (const GenericityError& e) {
                        problems.push_back(e.what());
                    }
                }
            } else if (!is_subset(a, b) && !is_subset(b, a) && merged.size() <= static_cast<std::size_t>(m) + 1) {
                if (!affinely_independent(f, merged))
                    problems.push_back("images of " + pair_name(x, a, b) + " overlap beyond their common face");
            }
        }
    }
    return problems;
}

} // namespace vko
