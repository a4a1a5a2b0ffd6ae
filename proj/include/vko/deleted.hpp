#pragma once

#include <map>
#include <memory>
#include <limits>
#include <mutex>
#include <unordered_map>

#include "vko/cells.hpp"

namespace vko {

/// Ordered pair of disjoint simplices of the base complex, by dimension and index.
struct ProductCell {
    std::uint8_t dim_first;
    std::uint8_t dim_second;
    std::uint32_t first;
    std::uint32_t second;

    bool operator==(const ProductCell&) const = default;
};

/// Cells sigma x tau of ordered disjoint simplex pairs, graded by
/// dim sigma + dim tau, with boundary
///   d(sigma x tau) = d(sigma) x tau + (-1)^{dim sigma} sigma x d(tau).
/// Grades are enumerated on first use.  Within a grade, cells are ordered by
/// (dim sigma, sigma, dim tau, tau).  Cell ids read "a,b|c,d".
class DeletedCellComplex final : public CellComplex {
public:
    explicit DeletedCellComplex(Complex base);

    const Complex& base() const noexcept { return base_; }

    std::string name() const override { return "deleted(" + base_.name() + ")"; }
    /// Upper bound 2 * dim(base); the top grades may be empty.
    int dim() const override { return 2 * base_.dim(); }
    std::size_t count(int g) const override;
    std::string cell_id(int g, std::size_t i) const override;
    std::optional<std::size_t> find_cell(int g, std::string_view id) const override;
    void boundary(int g, std::size_t i, std::vector<std::pair<std::size_t, int>>& out) const override;

    const std::vector<ProductCell>& cells(int g) const;
    std::optional<std::size_t> find(const ProductCell& c) const;
    /// Index of the swapped cell (tau, sigma) in the same grade.
    std::size_t swap_index(int g, std::size_t i) const;

    /// Number of cells with (dim sigma, dim tau) = key, over all grades, without materializing them.
    std::map<std::pair<int, int>, std::size_t> census() const;
    /// Number of cells in grade g, counted without materializing.
    std::size_t count_only(int g) const;

    bool disjoint(int d1, std::size_t i1, int d2, std::size_t i2) const;

private:
    struct Grade {
        std::vector<ProductCell> cells;
        std::unordered_map<std::uint64_t, std::uint32_t> index;
    };
    const Grade& grade(int g) const;
    std::uint64_t key(const ProductCell& c) const;

    Complex base_;
    std::size_t words_ = 1;
    std::vector<std::vector<std::uint64_t>> masks_;  // per dim, stride words_
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<Grade>> grades_;
};

enum class SignMode { untwisted, product_sign };

std::string_view sign_mode_name(SignMode m);
SignMode parse_sign_mode(std::string_view s);

/// Quotient by the swap.  The representative of an orbit is the ordered cell
/// whose first simplex has the smaller global id.  A non-representative cell
/// (tau, sigma) equals eps * (sigma, tau) with eps = (-1)^{dim sigma * dim tau}
/// in product_sign mode and eps = 1 in untwisted mode.  Over Z only
/// product_sign gives a chain complex; over Z/2 the modes agree.
class OrbitComplex final : public CellComplex {
public:
    OrbitComplex(std::shared_ptr<const DeletedCellComplex> cover, SignMode mode);

    const DeletedCellComplex& cover() const noexcept { return *cover_; }
    SignMode mode() const noexcept { return mode_; }

    std::string name() const override;
    int dim() const override { return cover_->dim(); }
    std::size_t count(int g) const override;
    std::string cell_id(int g, std::size_t i) const override;
    std::optional<std::size_t> find_cell(int g, std::string_view id) const override;
    void boundary(int g, std::size_t i, std::vector<std::pair<std::size_t, int>>& out) const override;

    /// Index of the representative cell in the cover's grade.
    std::size_t representative(int g, std::size_t i) const;
    /// (orbit index, eps) for an ordered cell of the cover.
    std::pair<std::size_t, int> orbit_of(int g, std::size_t ordered) const;
    int transport_sign(const ProductCell& c) const;

private:
    struct Grade {
        std::vector<std::uint32_t> reps;
        std::vector<std::uint32_t> orbit;  // per ordered cell
        std::vector<std::int8_t> sign;     // per ordered cell
    };
    const Grade& grade(int g) const;

    std::shared_ptr<const DeletedCellComplex> cover_;
    SignMode mode_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<Grade>> grades_;
};

std::shared_ptr<const DeletedCellComplex> deleted_product(const Complex& x);
std::shared_ptr<const OrbitComplex> quotient(std::shared_ptr<const DeletedCellComplex> d, SignMode mode);

} // namespace vko
