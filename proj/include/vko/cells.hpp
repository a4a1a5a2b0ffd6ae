#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vko/complex.hpp"

namespace vko {

/// Finite cell complex with signed incidences, as seen by the chain algebra.
/// Cells of each dimension are indexed 0..count(d)-1 in a canonical order.
class CellComplex {
public:
    virtual ~CellComplex() = default;

    virtual std::string name() const = 0;
    virtual int dim() const = 0;
    virtual std::size_t count(int d) const = 0;
    virtual std::string cell_id(int d, std::size_t i) const = 0;
    virtual std::optional<std::size_t> find_cell(int d, std::string_view id) const = 0;
    /// Appends the faces of cell (d, i) as (index in dimension d-1, incidence).
    virtual void boundary(int d, std::size_t i, std::vector<std::pair<std::size_t, int>>& out) const = 0;
};

/// A simplicial complex with the usual alternating-sign boundary.
class SimplicialCells final : public CellComplex {
public:
    explicit SimplicialCells(Complex x) : x_(std::move(x)) {}

    const Complex& complex() const noexcept { return x_; }

    std::string name() const override { return x_.name(); }
    int dim() const override { return x_.dim(); }
    std::size_t count(int d) const override { return x_.count(d); }
    std::string cell_id(int d, std::size_t i) const override { return x_.simplex_id(d, i); }
    std::optional<std::size_t> find_cell(int d, std::string_view id) const override;
    void boundary(int d, std::size_t i, std::vector<std::pair<std::size_t, int>>& out) const override;

private:
    Complex x_;
};

} // namespace vko
