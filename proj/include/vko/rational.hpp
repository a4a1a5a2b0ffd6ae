#pragma once

#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace vko {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;
using ZMat = std::vector<std::vector<mpz_class>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMat& m);

/// Basis of {z : m z = 0}; `cols` is needed when m has no rows.
std::vector<QVec> nullspace(QMat m, std::size_t cols);

/// Whether some w satisfies row . w > 0 for every row (homogeneous strict
/// system), decided by Fourier-Motzkin elimination.  A zero row is infeasible.
bool strictly_feasible(std::vector<QVec> rows);

/// Mixed system: row . w > 0 where strict[i], row . w >= 0 otherwise.
bool feasible(std::vector<QVec> rows, std::vector<bool> strict);

/// Fraction-free Gaussian elimination (Bareiss); square input.
mpz_class determinant(ZMat m);

int sign(const mpz_class& v);
int sign(const mpq_class& v);

} // namespace vko
