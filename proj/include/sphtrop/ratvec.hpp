#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sphtrop/rational.hpp"

namespace sphtrop {

/// Vector with exact rational entries; fixed length = ambient dimension.
using RatVec = std::vector<Rat>;

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);
RatVec neg(const RatVec& v);
bool is_zero(const RatVec& v);

/// Scales to the unique primitive integer vector on the same ray.
/// Zero vector maps to itself.
RatVec primitive(const RatVec& v);

/// Lexicographic order on entries.
bool lex_less(const RatVec& a, const RatVec& b);

std::string to_string(const RatVec& v);

// ---- exact linear algebra on row lists ----

/// Reduced row echelon form over Q, in place. Returns pivot columns.
/// Zero rows are removed. Deterministic: first nonzero column pivots.
std::vector<std::size_t> rref(std::vector<RatVec>& rows);

/// Basis of the null space {v : M v = 0}, canonicalized (RREF of the
/// null basis, primitive integer rows, positive leading entries).
std::vector<RatVec> null_space(std::vector<RatVec> rows, std::size_t dim);

/// Canonical basis of the row space: RREF rows scaled to primitive
/// integer vectors with positive leading entry.
std::vector<RatVec> row_space_basis(std::vector<RatVec> rows);

std::size_t rank(std::vector<RatVec> rows);

/// Solves x * rows = target for x, where rows are linearly independent.
/// Returns nullopt when target is not in the row span.
std::optional<std::vector<Rat>> solve_in_row_span(const std::vector<RatVec>& rows,
                                                  const RatVec& target);

/// Matrix-vector product, rows acting as functionals.
RatVec apply_rows(const std::vector<RatVec>& rows, const RatVec& v);

}  // namespace sphtrop
