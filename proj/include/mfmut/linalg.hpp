#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mfmut/rational.hpp"

namespace mfmut {

struct Echelon {
  RatMatrix rows;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(RatMatrix m, std::size_t cols);
std::size_t rank(const RatMatrix& m, std::size_t cols);

/// Basis of {x : m·x = 0}; one vector per free column, with a 1 in that column.
RatMatrix nullspace(const RatMatrix& m, std::size_t cols);

/// Some solution of A·x = b, or nullopt.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b, std::size_t cols);

RatMatrix inverse(const RatMatrix& m);
Rat determinant(RatMatrix m);
Int determinant(IntMatrix m);

/// Scales a rational vector to a primitive integer vector with the same direction.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

/// Basis (as rows) of the lattice {x ∈ Z^cols : C·x = 0}.
IntMatrix integer_kernel(const IntMatrix& c, std::size_t cols);

/// Row Hermite normal form; zero rows dropped, pivots positive, entries above pivots reduced.
IntMatrix hermite_rows(IntMatrix m, std::size_t cols);

RatMatrix transpose(const RatMatrix& m, std::size_t cols);
RatVec mat_vec(const RatMatrix& m, const RatVec& v);
IntVec mat_vec(const IntMatrix& m, const IntVec& v);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_int(std::size_t n);

}  // namespace mfmut
