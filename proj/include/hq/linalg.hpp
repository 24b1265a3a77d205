// linalg.hpp — Gaussian elimination over GF(q).
//
// Shared by the plane-meet computation and quadratic-form fitting. Pivoting is
// deterministic: columns are processed left to right and the pivot is the
// first (lowest-index) remaining row with a nonzero entry, so the reduced form
// and the nullspace basis are reproducible.
#pragma once

#include <vector>

#include "hq/gf.hpp"

namespace hq::linalg {

using Row = std::vector<gf::Element>;
using Matrix = std::vector<Row>;

// Reduces m to reduced row echelon form in place. Returns the pivot column of
// each pivot row, in row order.
std::vector<int> rref(const gf::Field& f, Matrix& m);

int rank(const gf::Field& f, Matrix m);

// Basis of the right nullspace {x : m x = 0} for a matrix with ncols columns.
// One basis vector per free column, free columns ascending.
std::vector<Row> nullspace(const gf::Field& f, Matrix m, int ncols);

}  // namespace hq::linalg
