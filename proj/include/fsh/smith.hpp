#pragma once

#include <optional>
#include <vector>

#include "fsh/matrix.hpp"

namespace fsh {

// u * a * v = s with u, v unimodular and s diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithForm {
    IntMatrix u, s, v;
    int rank = 0;

    std::vector<Int> diagonal() const;
};

// Deterministic SNF. Pivot choice: smallest nonzero absolute value in the
// remaining submatrix, ties broken by lowest row then lowest column index.
SmithForm smith_normal_form(const IntMatrix& a);

// Diagonal invariant factors only (no transforms); much cheaper.
std::vector<Int> smith_invariant_factors(const IntMatrix& a);

int matrix_rank(const IntMatrix& a);

// Solves a * x = b over the integers; sf must be the Smith form of a.
std::optional<std::vector<Int>> solve_with(const SmithForm& sf, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b);

// Columnwise solve a * X = B; nullopt if any column has no integer solution.
std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b);

// Basis of the integer kernel lattice {x : a x = 0}, as matrix columns.
IntMatrix kernel_lattice(const IntMatrix& a);

// Basis of {x : m x lies in the column lattice of b}. Contains the kernel of
// m; this is the standard preimage-lattice computation behind kernels of
// homomorphisms between presented groups.
IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& b);

// Reduced basis (columns) of the lattice spanned by the columns of g.
IntMatrix lattice_basis(const IntMatrix& g);

bool is_unimodular(const IntMatrix& a);

}  // namespace fsh
