#ifndef SKEWX_LINALG_HPP
#define SKEWX_LINALG_HPP

#include <optional>
#include <vector>

#include "skewx/rings.hpp"

namespace skewx {

enum class DependenceKind { Witness, Independent, Unsupported };

/// Result of a right-dependence search on the columns of a matrix.
/// Witness carries a nonzero column vector b with M*b = 0 exactly.
struct DependenceResult {
    DependenceKind kind;
    std::vector<RingElem> vec;
};

struct SolveOptions {
    size_t enumeration_cap = 100000;  // candidate-vector cap for finite searches
};

/// Decide (or bounded-search) whether the columns of M are right R-linearly
/// dependent. Strategy by descriptor: fields use exact Gaussian elimination;
/// Z and Poly-over-field eliminate over the fraction field and clear
/// denominators; Z/m composite enumerates residue vectors exhaustively up to
/// the cap; TruncPoly searches degree-bounded monomial candidates (Witness or
/// Unsupported only).
DependenceResult solve_right_dependence(const RingMatrix& m, const SolveOptions& opts = {});

/// Exact determinant (cofactor expansion; intended for small matrices).
RingElem determinant(const RingMatrix& m);

/// Inverse over R itself (not the fraction field): adjugate/determinant for
/// n <= 4, fraction-field elimination with a denominator check for larger n.
std::optional<RingMatrix> invert_matrix(const RingMatrix& m);

/// One exact solution of A x = rhs with x in R^n, if the descriptor supports
/// elimination and such a solution exists. Free variables are set to zero.
std::optional<std::vector<RingElem>> solve_linear_in_ring(const RingMatrix& a,
                                                          const std::vector<RingElem>& rhs);

}  // namespace skewx

#endif
