#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "sectio/poly.hpp"

namespace sectio {

/// One closed or open halfspace <normal, x> <= offset (strict: <).
struct Halfspace {
  std::vector<mpq_class> normal;
  mpq_class offset;
  bool strict = false;
};

/// Exact convex hull of integer points in R^dim. Vertices are the extreme
/// points; halfspaces describe the same set and include the affine-hull
/// equalities as opposite inequality pairs when the hull is not
/// full-dimensional.
struct NewtonPolytope {
  int dim = 0;
  std::vector<std::vector<int64_t>> vertices;
  std::vector<Halfspace> halfspaces;
};

/// Bounds on the p-degree of an annihilating linearized polynomial, from the
/// closed form, the box-point count of the state space, and the diagonal
/// class count. N_effective = min(N_closed, N_diag); automaton state-space
/// sizing uses N_box directly.
struct BoundReport {
  int64_t N_closed = 0;
  int64_t N_box = 0;
  int64_t N_diag = 0;
  int64_t N_effective = 0;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Exact hull of an arbitrary integer point set (brute-force facet
/// enumeration with rational arithmetic; desk scale, dim <= 5).
NewtonPolytope hull_of_points(std::vector<std::vector<int64_t>> points, int dim);

/// Hull of the support of A in R^{n+1}.
NewtonPolytope newton_polytope(const MultiPoly& A);

/// Lattice points z >= 0 whose half-open box z + [0,1)^{n+1} meets the Newton
/// polytope of A, i.e. the nonnegative integer points of NP(A) + (-1,0]^{n+1}.
std::vector<Expo> box_lattice_points(const MultiPoly& A, int threads = 1);

int64_t count_box_points(const MultiPoly& A, int threads = 1);

/// (d+1) * min( prod(h_i+1) - prod(h_i), C(n+h,n) - C(h,n) ).
int64_t bound_closed_form(const DegreeProfile& dp, int n);

/// Number of classes of nonnegative integer points of
/// NP(A) + (diagonal line x (-1,0]) under translation along the diagonal;
/// canonical representatives have some zero t-coordinate.
int64_t count_diagonal_classes(const MultiPoly& A, int threads = 1);

BoundReport bound_report(const MultiPoly& A, int threads = 1);

}  // namespace sectio
