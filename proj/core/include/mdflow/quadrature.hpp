#ifndef MDFLOW_QUADRATURE_HPP
#define MDFLOW_QUADRATURE_HPP

#include <vector>

namespace mdflow {

/// Quadrature rule on the reference simplex. Barycentric coordinates are
/// stored per point ((dim+1) values); weights sum to 1 and are applied as
/// integral ~= |K| * sum_i w_i f(x_i).
struct SimplexRule {
  int dim = 0;
  std::vector<double> weights;
  std::vector<double> bary;  // (dim+1) per point

  int size() const { return static_cast<int>(weights.size()); }
  const double* point(int i) const { return bary.data() + i * (dim + 1); }
};

/// Rule exact for polynomials of total degree <= `degree` on the reference
/// simplex of dimension `dim` (0, 1 or 2). Built from Gauss-Legendre nodes
/// (collapsed-square construction for triangles), so exactness holds to
/// machine precision for any requested degree.
const SimplexRule& simplex_rule(int dim, int degree);

/// Gauss-Legendre nodes/weights on [0, 1], exact for degree 2n-1.
void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights);

}  // namespace mdflow

#endif
