#include "mdflow/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mdflow {

void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // Newton iteration on P_n over [-1, 1], then affine map to [0, 1].
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = 0.5 * (1.0 + x);
    weights[i] = 1.0 / ((1.0 - x * x) * pp * pp);
  }
}

namespace {

SimplexRule make_rule(int dim, int degree) {
  SimplexRule rule;
  rule.dim = dim;
  if (dim == 0) {
    rule.weights = {1.0};
    rule.bary = {1.0};
    return rule;
  }
  if (dim == 1) {
    int n = (degree + 2) / 2;  // exact for 2n-1 >= degree
    std::vector<double> xs, ws;
    gauss_legendre_01(n, xs, ws);
    for (int i = 0; i < n; ++i) {
      rule.weights.push_back(ws[i]);
      rule.bary.push_back(1.0 - xs[i]);
      rule.bary.push_back(xs[i]);
    }
    return rule;
  }
  if (dim == 2) {
    // Collapsed square: (u, v) in [0,1]^2 -> bary (1-u, u(1-v), uv) with
    // Jacobian factor 2u relative to the unit-weight triangle. A degree-p
    // integrand pulls back to degree p+1 in u and p in v.
    int nu = (degree + 3) / 2;
    int nv = (degree + 2) / 2;
    std::vector<double> xu, wu, xv, wv;
    gauss_legendre_01(nu, xu, wu);
    gauss_legendre_01(nv, xv, wv);
    for (int i = 0; i < nu; ++i) {
      for (int j = 0; j < nv; ++j) {
        double u = xu[i], v = xv[j];
        rule.weights.push_back(wu[i] * wv[j] * 2.0 * u);
        rule.bary.push_back(1.0 - u);
        rule.bary.push_back(u * (1.0 - v));
        rule.bary.push_back(u * v);
      }
    }
    return rule;
  }
  throw std::invalid_argument("simplex_rule: unsupported dimension");
}

}  // namespace

const SimplexRule& simplex_rule(int dim, int degree) {
  static std::map<std::pair<int, int>, SimplexRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(dim, degree);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_rule(dim, degree)).first;
  return it->second;
}

}  // namespace mdflow
