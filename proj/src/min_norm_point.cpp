// Copyright 2026 The CCSM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Fujishige–Wolfe minimum-norm-point SFM with an integrality certificate.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "ccsm/errors.hpp"
#include "ccsm/sfm.hpp"

namespace ccsm {
namespace {

using Vec = Eigen::VectorXd;

struct GreedyVertex {
  Vec point;
  Subset best_prefix;
  double best_prefix_value = 0;  // h(T) - h(∅)
};

// Vertex of the base polytope of h' = h - h(∅) minimizing <w, q>: visit
// elements in increasing w and take marginal values. The prefixes visited are
// exactly the level sets of w, so the best of them comes for free.
GreedyVertex greedy(const SubmodularOracle& h, const Vec& w, std::int64_t h_empty,
                    std::uint64_t& evals) {
  const int n = h.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  GreedyVertex out;
  out.point = Vec::Zero(n);
  Subset prefix;
  std::int64_t prev = h_empty;
  out.best_prefix_value = 0;
  for (int i : order) {
    prefix = prefix.with(i);
    const std::int64_t v = h.eval(prefix);
    ++evals;
    out.point[i] = static_cast<double>(v - prev);
    prev = v;
    const double rel = static_cast<double>(v - h_empty);
    if (rel < out.best_prefix_value) {
      out.best_prefix_value = rel;
      out.best_prefix = prefix;
    }
  }
  return out;
}

// Affine combination of the given points with minimum norm. The weights do
// not change under scaling, so the points are normalized first; otherwise the
// unit row of the KKT system drowns next to large Gram entries.
Vec affine_min_norm(const std::vector<Vec>& points) {
  const int k = static_cast<int>(points.size());
  if (k == 1) return Vec::Ones(1);
  double s = 0;
  for (const Vec& p : points) s = std::max(s, p.cwiseAbs().maxCoeff());
  if (s == 0) s = 1;
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      kkt(i, j) = kkt(j, i) = points[i].dot(points[j]) / (s * s);
    }
    kkt(i, k) = kkt(k, i) = 1.0;
  }
  Vec rhs = Vec::Zero(k + 1);
  rhs[k] = 1.0;
  Vec sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  return sol.head(k);
}

}  // namespace

Subset min_norm_point_minimize(const SubmodularOracle& h, std::uint64_t& evals) {
  const int n = h.size();
  if (n == 0) return Subset();
  const std::int64_t h_empty = h.eval(Subset());
  ++evals;

  const double scale = static_cast<double>(std::max<std::int64_t>(1, h.range_bound()));
  const double weight_tol = 1e-12;

  std::vector<Vec> points;
  std::vector<double> lambda;
  GreedyVertex start = greedy(h, Vec::Zero(n), h_empty, evals);
  points.push_back(start.point);
  lambda.push_back(1.0);
  Vec x = start.point;

  Subset best_set = start.best_prefix;
  double best_value = start.best_prefix_value;

  const int max_major = 100 * n + 1000;
  for (int iter = 0; iter < max_major; ++iter) {
    const GreedyVertex q = greedy(h, x, h_empty, evals);
    if (q.best_prefix_value < best_value) {
      best_value = q.best_prefix_value;
      best_set = q.best_prefix;
    }
    // Certificate: every S has h'(S) >= x(S) >= x⁻(N). Vertices are integral,
    // so x⁻(N) is recomputed in extended precision from the combination and
    // the slack tracks its rounding error only.
    const long double weight_sum = std::accumulate(lambda.begin(), lambda.end(), 0.0L);
    long double lower = 0, mass = 0;
    for (int i = 0; i < n; ++i) {
      long double xi = 0;
      for (std::size_t j = 0; j < points.size(); ++j) {
        const long double term = static_cast<long double>(lambda[j]) / weight_sum * points[j][i];
        xi += term;
        mass += term < 0 ? -term : term;
      }
      lower += std::min(0.0L, xi);
    }
    const long double slack =
        8.0L * static_cast<long double>(points.size() + n) * std::numeric_limits<long double>::epsilon() *
        (1.0L + mass);
    if (best_value < lower - slack + 1.0L) return best_set;

    const double gap = x.squaredNorm() - x.dot(q.point);
    if (gap <= 1e-15 * scale * scale) break;

    points.push_back(q.point);
    lambda.push_back(0.0);
    while (true) {
      const Vec alpha = affine_min_norm(points);
      bool interior = true;
      for (int i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= weight_tol) interior = false;
      }
      if (interior) {
        for (int i = 0; i < alpha.size(); ++i) lambda[i] = alpha[i];
        break;
      }
      double theta = 1.0;
      int blocking = -1;
      for (int i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= weight_tol) {
          const double denom = lambda[i] - alpha[i];
          if (denom > 0 && lambda[i] / denom <= theta) {
            theta = lambda[i] / denom;
            blocking = i;
          }
        }
      }
      std::vector<Vec> kept_points;
      std::vector<double> kept_lambda;
      for (int i = 0; i < alpha.size(); ++i) {
        const double l = theta * alpha[i] + (1.0 - theta) * lambda[i];
        // The blocking point always leaves, so each pass shrinks the set.
        if (i != blocking && l > weight_tol) {
          kept_points.push_back(points[i]);
          kept_lambda.push_back(l);
        }
      }
      if (kept_points.empty()) {
        kept_points.push_back(points.back());
        kept_lambda.push_back(1.0);
      }
      points = std::move(kept_points);
      lambda = std::move(kept_lambda);
    }
    const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    x = Vec::Zero(n);
    for (std::size_t i = 0; i < points.size(); ++i) x += (lambda[i] / total) * points[i];
  }
  throw InconsistencyError("minimum-norm-point iteration stalled without an optimality certificate");
}

}  // namespace ccsm
