// Copyright 2026 The causalkg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "causalkg/kmeans.h"

#include <algorithm>
#include <limits>
#include <thread>

#include "causalkg/error.h"

namespace causalkg {

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::NextDouble() { return double(Next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::NextBelow(std::uint64_t bound) {
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double Inertia(const PointMatrix &points, const PointMatrix &centroids,
               std::span<const int> assignment) {
  double total = 0.0;
  for (int i = 0; i < points.rows; ++i) {
    total += SquaredDistance(points.row(i), centroids.row(assignment[i]));
  }
  return total;
}

namespace {

PointMatrix SeedPlusPlus(const PointMatrix &points, int k, SplitMix64 &rng) {
  const int n = points.rows;
  PointMatrix centroids(k, points.cols);
  std::vector<bool> chosen(n, false);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());

  auto take = [&](int c, int index) {
    chosen[index] = true;
    std::copy(points.row(index).begin(), points.row(index).end(), centroids.row(c).begin());
    for (int i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], SquaredDistance(points.row(i), centroids.row(c)));
    }
  };

  take(0, static_cast<int>(rng.NextBelow(n)));
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += chosen[i] ? 0.0 : nearest[i];
    int pick = -1;
    if (total > 0.0) {
      const double r = rng.NextDouble() * total;
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        if (chosen[i] || nearest[i] <= 0.0) continue;
        acc += nearest[i];
        pick = i;
        if (acc > r) break;
      }
    }
    if (pick < 0) {
      // Every remaining point coincides with a centroid.
      std::uint64_t skip = rng.NextBelow(static_cast<std::uint64_t>(n - c));
      for (int i = 0; i < n; ++i) {
        if (chosen[i]) continue;
        if (skip-- == 0) {
          pick = i;
          break;
        }
      }
    }
    take(c, pick);
  }
  return centroids;
}

// Assigns [begin, end) and records per-point distances.
void AssignRange(const PointMatrix &points, const PointMatrix &centroids, int begin,
                 int end, std::vector<int> &assignment, std::vector<double> &distance,
                 std::vector<char> &changed) {
  for (int i = begin; i < end; ++i) {
    const int current = assignment[i];
    int best = current;
    double best_d = current >= 0 ? SquaredDistance(points.row(i), centroids.row(current))
                                 : std::numeric_limits<double>::infinity();
    for (int c = 0; c < centroids.rows; ++c) {
      if (c == current) continue;
      const double d = SquaredDistance(points.row(i), centroids.row(c));
      if (d < best_d || (d == best_d && current < 0 && c < best)) {
        best = c;
        best_d = d;
      }
    }
    changed[i] = best != current;
    assignment[i] = best;
    distance[i] = best_d;
  }
}

}  // namespace

KMeansResult KMeans(const PointMatrix &points, const KMeansOptions &options) {
  const int n = points.rows;
  const int k = options.k;
  if (n == 0 || points.cols == 0) throw InputError("k-means needs a non-empty point set");
  if (k < 1 || k > n) {
    throw InputError("k-means k=" + std::to_string(k) + " must lie in [1, " +
                     std::to_string(n) + "]");
  }

  SplitMix64 rng(options.seed);
  KMeansResult result;
  result.centroids = SeedPlusPlus(points, k, rng);
  result.assignment.assign(n, -1);

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  const double work = double(n) * k * points.cols;
  if (threads < 1 || work < 4e6) threads = 1;
  threads = std::min(threads, n);

  std::vector<double> distance(n);
  std::vector<char> changed(n);
  std::vector<double> sums;
  std::vector<int> counts;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    if (threads == 1) {
      AssignRange(points, result.centroids, 0, n, result.assignment, distance, changed);
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) {
        const int begin = int(std::int64_t(n) * t / threads);
        const int end = int(std::int64_t(n) * (t + 1) / threads);
        pool.emplace_back([&, begin, end] {
          AssignRange(points, result.centroids, begin, end, result.assignment, distance,
                      changed);
        });
      }
    }
    double inertia = 0.0;
    int moved = 0;
    for (int i = 0; i < n; ++i) {
      inertia += distance[i];
      moved += changed[i];
    }
    result.inertia_history.push_back(inertia);
    result.iterations = iter + 1;
    if (moved == 0) {
      result.converged = true;
      break;
    }
    if (iter + 1 == options.max_iterations) break;

    sums.assign(std::size_t(k) * points.cols, 0.0);
    counts.assign(k, 0);
    for (int i = 0; i < n; ++i) {
      const int c = result.assignment[i];
      ++counts[c];
      auto p = points.row(i);
      for (int d = 0; d < points.cols; ++d) sums[std::size_t(c) * points.cols + d] += p[d];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;  // empty cluster keeps its centroid
      auto row = result.centroids.row(c);
      for (int d = 0; d < points.cols; ++d) {
        row[d] = sums[std::size_t(c) * points.cols + d] / counts[c];
      }
    }
  }
  result.inertia = result.inertia_history.back();
  return result;
}

}  // namespace causalkg
