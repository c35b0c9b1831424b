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

#ifndef CAUSALKG_KMEANS_H_
#define CAUSALKG_KMEANS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace causalkg {

// Row-major point matrix.
struct PointMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  PointMatrix() = default;
  PointMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0.0) {}

  std::span<double> row(int i) {
    return {data.data() + std::size_t(i) * cols, std::size_t(cols)};
  }
  std::span<const double> row(int i) const {
    return {data.data() + std::size_t(i) * cols, std::size_t(cols)};
  }
};

struct KMeansOptions {
  int k = 3000;
  std::uint64_t seed = 42;
  int max_iterations = 300;
  int threads = 0;  // 0 = hardware concurrency
};

struct KMeansResult {
  std::vector<int> assignment;  // point -> cluster in [0, k)
  PointMatrix centroids;
  // Inertia after each assignment step; non-increasing.
  std::vector<double> inertia_history;
  double inertia = 0.0;
  int iterations = 0;
  bool converged = false;  // stopped because no assignment changed
};

double SquaredDistance(std::span<const double> a, std::span<const double> b);

// Sum of squared distances from each point to its assigned centroid.
double Inertia(const PointMatrix &points, const PointMatrix &centroids,
               std::span<const int> assignment);

// Lloyd iterations from a seeded k-means++ start. Deterministic for a fixed
// (points, k, seed). Ties in distance go to the lower cluster index, except
// that a point keeps its current cluster unless another is strictly closer.
// Throws InputError when the matrix is empty or k is out of [1, rows].
KMeansResult KMeans(const PointMatrix &points, const KMeansOptions &options);

// splitmix64-seeded generator with portable integer/real draws, so seeded
// runs are identical across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next();
  double NextDouble();                     // [0, 1)
  std::uint64_t NextBelow(std::uint64_t bound);  // [0, bound)

 private:
  std::uint64_t state_;
};

}  // namespace causalkg

#endif  // CAUSALKG_KMEANS_H_
