// Copyright 2026 The banditlab Authors.
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


#include "banditlab/linear.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "banditlab/simd/kernels.h"

namespace banditlab {

WeightMatrix::WeightMatrix(int num_labels, int dim)
    : k_(num_labels), d_(dim), data_(std::size_t(num_labels) * dim, 0.0) {
  if (num_labels < 2 || dim < 1) {
    throw std::invalid_argument(
        fmt::format("bad matrix shape {}x{}", num_labels, dim));
  }
}

Vector WeightMatrix::Scores(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != d_) {
    throw std::invalid_argument(
        fmt::format("vector of length {} against dimension {}", x.size(), d_));
  }
  Vector s(k_);
  for (Label y = 0; y < k_; ++y) s[y] = simd::Dot(row(y), x);
  return s;
}

double WeightMatrix::FrobeniusSquared() const { return simd::Dot(data_, data_); }

double WeightMatrix::FrobeniusNorm() const { return std::sqrt(FrobeniusSquared()); }

WeightMatrix WeightMatrix::Scaled(double c) const {
  WeightMatrix out = *this;
  simd::Scale(out.data_, c);
  return out;
}

double Norm(std::span<const double> x) { return std::sqrt(simd::Dot(x, x)); }

double MarginGap(const WeightMatrix& w, std::span<const double> x, Label y) {
  const Vector s = w.Scores(x);
  double other = -std::numeric_limits<double>::infinity();
  for (Label z = 0; z < w.num_labels(); ++z) {
    if (z != y) other = std::max(other, s[z]);
  }
  return s[y] - other;
}

Label ArgmaxLabel(const WeightMatrix& w, std::span<const double> x) {
  const Vector s = w.Scores(x);
  Label best = 0;
  for (Label y = 1; y < w.num_labels(); ++y) {
    if (s[y] > s[best]) best = y;
  }
  return best;
}

MarginReport CheckMarginRealization(const WeightMatrix& w,
                                    const std::vector<LabeledPoint>& graph) {
  MarginReport r{true, std::numeric_limits<double>::infinity(),
                 w.FrobeniusSquared()};
  for (const LabeledPoint& p : graph) {
    r.min_gap = std::min(r.min_gap, MarginGap(w, p.x, p.y));
  }
  r.realized = graph.empty() || r.min_gap >= 1.0 - kGapTolerance;
  return r;
}

Vector BasisVector(int j, int dim) {
  if (j < 0 || j >= dim) throw std::out_of_range("basis index out of range");
  Vector e(dim, 0.0);
  e[j] = 1.0;
  return e;
}

StandardEmbedding EmbedFunction(const std::vector<Label>& f, int num_labels,
                                int dim) {
  const int length = static_cast<int>(f.size());
  if (length > dim) {
    throw std::invalid_argument(
        fmt::format("{} points do not fit in dimension {}", length, dim));
  }
  StandardEmbedding out{WeightMatrix(num_labels, dim), {}, {}};
  for (int j = 0; j < length; ++j) {
    if (f[j] < 0 || f[j] >= num_labels) throw std::out_of_range("label out of range");
    out.w.at(f[j], j) = 1.0;
    out.instances.push_back(BasisVector(j, dim));
    out.graph.push_back({out.instances.back(), f[j]});
  }
  return out;
}

double RootsOfUnityGap(int num_labels) {
  const double k = num_labels;
  return k * k * (1.0 - std::cos(2.0 * std::numbers::pi / k));
}

RootsOfUnityConstruction RootsOfUnity(const std::vector<Label>& f, int delta,
                                      int num_labels, int dim) {
  const int k = num_labels;
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  if (static_cast<int>(f.size()) != delta * k) {
    throw std::invalid_argument("labeling must cover [delta] x [k]");
  }
  if (dim < 2 * delta) {
    throw std::invalid_argument(
        fmt::format("dimension {} below 2 delta = {}", dim, 2 * delta));
  }
  for (int j = 0; j < delta; ++j) {
    std::vector<bool> seen(k, false);
    for (int m = 0; m < k; ++m) {
      const Label y = f[j * k + m];
      if (y < 0 || y >= k || seen[y]) {
        throw std::invalid_argument(fmt::format("f({}, .) is not a bijection", j));
      }
      seen[y] = true;
    }
  }
  RootsOfUnityConstruction out{delta, k, WeightMatrix(k, dim),
                               WeightMatrix(k, dim), {}, {}, 0.0};
  const double scale = double(k) * k;
  for (int j = 0; j < delta; ++j) {
    for (int m = 0; m < k; ++m) {
      const double theta = 2.0 * std::numbers::pi * m / k;
      const Label y = f[j * k + m];
      out.w.at(y, 2 * j) = scale * std::cos(theta);
      out.w.at(y, 2 * j + 1) = scale * std::sin(theta);
      Vector x(dim, 0.0);
      x[2 * j] = std::cos(theta);
      x[2 * j + 1] = std::sin(theta);
      out.instances.push_back(x);
      out.graph.push_back({std::move(x), y});
    }
  }
  out.min_gap = CheckMarginRealization(out.w, out.graph).min_gap;
  out.normalized = out.w.Scaled(1.0 / out.min_gap);
  return out;
}

LinearCheck CheckRootsOfUnity(int delta, int num_labels) {
  const int k = num_labels;
  std::vector<Label> f(delta * k);
  for (int j = 0; j < delta; ++j) {
    for (int m = 0; m < k; ++m) f[j * k + m] = m;
  }
  const int dim = 2 * delta;
  const RootsOfUnityConstruction c = RootsOfUnity(f, delta, k, dim);
  LinearCheck out;
  out.delta = delta;
  out.num_labels = k;
  out.dim = dim;
  out.min_gap = c.min_gap;
  out.frobenius_squared = c.w.FrobeniusSquared();
  out.normalized_frobenius_squared = c.normalized.FrobeniusSquared();
  out.threshold = double(k) * k * k * dim;
  out.fits_threshold = out.normalized_frobenius_squared <= out.threshold;
  return out;
}

// -- Perceptron ---------------------------------------------------------------

bool MulticlassPerceptron::Observe(std::span<const double> x, Label y) {
  const Label guess = Predict(x);
  if (guess == y) return false;
  simd::Axpy(1.0, x, w_.mutable_row(y));
  simd::Axpy(-1.0, x, w_.mutable_row(guess));
  ++mistakes_;
  return true;
}

PerceptronRun RunPerceptron(int num_labels, int dim,
                            const std::vector<LabeledPoint>& stream) {
  MulticlassPerceptron p(num_labels, dim);
  for (const LabeledPoint& item : stream) p.Observe(item.x, item.y);
  return {p.mistakes(), p.weights()};
}

std::vector<LabeledPoint> SampleFromGraph(const std::vector<LabeledPoint>& graph,
                                          int horizon, Rng& rng) {
  if (graph.empty()) throw std::invalid_argument("empty graph");
  std::vector<LabeledPoint> out;
  out.reserve(horizon);
  for (int t = 0; t < horizon; ++t) {
    out.push_back(graph[UniformInt(rng, 0, static_cast<int>(graph.size()) - 1)]);
  }
  return out;
}

BanditPerceptronLearner::BanditPerceptronLearner(std::vector<Vector> instances,
                                                 int num_labels)
    : instances_(std::make_shared<const std::vector<Vector>>(std::move(instances))),
      w_(num_labels, instances_->empty() ? 1 : static_cast<int>((*instances_)[0].size())) {}

std::unique_ptr<Learner> BanditPerceptronLearner::Clone() const {
  return std::make_unique<BanditPerceptronLearner>(*this);
}

Label BanditPerceptronLearner::Predict(Instance x, Rng&) {
  return ArgmaxLabel(w_, instances_->at(x));
}

void BanditPerceptronLearner::Update(Instance x, Label prediction,
                                     const Feedback& feedback) {
  const bool hit = std::get<BanditFeedback>(feedback).correct;
  simd::Axpy(hit ? 1.0 : -1.0, instances_->at(x), w_.mutable_row(prediction));
}

}  // namespace banditlab
