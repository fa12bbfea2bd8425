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


#ifndef BANDITLAB_LINEAR_H_
#define BANDITLAB_LINEAR_H_

#include <memory>
#include <string>
#include <vector>

#include "banditlab/learners.h"

// Multiclass linear scorers x -> argmax_y (W x)_y with W a k x d matrix.
// A pair (x, y) is margin-realized by W when (W x)_y >= 1 + max_{y' != y}
// (W x)_{y'}.

namespace banditlab {

using Vector = std::vector<double>;

inline constexpr double kGapTolerance = 1e-9;

class WeightMatrix {
 public:
  WeightMatrix(int num_labels, int dim);

  int num_labels() const { return k_; }
  int dim() const { return d_; }

  double& at(Label y, int i) { return data_[std::size_t(y) * d_ + i]; }
  double at(Label y, int i) const { return data_[std::size_t(y) * d_ + i]; }
  std::span<const double> row(Label y) const {
    return {data_.data() + std::size_t(y) * d_, std::size_t(d_)};
  }
  std::span<double> mutable_row(Label y) {
    return {data_.data() + std::size_t(y) * d_, std::size_t(d_)};
  }

  // (W x)_y for every y.
  Vector Scores(std::span<const double> x) const;
  double FrobeniusSquared() const;
  double FrobeniusNorm() const;
  WeightMatrix Scaled(double c) const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  int k_;
  int d_;
  std::vector<double> data_;
};

struct LabeledPoint {
  Vector x;
  Label y;
};

double Norm(std::span<const double> x);

// (W x)_y - max_{y' != y} (W x)_{y'}.
double MarginGap(const WeightMatrix& w, std::span<const double> x, Label y);

// argmax_y (W x)_y, smallest label on ties.
Label ArgmaxLabel(const WeightMatrix& w, std::span<const double> x);

struct MarginReport {
  bool realized;       // every gap >= 1 - kGapTolerance
  double min_gap;      // +inf for an empty graph
  double frobenius_squared;
};

MarginReport CheckMarginRealization(const WeightMatrix& w,
                                    const std::vector<LabeledPoint>& graph);

// -- Constructions ------------------------------------------------------------

// f : [L] -> [k] as a matrix over R^d whose row i is the sum of e_j over
// f(j) = i; instance j is e_j.
struct StandardEmbedding {
  WeightMatrix w;
  std::vector<Vector> instances;   // e_0 .. e_{L-1}
  std::vector<LabeledPoint> graph;  // (e_j, f(j))
};

StandardEmbedding EmbedFunction(const std::vector<Label>& f, int num_labels,
                                int dim);

// e_j in R^d.
Vector BasisVector(int j, int dim);

// f over [delta] x [k] (index j*k + m) with every f(j, .) a bijection. In
// complex coordinates x_{j,m} = w^m e_j and W_{f(j,m), j} = k^2 w^m with
// w = exp(2 pi i / k); complex coordinate j is stored as real coordinates
// (2j, 2j + 1), so real dot products are real parts of hermitian products.
struct RootsOfUnityConstruction {
  int delta;
  int num_labels;
  WeightMatrix w;                   // entries of modulus k^2
  WeightMatrix normalized;          // w divided by its min gap
  std::vector<Vector> instances;    // index j*k + m
  std::vector<LabeledPoint> graph;
  double min_gap;
};

RootsOfUnityConstruction RootsOfUnity(const std::vector<Label>& f, int delta,
                                      int num_labels, int dim);

// k^2 (1 - cos(2 pi / k))
double RootsOfUnityGap(int num_labels);

// Norm bookkeeping for the roots-of-unity construction at (delta, k) in
// dimension d = 2 delta.
struct LinearCheck {
  int delta;
  int num_labels;
  int dim;
  double min_gap;
  double frobenius_squared;             // delta k^5
  double normalized_frobenius_squared;  // after scaling the min gap to 1
  double threshold;                     // k^3 d
  bool fits_threshold;                  // normalized <= threshold
};

LinearCheck CheckRootsOfUnity(int delta, int num_labels);

// -- Perceptron ---------------------------------------------------------------

// Multiclass Perceptron: predict the argmax row; on a mistake add x to the
// true row and subtract it from the predicted row.
class MulticlassPerceptron {
 public:
  MulticlassPerceptron(int num_labels, int dim) : w_(num_labels, dim) {}

  Label Predict(std::span<const double> x) const { return ArgmaxLabel(w_, x); }
  // Returns true on a mistake.
  bool Observe(std::span<const double> x, Label y);

  const WeightMatrix& weights() const { return w_; }
  int mistakes() const { return mistakes_; }

 private:
  WeightMatrix w_;
  int mistakes_ = 0;
};

struct PerceptronRun {
  int mistakes;
  WeightMatrix weights;
};

PerceptronRun RunPerceptron(int num_labels, int dim,
                            const std::vector<LabeledPoint>& stream);

// T points drawn uniformly (with replacement) from a realized graph.
std::vector<LabeledPoint> SampleFromGraph(const std::vector<LabeledPoint>& graph,
                                          int horizon, Rng& rng);

// Perceptron scores over embedded instances, driven by bandit feedback: a
// miss subtracts x from the predicted row; a hit adds x to it.
class BanditPerceptronLearner : public Learner {
 public:
  BanditPerceptronLearner(std::vector<Vector> instances, int num_labels);

  std::string name() const override { return "perceptron-bandit"; }
  FeedbackKind feedback_kind() const override { return FeedbackKind::kBandit; }
  bool deterministic() const override { return true; }
  std::unique_ptr<Learner> Clone() const override;
  Label Predict(Instance x, Rng& rng) override;

  const WeightMatrix& weights() const { return w_; }

 protected:
  void Update(Instance x, Label prediction, const Feedback& feedback) override;

 private:
  std::shared_ptr<const std::vector<Vector>> instances_;
  WeightMatrix w_;
};

}  // namespace banditlab

#endif  // BANDITLAB_LINEAR_H_
