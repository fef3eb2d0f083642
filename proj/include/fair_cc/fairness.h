// Copyright 2026 The Fair CC Authors.
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

#ifndef FAIR_CC_FAIRNESS_H_
#define FAIR_CC_FAIRNESS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fair_cc/fairlet.h"
#include "fair_cc/signed_graph.h"

namespace fair_cc {

// Exact rational upper bound on the share of any single color in a cluster.
struct Fraction {
  int64_t num = 1;
  int64_t den = 2;

  // floor(size * num / den)
  int64_t FloorTimes(int64_t size) const { return size * num / den; }
  double value() const { return static_cast<double>(num) / den; }
  // Cross-multiplied comparison; both denominators are positive.
  bool operator<=(const Fraction& o) const { return num * o.den <= o.num * den; }
  bool operator==(const Fraction& o) const { return num * o.den == o.num * den; }
};

class FairnessConstraint {
 public:
  enum class Mode { kHalf, kEqual, kOneOverT };

  static FairnessConstraint Half() { return FairnessConstraint(Mode::kHalf, 2); }
  // alpha = 1/C with C taken from the graph.
  static FairnessConstraint Equal() { return FairnessConstraint(Mode::kEqual, 0); }
  // Throws kInvalidArgument for t < 2.
  static FairnessConstraint OneOverT(int t);

  Mode mode() const { return mode_; }
  int t() const { return t_; }
  Fraction Alpha(const SignedGraph& g) const;
  std::string Name() const;

 private:
  FairnessConstraint(Mode mode, int t) : mode_(mode), t_(t) {}
  Mode mode_;
  int t_;
};

// True iff every color appears at most floor(|cluster| * alpha) times.
// Throws kEmptyCluster for an empty cluster.
bool IsFair(std::span<const Vertex> cluster, const SignedGraph& g,
            Fraction alpha);

// Sum over clusters and colors of max(count - floor(|P| alpha), 0), over n.
double Imbalance(const Clustering& c, const SignedGraph& g, Fraction alpha);

struct DecompositionViolation {
  enum class Kind { kMissing, kDuplicate, kUnknownVertex, kEmpty, kUnfair, kBadCenter };
  Kind kind;
  // Vertex for kMissing / kDuplicate / kUnknownVertex, fairlet index otherwise.
  int64_t index;

  bool operator==(const DecompositionViolation&) const = default;
};

std::string ToString(const DecompositionViolation& v);

// Empty result means the fairlets partition V and each one is fair.
std::vector<DecompositionViolation> ValidateDecomposition(
    const FairletDecomposition& p, const SignedGraph& g, Fraction alpha);

}  // namespace fair_cc

#endif  // FAIR_CC_FAIRNESS_H_
