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

#ifndef FAIR_CC_FAIRLET_H_
#define FAIR_CC_FAIRLET_H_

#include <vector>

#include "fair_cc/signed_graph.h"

namespace fair_cc {

// A small group of vertices with a designated center. The center is metadata
// only; nothing in the reduction reads it.
struct Fairlet {
  std::vector<Vertex> members;
  Vertex center = 0;

  bool operator==(const Fairlet&) const = default;
};

struct FairletDecomposition {
  std::vector<Fairlet> fairlets;

  size_t size() const { return fairlets.size(); }
  size_t MaxFairletSize() const;
  // The decomposition read as a clustering: fairlet i becomes cluster i.
  Clustering AsClustering(Vertex n) const;
  // Inverse of AsClustering; centers are the lowest member of each cluster.
  static FairletDecomposition FromClustering(const Clustering& c);

  bool operator==(const FairletDecomposition&) const = default;
};

}  // namespace fair_cc

#endif  // FAIR_CC_FAIRLET_H_
