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

#include "fair_cc/matching.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "fair_cc/error.h"

namespace fair_cc {

void EdgeCostMatrix::set(int u, int v, int64_t cost) {
  if (cost < 0) throw Error(ErrorCode::kInvalidArgument, "negative edge cost");
  if (u == v) throw Error(ErrorCode::kSelfLoop, "matching edge on one vertex");
  cost_[static_cast<size_t>(u) * n_ + v] = cost;
  cost_[static_cast<size_t>(v) * n_ + u] = cost;
}

namespace {

// Maximum-weight matching with dual variables and explicit blossoms
// (Edmonds / Gabow), O(n^3). Vertices are 1-based internally; ids above n
// name blossoms. An edge with weight 0 is absent.
class WeightedBlossom {
 public:
  explicit WeightedBlossom(int n)
      : n_(n),
        cap_(2 * n + 1),
        g_(static_cast<size_t>(cap_) * cap_),
        lab_(cap_, 0),
        match_(cap_, 0),
        slack_(cap_, 0),
        st_(cap_, 0),
        pa_(cap_, 0),
        flower_from_(static_cast<size_t>(cap_) * (n + 1), 0),
        s_(cap_, 0),
        vis_(cap_, 0),
        flower_(cap_) {
    for (int u = 1; u <= n_; ++u) {
      for (int v = 1; v <= n_; ++v) edge(u, v) = {u, v, 0};
    }
  }

  void SetWeight(int u, int v, int32_t w) {
    edge(u, v).w = w;
    edge(v, u).w = w;
  }

  // Runs to completion; returns mate (1-based, 0 = unmatched).
  const std::vector<int>& Solve() {
    n_x_ = n_;
    for (int u = 0; u <= n_; ++u) {
      st_[u] = u;
      flower_[u].clear();
    }
    int64_t w_max = 0;
    for (int u = 1; u <= n_; ++u) {
      for (int v = 1; v <= n_; ++v) {
        from(u, v) = (u == v ? u : 0);
        w_max = std::max<int64_t>(w_max, edge(u, v).w);
      }
    }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (Augment()) {
    }
    return match_;
  }

 private:
  struct Edge {
    int32_t u, v, w;
  };

  Edge& edge(int u, int v) { return g_[static_cast<size_t>(u) * cap_ + v]; }
  int& from(int b, int x) { return flower_from_[static_cast<size_t>(b) * (n_ + 1) + x]; }

  int64_t Dist(const Edge& e) const {
    return lab_[e.u] + lab_[e.v] - int64_t{2} * e.w;
  }

  void UpdateSlack(int u, int x) {
    if (!slack_[x] || Dist(edge(u, x)) < Dist(edge(slack_[x], x))) slack_[x] = u;
  }

  void SetSlack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u) {
      if (edge(u, x).w > 0 && st_[u] != x && s_[st_[u]] == 0) UpdateSlack(u, x);
    }
  }

  void QueuePush(int x) {
    if (x <= n_) {
      queue_.push_back(x);
    } else {
      for (int y : flower_[x]) QueuePush(y);
    }
  }

  void SetSt(int x, int b) {
    st_[x] = b;
    if (x > n_) {
      for (int y : flower_[x]) SetSt(y, b);
    }
  }

  int GetPr(int b, int xr) {
    auto& f = flower_[b];
    const int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }

  void SetMatch(int u, int v) {
    match_[u] = edge(u, v).v;
    if (u > n_) {
      const Edge e = edge(u, v);
      const int xr = from(u, e.u);
      const int pr = GetPr(u, xr);
      for (int i = 0; i < pr; ++i) SetMatch(flower_[u][i], flower_[u][i ^ 1]);
      SetMatch(xr, v);
      std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }
  }

  void AugmentPath(int u, int v) {
    for (;;) {
      const int xnv = st_[match_[u]];
      SetMatch(u, v);
      if (!xnv) return;
      SetMatch(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int GetLca(int u, int v) {
    for (++stamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == stamp_) return u;
      vis_[u] = stamp_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }

  void AddBlossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[lca];
    auto& f = flower_[b];
    f.clear();
    f.push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      f.push_back(x);
      f.push_back(y = st_[match_[x]]);
      QueuePush(y);
    }
    std::reverse(f.begin() + 1, f.end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      f.push_back(x);
      f.push_back(y = st_[match_[x]]);
      QueuePush(y);
    }
    SetSt(b, b);
    for (int x = 1; x <= n_x_; ++x) {
      edge(b, x).w = 0;
      edge(x, b).w = 0;
    }
    for (int x = 1; x <= n_; ++x) from(b, x) = 0;
    for (int xs : flower_[b]) {
      for (int x = 1; x <= n_x_; ++x) {
        if (edge(b, x).w == 0 || Dist(edge(xs, x)) < Dist(edge(b, x))) {
          edge(b, x) = edge(xs, x);
          edge(x, b) = edge(x, xs);
        }
      }
      for (int x = 1; x <= n_; ++x) {
        if (from(xs, x)) from(b, x) = xs;
      }
    }
    SetSlack(b);
  }

  void ExpandBlossom(int b) {
    for (int x : flower_[b]) SetSt(x, x);
    const int xr = from(b, edge(b, pa_[b]).u);
    const int pr = GetPr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      const int xs = flower_[b][i];
      const int xns = flower_[b][i + 1];
      pa_[xs] = edge(xns, xs).u;
      s_[xs] = 1;
      s_[xns] = 0;
      slack_[xs] = 0;
      SetSlack(xns);
      QueuePush(xns);
    }
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    for (size_t i = pr + 1; i < flower_[b].size(); ++i) {
      const int xs = flower_[b][i];
      s_[xs] = -1;
      SetSlack(xs);
    }
    st_[b] = 0;
  }

  bool OnFoundEdge(const Edge& e) {
    const int u = st_[e.u];
    const int v = st_[e.v];
    if (s_[v] == -1) {
      pa_[v] = e.u;
      s_[v] = 1;
      const int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      s_[nu] = 0;
      QueuePush(nu);
    } else if (s_[v] == 0) {
      const int lca = GetLca(u, v);
      if (!lca) {
        AugmentPath(u, v);
        AugmentPath(v, u);
        return true;
      }
      AddBlossom(u, lca, v);
    }
    return false;
  }

  // One augmentation phase; false when no augmenting path remains.
  bool Augment() {
    std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    queue_.clear();
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        s_[x] = 0;
        QueuePush(x);
      }
    }
    if (queue_.empty()) return false;
    for (;;) {
      while (!queue_.empty()) {
        const int u = queue_.front();
        queue_.pop_front();
        if (s_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v) {
          if (edge(u, v).w > 0 && st_[u] != st_[v]) {
            if (Dist(edge(u, v)) == 0) {
              if (OnFoundEdge(edge(u, v))) return true;
            } else {
              UpdateSlack(u, st_[v]);
            }
          }
        }
      }
      int64_t d = std::numeric_limits<int64_t>::max();
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
      }
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[x] == x && slack_[x]) {
          if (s_[x] == -1) {
            d = std::min(d, Dist(edge(slack_[x], x)));
          } else if (s_[x] == 0) {
            d = std::min(d, Dist(edge(slack_[x], x)) / 2);
          }
        }
      }
      for (int u = 1; u <= n_; ++u) {
        if (s_[st_[u]] == 0) {
          if (lab_[u] <= d) return false;
          lab_[u] -= d;
        } else if (s_[st_[u]] == 1) {
          lab_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b) {
          if (s_[st_[b]] == 0) {
            lab_[b] += d * 2;
          } else if (s_[st_[b]] == 1) {
            lab_[b] -= d * 2;
          }
        }
      }
      queue_.clear();
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
            Dist(edge(slack_[x], x)) == 0) {
          if (OnFoundEdge(edge(slack_[x], x))) return true;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) ExpandBlossom(b);
      }
    }
  }

  int n_;
  int cap_;
  int n_x_ = 0;
  int stamp_ = 0;
  std::vector<Edge> g_;
  std::vector<int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_;
  std::vector<int> flower_from_;
  std::vector<int> s_, vis_;
  std::vector<std::vector<int>> flower_;
  std::deque<int> queue_;
};

}  // namespace

std::optional<std::vector<int>> MinCostPerfectMatching(const EdgeCostMatrix& costs) {
  const int n = costs.size();
  if (n % 2 == 1) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  // Max-weight matching with weight big - cost. With big above
  // (n/2) * max_cost any larger matching outweighs every smaller one, so the
  // optimum is a perfect matching whenever one exists, and among perfect
  // matchings it minimizes total cost.
  int64_t max_cost = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (costs.has_edge(u, v)) max_cost = std::max(max_cost, costs.at(u, v));
    }
  }
  const int64_t big = static_cast<int64_t>(n / 2) * max_cost + 1;
  // Dual values stay within a small multiple of big; the edge table is int32.
  if (big > std::numeric_limits<int32_t>::max() / 8) {
    throw Error(ErrorCode::kTooLarge,
                "matching weights exceed the supported range (n=" +
                    std::to_string(n) + ")");
  }
  WeightedBlossom solver(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (costs.has_edge(u, v)) {
        solver.SetWeight(u + 1, v + 1, static_cast<int32_t>(big - costs.at(u, v)));
      }
    }
  }
  const auto& mate = solver.Solve();
  std::vector<int> out(n);
  for (int u = 0; u < n; ++u) {
    if (mate[u + 1] == 0) return std::nullopt;
    out[u] = mate[u + 1] - 1;
  }
  return out;
}

std::vector<int> MinCostAssignment(const std::vector<std::vector<int64_t>>& cost) {
  const int n = static_cast<int>(cost.size());
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument, "assignment matrix must be square");
    }
  }
  constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
  // 1-based potentials; column 0 is the virtual start.
  std::vector<int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<int64_t> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      int64_t delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n);
  for (int j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace fair_cc
