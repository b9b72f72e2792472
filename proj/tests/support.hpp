// Copyright 2026 The Authors.
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

// Shared fixtures, random instance builders and definition-level
// evaluators for the tests. Nothing here calls into the solver code.

#ifndef ARBBLOCK_TESTS_SUPPORT_HPP_
#define ARBBLOCK_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "arbblock/graph.hpp"
#include "arbblock/laminar.hpp"

namespace arbblock::testing {

// I1: r=0, a=1, b=2; e0 r->a, e1 r->b, e2 a->b, e3 b->a.
inline Digraph I1() {
  return Digraph(3, {{0, 0, 1}, {1, 0, 2}, {2, 1, 2}, {3, 2, 1}});
}
// I2: e0 r->a, e1 a->b, e2 b->a.
inline Digraph I2() { return Digraph(3, {{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}); }
// I3: path a->b->c.
inline Digraph I3() { return Digraph(3, {{0, 0, 1}, {1, 1, 2}}); }
// I5 arcs with costs 1, 5, 1, 1: r->a, r->b, a->b, b->a.
inline Digraph I5() {
  return Digraph(3, {{0, 0, 1}, {1, 0, 2}, {2, 1, 2}, {3, 2, 1}});
}
inline ArcAttribute I5Costs() { return ArcAttribute({1, 5, 1, 1}); }
inline Digraph Cycle3() { return Digraph(3, {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}}); }

inline ArcAttribute Unit(const Digraph& g) {
  ArcId top = 0;
  for (const Arc& a : g.arcs()) top = std::max(top, a.id + 1);
  return ArcAttribute::Uniform(static_cast<std::size_t>(top), 1);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool Coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Random loop-free multigraph with ids 0..m-1.
inline Digraph RandomGraph(Rng& rng, int n, int m) {
  std::vector<Arc> arcs;
  if (n < 2) return Digraph(n, {});
  for (int i = 0; i < m; ++i) {
    int tail = static_cast<int>(rng.Uniform(0, n - 1));
    int head = static_cast<int>(rng.Uniform(0, n - 2));
    if (head >= tail) ++head;
    arcs.push_back({i, tail, head});
  }
  return Digraph(n, std::move(arcs));
}

inline ArcAttribute RandomAttribute(Rng& rng, std::size_t m, std::int64_t lo,
                                    std::int64_t hi) {
  std::vector<std::int64_t> v(m);
  for (auto& x : v) x = rng.Uniform(lo, hi);
  return ArcAttribute(std::move(v));
}

inline NodeSet RandomNonEmptySubset(Rng& rng, int n) {
  NodeSet s;
  while (s.empty()) {
    for (int v = 0; v < n; ++v) {
      if (rng.Coin()) s.push_back(v);
    }
  }
  return s;
}

inline bool Crosses(const NodeSet& a, const NodeSet& b) {
  bool ab = false, a_only = false, b_only = false;
  for (NodeId v : a) {
    (std::binary_search(b.begin(), b.end(), v) ? ab : a_only) = true;
  }
  for (NodeId v : b) {
    if (!std::binary_search(a.begin(), a.end(), v)) b_only = true;
  }
  return ab && a_only && b_only;
}

// Up to `max_sets` random pairwise laminar sets.
inline std::vector<NodeSet> RandomLaminarSets(Rng& rng, int n, int max_sets) {
  std::vector<NodeSet> sets;
  int wanted = static_cast<int>(rng.Uniform(0, max_sets));
  for (int attempt = 0; attempt < 50 && static_cast<int>(sets.size()) < wanted;
       ++attempt) {
    NodeSet s = RandomNonEmptySubset(rng, n);
    bool ok = std::none_of(sets.begin(), sets.end(), [&](const NodeSet& t) {
      return t == s || Crosses(t, s);
    });
    if (ok) sets.push_back(std::move(s));
  }
  return sets;
}

inline bool In(const NodeSet& s, NodeId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline NodeSet FromMask(std::uint32_t mask, int n) {
  NodeSet s;
  for (int v = 0; v < n; ++v) {
    if (mask & (1u << v)) s.push_back(v);
  }
  return s;
}

// In-weight of Z, straight from the definition.
inline Weight Rho(const Digraph& g, const ArcAttribute& w, const NodeSet& z) {
  Weight total = 0;
  for (const Arc& a : g.arcs()) {
    if (In(z, a.head) && !In(z, a.tail)) total += w[a.id];
  }
  return total;
}

// f(Z): in-weight of Z minus arcs leaving a member that meets Z.
inline Weight FDirect(const Digraph& g, const std::vector<NodeSet>& sets,
                      const ArcAttribute& w, const NodeSet& z) {
  Weight total = 0;
  for (const Arc& a : g.arcs()) {
    if (!In(z, a.head) || In(z, a.tail)) continue;
    bool excluded = false;
    for (const NodeSet& f : sets) {
      bool meets = std::any_of(z.begin(), z.end(),
                               [&](NodeId v) { return In(f, v); });
      if (meets && In(f, a.tail) && !In(f, a.head)) excluded = true;
    }
    if (!excluded) total += w[a.id];
  }
  return total;
}

// D[F] built by hand with original arc ids, and the members inside F,
// both on local ids 0..|F|-1.
struct LocalPiece {
  Digraph graph;
  std::vector<NodeSet> sets;
};

inline LocalPiece Localize(const Digraph& g, const std::vector<NodeSet>& sets,
                           const NodeSet& f) {
  std::vector<int> local(g.node_count(), -1);
  for (std::size_t i = 0; i < f.size(); ++i) local[f[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (local[a.tail] >= 0 && local[a.head] >= 0) {
      arcs.push_back({a.id, local[a.tail], local[a.head]});
    }
  }
  LocalPiece piece{Digraph(static_cast<int>(f.size()), std::move(arcs)), {}};
  for (const NodeSet& s : sets) {
    if (!std::all_of(s.begin(), s.end(), [&](NodeId v) { return In(f, v); })) {
      continue;
    }
    NodeSet t;
    for (NodeId v : s) t.push_back(local[v]);
    std::sort(t.begin(), t.end());
    piece.sets.push_back(std::move(t));
  }
  return piece;
}

// min over F in sets + {V} and disjoint non-empty Z1, Z2 within F of
// f_{D[F]}(Z1) + f_{D[F]}(Z2); kInfiniteWeight if every member is a
// singleton.
inline Weight MinMinBrute(const Digraph& g, std::vector<NodeSet> sets,
                          const ArcAttribute& w) {
  NodeSet all;
  for (int v = 0; v < g.node_count(); ++v) all.push_back(v);
  if (std::find(sets.begin(), sets.end(), all) == sets.end()) {
    sets.push_back(all);
  }
  Weight best = kInfiniteWeight;
  for (const NodeSet& f : sets) {
    if (f.size() < 2) continue;
    LocalPiece piece = Localize(g, sets, f);
    const int k = static_cast<int>(f.size());
    std::vector<Weight> fv(1u << k, 0);
    for (std::uint32_t m = 1; m < (1u << k); ++m) {
      fv[m] = FDirect(piece.graph, piece.sets, w, FromMask(m, k));
    }
    for (std::uint32_t m1 = 1; m1 < (1u << k); ++m1) {
      std::uint32_t rest = ((1u << k) - 1) & ~m1;
      for (std::uint32_t m2 = rest; m2 != 0; m2 = (m2 - 1) & rest) {
        best = std::min(best, fv[m1] + fv[m2]);
      }
    }
  }
  return best;
}

}  // namespace arbblock::testing

#endif  // ARBBLOCK_TESTS_SUPPORT_HPP_
