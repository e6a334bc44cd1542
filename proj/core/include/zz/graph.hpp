#pragma once

#include "zz/moduli.hpp"

#include <string>
#include <vector>

namespace zz {

// A finite explored window of the fibration graph: vertices are pair classes
// (pairwise non-isomorphic), arrows are reversion equivalence classes. Each
// arrow stands for itself and its inverse; at most one arrow per unordered
// vertex pair and at most one loop per vertex.
struct FibrationGraph {
  struct Vertex {
    PairRepr repr;
    CaseTag case_tag{};
    int depth = 0;
    bool frontier = false; // discovered at the depth limit, not expanded
  };
  struct Arrow {
    int src = 0, dst = 0;
    Rational center; // first-discovery center
  };
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;
  std::vector<int> frontier() const;
};

// BFS window: every vertex below the depth limit is expanded with every
// center, targets deduped by pairs_isomorphic. Deterministic in input order.
FibrationGraph build_graph(const PairRepr& seed, const std::vector<Rational>& centers, int depth);

// E - V + C, counting each arrow/inverse pair once.
int cycle_rank(const FibrationGraph& g);

enum class TypeIIIShape { SelfLoop, TwoVertexEdge };
// Pre: seed is case III. Self-loop iff [P,Q] ~ [Q,P] (t = 0 scale rule).
TypeIIIShape classify_type_iii(const PairRepr& seed);

std::string graph_dot(const FibrationGraph& g);
std::string graph_json(const FibrationGraph& g);
std::string graph_text(const FibrationGraph& g);

} // namespace zz
