#pragma once

#include "zz/pair.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zz {

// One curve (or one chain of (-2)-curves, for blocks) in the dual graph.
struct GraphNode {
  std::string name;  // "F", "C", "E1", "E2", "A0..", "B0..", "D0..", "calA1", ...
  int weight = 0;    // self-intersection; for blocks: -2 (each component)
  bool is_block = false;
  int block_len = 0; // number of (-2)-components; >= 1 when is_block
  int orbit = 1;     // geometric components represented (root packet size)
  int multiplicity = 1; // root multiplicity backing this node (A/B nodes)
  std::optional<Rational> root; // the rational root, when the packet is one
};

struct DualGraph {
  CaseTag case_tag{};
  std::vector<GraphNode> nodes;
  std::vector<std::pair<int, int>> edges; // indices into nodes
};

// Figure-shaped dual graph of the boundary + degenerate-fiber curves.
DualGraph dual_graph(const PairRepr& r);

// dual_graph plus the section curves D_0..D_l attached to F; the D_0
// attachment depends on the situation of (r, lambda).
DualGraph section_augmented_graph(const PairRepr& r, const Rational& lambda);

std::string dual_graph_dot(const DualGraph& g);
std::string dual_graph_json(const DualGraph& g); // serialized JSON object
std::string dual_graph_text(const DualGraph& g);

struct SingularityEntry {
  std::string component; // "A1", "B2", ... or "B0>E3>A0" for the case-III chain
  std::string kind;      // "cyclic" | "chain"
  int order = 0;         // cyclic-quotient order (kind == "cyclic")
  int count = 1;         // conjugate singular points represented
  std::vector<int> chain_lengths; // kind == "chain": (s0-1, 1, r0-1)
};

struct SurfaceReport {
  CaseTag case_tag{};
  ZigzagType boundary_type;
  struct Component {
    std::string name;
    int multiplicity = 1;
    int orbit = 1;
  };
  std::vector<Component> fiber_components; // degenerate-fiber multiplicities
  std::vector<SingularityEntry> singularities;
  bool smooth = false;
};

SurfaceReport surface_report(const PairRepr& r);
std::string surface_report_json(const SurfaceReport& s);
std::string surface_report_text(const SurfaceReport& s);

} // namespace zz
