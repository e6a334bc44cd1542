#include "zz/dual_graph.hpp"

#include "zz/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace zz {

namespace {

using ojson = nlohmann::ordered_json;

struct RootPacket {
    std::optional<Rational> root; // nullopt: packet of conjugate non-rational roots
    int multiplicity = 1;
    int orbit = 1;
};

// Rational roots individually (ascending), then non-rational roots grouped by
// multiplicity class (ascending). Orbit counts conjugate roots per packet.
std::vector<RootPacket> root_packets(const Poly& p, bool exclude_zero) {
    std::vector<RootPacket> out;
    auto rr = rational_roots(p);
    Poly residual = p;
    for (const auto& [r, m] : rr) {
        Poly factor(std::vector<Rational>{-r, Rational(1)});
        for (int i = 0; i < m; ++i) residual = *divide_exact(residual, factor);
        if (exclude_zero && r == 0) continue;
        out.push_back({r, m, 1});
    }
    if (residual.degree() >= 1)
        for (const auto& e : multiplicity_profile(residual))
            out.push_back({std::nullopt, e.multiplicity, e.count});
    return out;
}

int add_node(DualGraph& g, GraphNode n) {
    g.nodes.push_back(std::move(n));
    return static_cast<int>(g.nodes.size()) - 1;
}

// Appends node `name` plus its (-2)-block (when multiplicity >= 2) and wires
// both to `anchor`. Returns the index of the chain's outer end.
int attach_with_block(DualGraph& g, int anchor, const std::string& name, int weight,
                      const std::string& block_name, const RootPacket& pk) {
    int node = add_node(g, {name, weight, false, 0, pk.orbit, pk.multiplicity, pk.root});
    g.edges.push_back({anchor, node});
    if (pk.multiplicity >= 2) {
        int block = add_node(g, {block_name, -2, true, pk.multiplicity - 1, pk.orbit,
                                 pk.multiplicity, pk.root});
        g.edges.push_back({node, block});
        return block;
    }
    return node;
}

} // namespace

DualGraph dual_graph(const PairRepr& r) {
    const CaseTag tag = classify_case(r);
    const int a = r.P.degree() + 1;
    const int b = r.Q.degree() + 1;

    DualGraph g;
    g.case_tag = tag;
    add_node(g, {"F", 0, false, 0, 1, 1, std::nullopt});
    add_node(g, {"C", -1, false, 0, 1, 1, std::nullopt});
    add_node(g, {"E1", -a, false, 0, 1, 1, std::nullopt});
    add_node(g, {"E2", -b, false, 0, 1, 1, std::nullopt});
    g.edges = {{0, 1}, {1, 2}, {2, 3}};
    const int e1 = 2, e2 = 3;

    if (tag == CaseTag::II) {
        int r0 = r.P.vanishing_order();
        RootPacket zero{Rational(0), r0, 1};
        attach_with_block(g, e2, "A0", -2, "calA0", zero);
    } else if (tag == CaseTag::III) {
        int r0 = r.P.vanishing_order();
        int s0 = r.Q.vanishing_order();
        RootPacket zq{Rational(0), s0, 1};
        int end = attach_with_block(g, e2, "B0", -1, "calB0", zq);
        RootPacket zp{Rational(0), r0, 1};
        int a0 = add_node(g, {"A0", -3, false, 0, 1, r0, Rational(0)});
        g.edges.push_back({end, a0});
        if (r0 >= 2) {
            int block = add_node(g, {"calA0", -2, true, r0 - 1, 1, r0, Rational(0)});
            g.edges.push_back({a0, block});
        }
    }

    bool exclude_zero = tag != CaseTag::I;
    int i = 0;
    for (const auto& pk : root_packets(r.P, exclude_zero)) {
        ++i;
        attach_with_block(g, e1, "A" + std::to_string(i), -1, "calA" + std::to_string(i), pk);
    }
    int j = 0;
    for (const auto& pk : root_packets(r.Q, tag == CaseTag::III)) {
        ++j;
        attach_with_block(g, e2, "B" + std::to_string(j), -1, "calB" + std::to_string(j), pk);
    }
    return g;
}

namespace {

int find_node(const DualGraph& g, const std::string& name) {
    for (size_t i = 0; i < g.nodes.size(); ++i)
        if (g.nodes[i].name == name) return static_cast<int>(i);
    return -1;
}

// Index of the outer chain end hanging off `name`: its block if present.
int chain_end(const DualGraph& g, const std::string& name, const std::string& block_name) {
    int block = find_node(g, block_name);
    if (block >= 0) return block;
    int node = find_node(g, name);
    if (node < 0) throw domain_error("section_augmented_graph: missing node " + name);
    return node;
}

} // namespace

DualGraph section_augmented_graph(const PairRepr& r, const Rational& lambda) {
    DualGraph g = dual_graph(r);
    const int f = 0, e2 = 3;
    const Situation sit = classify_situation(r, lambda);

    int d0;
    switch (sit) {
    case Situation::Ia:
        d0 = add_node(g, {"D0", 0, false, 0, 1, 1, std::nullopt});
        g.edges.push_back({f, d0});
        g.edges.push_back({e2, d0});
        break;
    case Situation::Ib: {
        // lambda is a root of Q, so a rational B-node carries it.
        int target = -1;
        for (size_t k = 0; k < g.nodes.size(); ++k) {
            const auto& n = g.nodes[k];
            if (n.name.rfind("B", 0) == 0 && !n.is_block && n.root && *n.root == lambda) {
                target = static_cast<int>(k);
                break;
            }
        }
        if (target < 0) throw domain_error("section_augmented_graph: no B-node for lambda");
        const std::string bname = g.nodes[static_cast<size_t>(target)].name;
        int end = chain_end(g, bname, "cal" + bname);
        d0 = add_node(g, {"D0", -1, false, 0, 1, 1, std::nullopt});
        g.edges.push_back({f, d0});
        g.edges.push_back({end, d0});
        break;
    }
    case Situation::II:
    case Situation::III: {
        int end = chain_end(g, "A0", "calA0");
        d0 = add_node(g, {"D0", 0, false, 0, 1, 1, std::nullopt});
        g.edges.push_back({f, d0});
        g.edges.push_back({end, d0});
        break;
    }
    }

    // D_i mirrors A_i: a disjoint section through each root packet of P.
    int i = 0;
    while (true) {
        ++i;
        std::string aname = "A" + std::to_string(i);
        int anode = find_node(g, aname);
        if (anode < 0) break;
        int end = chain_end(g, aname, "cal" + aname);
        int di = add_node(g, {"D" + std::to_string(i), 0, false, 0,
                              g.nodes[static_cast<size_t>(anode)].orbit, 1, std::nullopt});
        g.edges.push_back({f, di});
        g.edges.push_back({end, di});
    }
    return g;
}

std::string dual_graph_dot(const DualGraph& g) {
    std::ostringstream os;
    os << "graph dual {\n";
    for (const auto& n : g.nodes) {
        os << "  " << n.name << " [label=\"" << n.name;
        if (n.is_block)
            os << "[" << n.block_len << "]";
        else
            os << ":" << n.weight;
        os << "\"";
        if (n.is_block) os << ", shape=box";
        os << "];\n";
    }
    for (const auto& [u, v] : g.edges)
        os << "  " << g.nodes[static_cast<size_t>(u)].name << " -- "
           << g.nodes[static_cast<size_t>(v)].name << ";\n";
    os << "}\n";
    return os.str();
}

std::string dual_graph_json(const DualGraph& g) {
    ojson j;
    j["case"] = case_name(g.case_tag);
    j["nodes"] = ojson::array();
    for (const auto& n : g.nodes) {
        ojson nd;
        nd["name"] = n.name;
        nd["weight"] = n.weight;
        if (n.is_block) nd["block_len"] = n.block_len;
        nd["orbit"] = n.orbit;
        nd["multiplicity"] = n.multiplicity;
        if (n.root) nd["root"] = rat_json(*n.root);
        j["nodes"].push_back(std::move(nd));
    }
    j["edges"] = ojson::array();
    for (const auto& [u, v] : g.edges) j["edges"].push_back(ojson::array({u, v}));
    return j.dump(2);
}

std::string dual_graph_text(const DualGraph& g) {
    std::ostringstream os;
    os << "case " << case_name(g.case_tag) << "\n";
    for (const auto& n : g.nodes) {
        os << "  " << n.name;
        if (n.is_block)
            os << " block[" << n.block_len << "]";
        else
            os << " (" << n.weight << ")";
        if (n.root) os << " root=" << rat_text(*n.root);
        if (!n.is_block && n.multiplicity > 1) os << " mult=" << n.multiplicity;
        if (n.orbit > 1) os << " orbit=" << n.orbit;
        os << "\n";
    }
    os << "edges:";
    for (const auto& [u, v] : g.edges)
        os << " " << g.nodes[static_cast<size_t>(u)].name << "-"
           << g.nodes[static_cast<size_t>(v)].name;
    os << "\n";
    return os.str();
}

SurfaceReport surface_report(const PairRepr& r) {
    SurfaceReport rep;
    rep.case_tag = classify_case(r);
    rep.boundary_type = type_of(r);

    const int r0 = rep.case_tag == CaseTag::I ? 0 : r.P.vanishing_order();
    const int s0 = rep.case_tag == CaseTag::III ? r.Q.vanishing_order() : 0;

    auto p_packets = root_packets(r.P, rep.case_tag != CaseTag::I);
    auto q_packets = root_packets(r.Q, rep.case_tag == CaseTag::III);

    // Fiber components in dual-graph node order.
    if (rep.case_tag == CaseTag::II)
        rep.fiber_components.push_back({"A0", r0, 1});
    if (rep.case_tag == CaseTag::III)
        rep.fiber_components.push_back({"B0", (s0 + 1) * (r0 + 1) - 1, 1});
    int i = 0;
    for (const auto& pk : p_packets) {
        ++i;
        rep.fiber_components.push_back({"A" + std::to_string(i), pk.multiplicity, pk.orbit});
    }
    int j = 0;
    for (const auto& pk : q_packets) {
        ++j;
        int mult = rep.case_tag == CaseTag::I ? pk.multiplicity : (r0 + 1) * pk.multiplicity;
        rep.fiber_components.push_back({"B" + std::to_string(j), mult, pk.orbit});
    }

    // Singularities: the case-III chain first, then cyclic points from
    // multiple roots in component order.
    if (rep.case_tag == CaseTag::III) {
        SingularityEntry chain;
        chain.component = "B0>E3>A0";
        chain.kind = "chain";
        chain.order = 0;
        chain.count = 1;
        chain.chain_lengths = {s0 - 1, 1, r0 - 1};
        rep.singularities.push_back(std::move(chain));
    }
    if (rep.case_tag == CaseTag::II && r0 >= 2)
        rep.singularities.push_back({"A0", "cyclic", r0, 1, {}});
    i = 0;
    for (const auto& pk : p_packets) {
        ++i;
        if (pk.multiplicity >= 2)
            rep.singularities.push_back(
                {"A" + std::to_string(i), "cyclic", pk.multiplicity, pk.orbit, {}});
    }
    j = 0;
    for (const auto& pk : q_packets) {
        ++j;
        if (pk.multiplicity >= 2)
            rep.singularities.push_back(
                {"B" + std::to_string(j), "cyclic", pk.multiplicity, pk.orbit, {}});
    }

    Poly wp = Poly::variable() * r.P;
    rep.smooth = rep.case_tag != CaseTag::III && squarefree_decomposition(wp).size() <= 1 &&
                 squarefree_decomposition(r.Q).size() <= 1;
    return rep;
}

std::string surface_report_json(const SurfaceReport& s) {
    ojson j;
    j["case"] = case_name(s.case_tag);
    j["boundary_type"] = s.boundary_type;
    j["fiber_components"] = ojson::array();
    for (const auto& c : s.fiber_components) {
        ojson cj;
        cj["name"] = c.name;
        cj["multiplicity"] = c.multiplicity;
        cj["orbit"] = c.orbit;
        j["fiber_components"].push_back(std::move(cj));
    }
    j["singularities"] = ojson::array();
    for (const auto& e : s.singularities) {
        ojson ej;
        ej["component"] = e.component;
        ej["kind"] = e.kind;
        if (e.kind == "cyclic") {
            ej["order"] = e.order;
            ej["count"] = e.count;
        } else {
            ej["chain_lengths"] = e.chain_lengths;
        }
        j["singularities"].push_back(std::move(ej));
    }
    j["smooth"] = s.smooth;
    return j.dump(2);
}

std::string surface_report_text(const SurfaceReport& s) {
    std::ostringstream os;
    os << "case " << case_name(s.case_tag) << ", boundary (";
    for (size_t i = 0; i < s.boundary_type.size(); ++i) {
        if (i) os << ",";
        os << s.boundary_type[i];
    }
    os << ")\n";
    os << "fiber components:\n";
    for (const auto& c : s.fiber_components) {
        os << "  " << c.name << " multiplicity " << c.multiplicity;
        if (c.orbit > 1) os << " (x" << c.orbit << ")";
        os << "\n";
    }
    if (s.singularities.empty()) {
        os << "singularities: none\n";
    } else {
        os << "singularities:\n";
        for (const auto& e : s.singularities) {
            os << "  " << e.component << " " << e.kind;
            if (e.kind == "cyclic") {
                os << " order " << e.order;
                if (e.count > 1) os << " (x" << e.count << ")";
            } else {
                os << " lengths (";
                for (size_t i = 0; i < e.chain_lengths.size(); ++i) {
                    if (i) os << ",";
                    os << e.chain_lengths[i];
                }
                os << ")";
            }
            os << "\n";
        }
    }
    os << "smooth: " << (s.smooth ? "true" : "false") << "\n";
    return os.str();
}

} // namespace zz
