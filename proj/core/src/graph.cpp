#include "zz/graph.hpp"

#include "zz/errors.hpp"

#include "json_detail.hpp"

#include <numeric>
#include <sstream>

namespace zz {

std::vector<int> FibrationGraph::frontier() const {
    std::vector<int> out;
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].frontier) out.push_back(static_cast<int>(i));
    return out;
}

FibrationGraph build_graph(const PairRepr& seed, const std::vector<Rational>& centers,
                           int depth) {
    if (depth < 0) throw domain_error("build_graph: negative depth");
    if (centers.empty()) throw domain_error("build_graph: empty center list");
    FibrationGraph g;
    g.vertices.push_back({seed, classify_case(seed), 0, depth == 0});

    auto has_arrow = [&g](int u, int v) {
        for (const auto& a : g.arrows)
            if ((a.src == u && a.dst == v) || (a.src == v && a.dst == u)) return true;
        return false;
    };

    for (size_t idx = 0; idx < g.vertices.size(); ++idx) {
        if (g.vertices[idx].depth >= depth) continue; // frontier, not expanded
        for (const auto& lambda : centers) {
            PairRepr target = reversion_target(g.vertices[idx].repr, lambda);
            int t = -1;
            for (size_t j = 0; j < g.vertices.size(); ++j)
                if (pairs_isomorphic(g.vertices[j].repr, target)) {
                    t = static_cast<int>(j);
                    break;
                }
            if (t < 0) {
                int d = g.vertices[idx].depth + 1;
                g.vertices.push_back({target, classify_case(target), d, d == depth});
                t = static_cast<int>(g.vertices.size()) - 1;
            }
            int s = static_cast<int>(idx);
            if (!has_arrow(s, t)) g.arrows.push_back({s, t, lambda});
        }
    }
    return g;
}

int cycle_rank(const FibrationGraph& g) {
    std::vector<int> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : g.arrows) parent[find(a.src)] = find(a.dst);
    int components = 0;
    for (size_t i = 0; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
    return static_cast<int>(g.arrows.size()) - static_cast<int>(g.vertices.size()) + components;
}

TypeIIIShape classify_type_iii(const PairRepr& seed) {
    if (classify_case(seed) != CaseTag::III)
        throw domain_error("classify_type_iii: seed is not case III");
    PairRepr reversed = PairRepr::make(seed.Q, seed.P);
    return pairs_isomorphic(seed, reversed) ? TypeIIIShape::SelfLoop
                                            : TypeIIIShape::TwoVertexEdge;
}

namespace {

std::string coeff_list(const Poly& p) {
    std::string s = "[";
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += rat_text(c[i]);
    }
    return s + "]";
}

std::string vertex_label(const FibrationGraph::Vertex& v) {
    return std::string(case_name(v.case_tag)) + " P=" + coeff_list(v.repr.P) +
           " Q=" + coeff_list(v.repr.Q);
}

} // namespace

std::string graph_dot(const FibrationGraph& g) {
    std::ostringstream os;
    os << "digraph fibrations {\n";
    os << "  edge [dir=none];\n";
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << vertex_label(g.vertices[i]) << "\"";
        if (g.vertices[i].frontier) os << " style=dashed";
        os << "];\n";
    }
    for (const auto& a : g.arrows)
        os << "  v" << a.src << " -> v" << a.dst << " [label=\"" << rat_text(a.center)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string graph_json(const FibrationGraph& g) {
    detail::ojson j;
    j["vertices"] = detail::ojson::array();
    for (const auto& v : g.vertices) {
        detail::ojson vj;
        vj["P"] = detail::poly_to_json(v.repr.P);
        vj["Q"] = detail::poly_to_json(v.repr.Q);
        vj["case"] = case_name(v.case_tag);
        j["vertices"].push_back(std::move(vj));
    }
    j["arrows"] = detail::ojson::array();
    for (const auto& a : g.arrows) {
        detail::ojson aj;
        aj["src"] = a.src;
        aj["dst"] = a.dst;
        aj["center"] = rat_json(a.center);
        j["arrows"].push_back(std::move(aj));
    }
    j["frontier"] = g.frontier();
    return j.dump(2);
}

std::string graph_text(const FibrationGraph& g) {
    std::ostringstream os;
    os << g.vertices.size() << " vertices, " << g.arrows.size() << " arrows, cycle rank "
       << cycle_rank(g) << "\n";
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        os << "  v" << i << ": " << vertex_label(g.vertices[i]);
        if (g.vertices[i].frontier) os << " (frontier)";
        os << "\n";
    }
    for (const auto& a : g.arrows)
        os << "  v" << a.src << " -- v" << a.dst << " (center " << rat_text(a.center) << ")\n";
    return os.str();
}

} // namespace zz
