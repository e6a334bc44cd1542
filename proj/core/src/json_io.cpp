#include "zz/json_io.hpp"

#include "zz/errors.hpp"

#include "json_detail.hpp"

#include <sstream>

namespace zz {

namespace {

using detail::ojson;

ojson parse_or_throw(const std::string& text, const char* what) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) throw domain_error(std::string(what) + ": malformed JSON");
    return j;
}

Rational rat_or_throw(const ojson& j, const char* what) {
    if (!j.is_string()) throw domain_error(std::string(what) + ": rational must be a string");
    auto r = rat_parse(j.get<std::string>());
    if (!r) throw domain_error(std::string(what) + ": bad rational '" + j.get<std::string>() + "'");
    return *r;
}

Poly poly_from(const ojson& j, const char* what) {
    if (!j.is_array()) throw domain_error(std::string(what) + ": expected coefficient array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(rat_or_throw(c, what));
    return Poly(std::move(coeffs));
}

PairRepr pair_from(const ojson& j, const char* what) {
    if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
        throw domain_error(std::string(what) + ": expected {\"P\": [...], \"Q\": [...]}");
    return PairRepr::make(poly_from(j["P"], what), poly_from(j["Q"], what));
}

ojson letter_to_json(const Letter& l) {
    ojson j;
    switch (l.kind) {
    case Letter::Kind::Aut:
        j["kind"] = "aut";
        j["a"] = rat_json(l.a);
        j["b"] = rat_json(l.b);
        j["c"] = rat_json(l.c);
        break;
    case Letter::Kind::Fibered:
        j["kind"] = "fib";
        j["a"] = rat_json(l.a);
        j["c"] = rat_json(l.c);
        j["R"] = detail::poly_to_json(l.R);
        break;
    case Letter::Kind::Reversion:
        j["kind"] = "rev";
        if (l.unresolved) {
            j["unresolved"] = true;
            j["target"] = detail::pair_to_json(l.target);
        } else {
            j["center"] = rat_json(l.center);
            if (l.inverted) j["inverted"] = true;
        }
        break;
    }
    return j;
}

// Rebuild the target of an inverted reversion letter from its source:
// source = reversion_target(target, center) inverts to
// target = (source.Q, source.P(w - center)) when source.Q(0) != 0 and to
// (source.Q, source.P) otherwise.
PairRepr inverted_reversion_target(const PairRepr& source, const Rational& center) {
    if (source.Q(Rational(0)) != 0)
        return PairRepr::make(source.Q, source.P.shifted_arg(-center));
    return PairRepr::make(source.Q, source.P);
}

Letter letter_from(const ojson& j, const PairRepr& anchor) {
    if (!j.is_object() || !j.contains("kind"))
        throw domain_error("word JSON: letter lacks \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "aut") {
        return make_aut(anchor, rat_or_throw(j.at("a"), "aut letter"),
                        rat_or_throw(j.at("b"), "aut letter"),
                        rat_or_throw(j.at("c"), "aut letter"));
    }
    if (kind == "fib") {
        return make_fibered(anchor, rat_or_throw(j.at("a"), "fib letter"),
                            rat_or_throw(j.at("c"), "fib letter"),
                            poly_from(j.at("R"), "fib letter"));
    }
    if (kind == "rev") {
        if (j.value("unresolved", false)) {
            Letter l;
            l.kind = Letter::Kind::Reversion;
            l.source = anchor;
            l.target = pair_from(j.at("target"), "unresolved letter");
            l.unresolved = true;
            return l;
        }
        Rational center = rat_or_throw(j.at("center"), "rev letter");
        if (j.value("inverted", false)) {
            Letter l;
            l.kind = Letter::Kind::Reversion;
            l.source = anchor;
            l.target = inverted_reversion_target(anchor, center);
            l.center = center;
            l.inverted = true;
            return l;
        }
        return make_reversion(anchor, center);
    }
    throw domain_error("word JSON: unknown letter kind '" + kind + "'");
}

std::string zigzag_text(const ZigzagType& z) {
    std::string s = "(";
    for (size_t i = 0; i < z.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(z[i]);
    }
    return s + ")";
}

} // namespace

std::string poly_json(const Poly& p) { return detail::poly_to_json(p).dump(2); }

Poly poly_from_json(const std::string& text) {
    return poly_from(parse_or_throw(text, "poly JSON"), "poly JSON");
}

std::string pair_json(const PairRepr& r) { return detail::pair_to_json(r).dump(2); }

PairRepr pair_from_json(const std::string& text) {
    return pair_from(parse_or_throw(text, "pair JSON"), "pair JSON");
}

std::string word_json(const BirWord& w) {
    ojson j;
    j["base"] = detail::pair_to_json(w.base);
    j["letters"] = ojson::array();
    for (const auto& l : w.letters) j["letters"].push_back(letter_to_json(l));
    return j.dump(2);
}

BirWord word_from_json(const std::string& text) {
    ojson j = parse_or_throw(text, "word JSON");
    if (!j.is_object() || !j.contains("base") || !j.contains("letters"))
        throw domain_error("word JSON: expected {\"base\": ..., \"letters\": [...]}");
    PairRepr base = pair_from(j["base"], "word base");
    std::vector<Letter> letters;
    PairRepr anchor = base;
    for (const auto& lj : j["letters"]) {
        Letter l = letter_from(lj, anchor);
        anchor = l.target;
        letters.push_back(std::move(l));
    }
    return make_word(std::move(base), std::move(letters));
}

FibrationGraph graph_from_json(const std::string& text) {
    ojson j = parse_or_throw(text, "graph JSON");
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw domain_error("graph JSON: expected {\"vertices\": ..., \"arrows\": ...}");
    FibrationGraph g;
    for (const auto& vj : j["vertices"]) {
        PairRepr r = pair_from(vj, "graph vertex");
        g.vertices.push_back({r, classify_case(r), 0, false});
    }
    int n = static_cast<int>(g.vertices.size());
    for (const auto& aj : j["arrows"]) {
        int src = aj.at("src").get<int>();
        int dst = aj.at("dst").get<int>();
        if (src < 0 || src >= n || dst < 0 || dst >= n)
            throw domain_error("graph JSON: arrow endpoint out of range");
        g.arrows.push_back({src, dst, rat_or_throw(aj.at("center"), "graph arrow")});
    }
    if (j.contains("frontier"))
        for (const auto& fj : j["frontier"]) {
            int idx = fj.get<int>();
            if (idx < 0 || idx >= n) throw domain_error("graph JSON: frontier index out of range");
            g.vertices[idx].frontier = true;
        }
    // Depths are not serialized; recover BFS layers from the first vertex.
    if (n > 0) {
        std::vector<int> depth(g.vertices.size(), -1);
        std::vector<int> queue{0};
        depth[0] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (const auto& a : g.arrows) {
                int other = -1;
                if (a.src == u) other = a.dst;
                else if (a.dst == u) other = a.src;
                if (other >= 0 && depth[other] < 0) {
                    depth[other] = depth[u] + 1;
                    queue.push_back(other);
                }
            }
        }
        for (size_t i = 0; i < g.vertices.size(); ++i)
            g.vertices[i].depth = depth[i] < 0 ? 0 : depth[i];
    }
    return g;
}

std::string iso_json(const PairIso& iso) {
    ojson j;
    j["isomorphic"] = iso.ok;
    if (iso.ok) {
        ojson w;
        w["alpha"] = rat_json(iso.witness.alpha);
        w["beta"] = rat_json(iso.witness.beta);
        w["gamma"] = rat_json(iso.witness.gamma);
        w["delta"] = rat_json(iso.witness.delta);
        w["t"] = rat_json(iso.witness.t);
        j["witness"] = std::move(w);
        j["p_solutions"] = detail::scale_solutions_json(iso.p_solutions);
        j["q_solutions"] = detail::affine_solutions_json(iso.q_solutions);
    }
    return j.dump(2);
}

std::string iso_text(const PairIso& iso) {
    if (!iso.ok) return "not isomorphic\n";
    std::ostringstream os;
    os << "isomorphic\n";
    os << "witness: alpha=" << rat_text(iso.witness.alpha) << ", beta="
       << rat_text(iso.witness.beta) << ", gamma=" << rat_text(iso.witness.gamma)
       << ", delta=" << rat_text(iso.witness.delta) << ", t=" << rat_text(iso.witness.t)
       << "\n";
    return os.str();
}

std::string zigzag_json(const ZigzagType& z) {
    ojson j = z;
    return j.dump();
}

ZigzagType zigzag_from_json(const std::string& text) {
    ojson j = parse_or_throw(text, "zigzag JSON");
    if (!j.is_array()) throw domain_error("zigzag JSON: expected an integer array");
    ZigzagType z;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw domain_error("zigzag JSON: entries must be integers");
        z.push_back(e.get<int>());
    }
    return z;
}

std::string trace_json(const MoveTrace& t) {
    ojson j;
    j["input"] = t.input;
    j["input_display"] = t.input_display;
    j["steps"] = ojson::array();
    for (const auto& s : t.steps) {
        ojson sj;
        sj["label"] = s.label;
        sj["resulting"] = s.resulting;
        j["steps"].push_back(std::move(sj));
    }
    j["final_type"] = t.final_type;
    return j.dump(2);
}

std::string trace_text(const MoveTrace& t) {
    std::ostringstream os;
    os << "input:   " << zigzag_text(t.input) << "\n";
    os << "display: " << zigzag_text(t.input_display) << "\n";
    for (const auto& s : t.steps)
        os << s.label << (s.label.size() < 7 ? std::string(7 - s.label.size(), ' ') : "")
           << ": " << zigzag_text(s.resulting) << "\n";
    os << "final:   " << zigzag_text(t.final_type) << "\n";
    return os.str();
}

} // namespace zz
