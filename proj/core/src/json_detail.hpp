#pragma once

// Internal serialization helpers shared by the library's .cpp files; the
// public headers stay free of the JSON dependency.

#include "zz/equivalence.hpp"
#include "zz/pair.hpp"

#include <json.hpp>

namespace zz::detail {

using ojson = nlohmann::ordered_json;

inline ojson poly_to_json(const Poly& p) {
    ojson arr = ojson::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_json(c));
    return arr;
}

inline ojson scale_witness_json(const ScaleWitness& w) {
    ojson j;
    j["alpha"] = rat_json(w.alpha);
    j["beta"] = rat_json(w.beta);
    return j;
}

inline ojson affine_witness_json(const AffineWitness& w) {
    ojson j;
    j["gamma"] = rat_json(w.gamma);
    j["delta"] = rat_json(w.delta);
    j["t"] = rat_json(w.t);
    return j;
}

inline ojson scale_solutions_json(const ScaleSolutions& s) {
    ojson j;
    switch (s.kind()) {
    case ScaleSolutions::Kind::Empty:
        j["kind"] = "empty";
        break;
    case ScaleSolutions::Kind::Finite:
        j["kind"] = "finite";
        j["witnesses"] = ojson::array();
        for (const auto& w : s.witnesses()) j["witnesses"].push_back(scale_witness_json(w));
        break;
    case ScaleSolutions::Kind::OneParameter:
        j["kind"] = "one_parameter";
        j["representative"] = scale_witness_json(s.smallest());
        break;
    }
    return j;
}

inline ojson affine_solutions_json(const AffineSolutions& s) {
    ojson j;
    switch (s.kind()) {
    case AffineSolutions::Kind::Empty:
        j["kind"] = "empty";
        break;
    case AffineSolutions::Kind::Finite:
        j["kind"] = "finite";
        j["witnesses"] = ojson::array();
        for (const auto& w : s.witnesses()) j["witnesses"].push_back(affine_witness_json(w));
        break;
    case AffineSolutions::Kind::OneParameter:
        j["kind"] = "one_parameter";
        j["representative"] = affine_witness_json(s.smallest());
        break;
    }
    return j;
}

inline ojson pair_to_json(const PairRepr& r) {
    ojson j;
    j["P"] = poly_to_json(r.P);
    j["Q"] = poly_to_json(r.Q);
    j["case"] = case_name(classify_case(r));
    return j;
}

} // namespace zz::detail
