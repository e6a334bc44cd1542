#pragma once

#include "zz/graph.hpp"
#include "zz/words.hpp"

#include <string>
#include <vector>

namespace zz {

// Poly <-> JSON array of "num/den" strings, lowest degree first.
std::string poly_json(const Poly& p);
Poly poly_from_json(const std::string& text); // throws domain_error on bad shape

// {"P": [...], "Q": [...], "case": "I"} (case optional on input).
std::string pair_json(const PairRepr& r);
PairRepr pair_from_json(const std::string& text);

// Words: {"base": {...}, "letters": [{"kind":"rev","center":"2/1",...}, ...]}.
// Letters are re-anchored by chaining from the base on input.
std::string word_json(const BirWord& w);
BirWord word_from_json(const std::string& text);

// Graph JSON mirrors the internal structure; accepted back by graph commands.
FibrationGraph graph_from_json(const std::string& text);

// IsoWitness / PairIso rendering.
std::string iso_json(const PairIso& iso);
std::string iso_text(const PairIso& iso);

std::string zigzag_json(const ZigzagType& z);
ZigzagType zigzag_from_json(const std::string& text);
std::string trace_json(const MoveTrace& t);
std::string trace_text(const MoveTrace& t);

} // namespace zz
