#include "zz/words.hpp"

#include "zz/errors.hpp"

#include "json_detail.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace zz {

namespace {

std::string pair_text(const PairRepr& r) {
    return "[" + r.P.text() + ", " + r.Q.text() + "]";
}

// Triangular letters act by (x,y) -> (a x + y S(y), c y); S is the constant b
// for an aut and R for a fibered modification.
Poly letter_series(const Letter& l) {
    if (l.kind == Letter::Kind::Aut) return Poly::constant(l.b);
    return l.R;
}

// (a, b, c) must define a lift per the pair's automorphism description:
// a in the scale stabilizer of P; for r0 = 0 the induced (delta, t) =
// (a/c, -b/c) stabilizes Q with shifts, for r0 >= 1 the induced delta =
// a^{r0+1}/c stabilizes Q without shifts (b unconstrained).
void validate_triangular(const PairRepr& at, const Rational& a, const Rational& b,
                         const Rational& c) {
    if (a == 0 || c == 0) throw domain_error("triangular letter: a and c must be nonzero");
    ScaleSolutions p_stab = scale_equivalences(at.P, at.P);
    if (!p_stab.witness_for(a))
        throw domain_error("triangular letter: a does not stabilize P");
    int r0 = at.P(Rational(0)) == 0 ? at.P.vanishing_order() : 0;
    if (r0 == 0) {
        AffineSolutions q_stab = stabilizer(at.Q, true);
        Rational delta = a / c, t = -b / c;
        auto w = q_stab.witness_for(delta);
        if (!w || w->t != t)
            throw domain_error("triangular letter: (b, c) does not stabilize Q");
    } else {
        AffineSolutions q_stab = stabilizer(at.Q, false);
        Rational delta = rat_pow(a, r0 + 1) / c;
        if (!q_stab.witness_for(delta))
            throw domain_error("triangular letter: c does not stabilize Q");
    }
}

} // namespace

Letter make_aut(const PairRepr& at, const Rational& a, const Rational& b, const Rational& c) {
    validate_triangular(at, a, b, c);
    Letter l;
    l.kind = Letter::Kind::Aut;
    l.source = at;
    l.target = at;
    l.a = a;
    l.b = b;
    l.c = c;
    return l;
}

Letter make_fibered(const PairRepr& at, const Rational& a, const Rational& c, Poly R) {
    if (R.degree() < 1)
        throw domain_error("fibered letter: deg R >= 1 required (use an aut otherwise)");
    validate_triangular(at, a, R(Rational(0)), c);
    Letter l;
    l.kind = Letter::Kind::Fibered;
    l.source = at;
    l.target = at;
    l.a = a;
    l.b = R(Rational(0));
    l.c = c;
    l.R = std::move(R);
    return l;
}

Letter make_reversion(const PairRepr& source, const Rational& center) {
    Letter l;
    l.kind = Letter::Kind::Reversion;
    l.source = source;
    l.target = reversion_target(source, center);
    l.center = center;
    return l;
}

Letter invert_letter(const Letter& l) {
    Letter inv = l;
    switch (l.kind) {
    case Letter::Kind::Aut:
        inv.a = Rational(1) / l.a;
        inv.c = Rational(1) / l.c;
        inv.b = -l.b / (l.a * l.c);
        break;
    case Letter::Kind::Fibered: {
        inv.a = Rational(1) / l.a;
        inv.c = Rational(1) / l.c;
        // Solve x' = a x + y R(y), y' = c y for (x, y).
        Poly rhat = Rational(-1) / (l.a * l.c) * l.R.scaled_arg(Rational(1) / l.c);
        inv.b = rhat(Rational(0));
        inv.R = std::move(rhat);
        break;
    }
    case Letter::Kind::Reversion:
        std::swap(inv.source, inv.target);
        inv.inverted = !l.inverted;
        break;
    }
    return inv;
}

bool is_identity(const Letter& l) {
    return l.kind == Letter::Kind::Aut && l.a == 1 && l.b == 0 && l.c == 1;
}

Letter compose_fibered(const Letter& l1, const Letter& l2) {
    if (!l1.triangular() || !l2.triangular())
        throw domain_error("compose_fibered: both letters must be triangular");
    if (!(l1.source == l2.source))
        throw domain_error("compose_fibered: letters sit at different representatives");
    Rational a = l1.a * l2.a;
    Rational c = l1.c * l2.c;
    Poly s1 = letter_series(l1), s2 = letter_series(l2);
    Poly s = l1.a * s2 + l2.c * s1.scaled_arg(l2.c);
    if (s.degree() < 1) return make_aut(l1.source, a, s(Rational(0)), c);
    return make_fibered(l1.source, a, c, std::move(s));
}

BirWord make_word(PairRepr base, std::vector<Letter> letters) {
    if (!letters.empty()) {
        if (!pairs_isomorphic(base, letters.front().source))
            throw domain_error("make_word: base and first letter disagree");
        for (size_t i = 0; i + 1 < letters.size(); ++i)
            if (!pairs_isomorphic(letters[i].target, letters[i + 1].source))
                throw domain_error("make_word: letters " + std::to_string(i) + " and " +
                                   std::to_string(i + 1) + " do not chain");
    }
    return BirWord{std::move(base), std::move(letters)};
}

BirWord invert_word(const BirWord& w) {
    std::vector<Letter> letters;
    letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        letters.push_back(invert_letter(*it));
    PairRepr base = w.letters.empty() ? w.base : w.letters.back().target;
    return BirWord{std::move(base), std::move(letters)};
}

BirWord concat(const BirWord& a, const BirWord& b) {
    std::vector<Letter> letters = a.letters;
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    return make_word(a.base, std::move(letters));
}

int word_length(const BirWord& w) {
    int n = 0;
    for (const auto& l : w.letters)
        if (l.kind != Letter::Kind::Aut) ++n;
    return n;
}

std::vector<Redex> find_redexes(const BirWord& w) {
    std::vector<Redex> out;
    const auto& ls = w.letters;
    for (size_t i = 0; i < ls.size(); ++i) {
        if (is_identity(ls[i])) out.push_back({Redex::Type::DropIdentityAut, i, i});
        if (i + 1 < ls.size() && ls[i].triangular() && ls[i + 1].triangular() &&
            ls[i].source == ls[i + 1].source)
            out.push_back({Redex::Type::MergeTriangular, i, i + 1});
        if (ls[i].kind == Letter::Kind::Reversion) {
            // Scan across intervening auts (length 0) for the partner.
            size_t k = i + 1;
            while (k < ls.size() && ls[k].kind == Letter::Kind::Aut) ++k;
            if (k < ls.size() && ls[k].kind == Letter::Kind::Reversion) {
                if (pairs_isomorphic(ls[i].source, ls[k].target)) {
                    out.push_back({Redex::Type::CancelReversions, i, k});
                } else if (ls[i].source.P.degree() == 1 && ls[i].source.Q.degree() == 1) {
                    out.push_back({Redex::Type::MergeUnresolved, i, k});
                }
            }
        }
    }
    return out;
}

BirWord apply_redex(const BirWord& w, const Redex& r) {
    std::vector<Letter> ls = w.letters;
    switch (r.type) {
    case Redex::Type::DropIdentityAut:
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(r.i));
        break;
    case Redex::Type::MergeTriangular: {
        Letter merged = compose_fibered(ls[r.i + 1], ls[r.i]);
        ls[r.i] = std::move(merged);
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(r.i) + 1);
        break;
    }
    case Redex::Type::CancelReversions:
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(r.i),
                 ls.begin() + static_cast<std::ptrdiff_t>(r.k) + 1);
        break;
    case Redex::Type::MergeUnresolved: {
        Letter merged;
        merged.kind = Letter::Kind::Reversion;
        merged.source = ls[r.i].source;
        merged.target = ls[r.k].target;
        merged.unresolved = true;
        ls[r.i] = std::move(merged);
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(r.i) + 1,
                 ls.begin() + static_cast<std::ptrdiff_t>(r.k) + 1);
        break;
    }
    }
    return BirWord{w.base, std::move(ls)};
}

bool is_reduced(const BirWord& w) { return find_redexes(w).empty(); }

namespace {

bool pick_redex(const std::vector<Redex>& rs, ReduceStrategy strategy, Redex& out) {
    if (rs.empty()) return false;
    switch (strategy) {
    case ReduceStrategy::LeftmostFirst:
        out = rs.front();
        return true;
    case ReduceStrategy::RightmostFirst:
        out = rs.back();
        return true;
    case ReduceStrategy::ReversionsFirst:
        for (const auto& r : rs)
            if (r.type == Redex::Type::CancelReversions) {
                out = r;
                return true;
            }
        for (const auto& r : rs)
            if (r.type == Redex::Type::MergeUnresolved) {
                out = r;
                return true;
            }
        out = rs.front();
        return true;
    }
    return false;
}

std::string word_key(const BirWord& w) {
    std::ostringstream os;
    auto poly_key = [&os](const Poly& p) {
        os << "[";
        for (const auto& c : p.coeffs()) os << rat_json(c) << ",";
        os << "]";
    };
    auto pair_key = [&](const PairRepr& r) {
        poly_key(r.P);
        os << "|";
        poly_key(r.Q);
    };
    pair_key(w.base);
    for (const auto& l : w.letters) {
        os << ";" << static_cast<int>(l.kind) << ":" << rat_json(l.a) << "," << rat_json(l.b)
           << "," << rat_json(l.c) << "," << rat_json(l.center) << "," << l.inverted << ","
           << l.unresolved << ",";
        poly_key(l.R);
        os << "@";
        pair_key(l.source);
        os << ">";
        pair_key(l.target);
    }
    return os.str();
}

} // namespace

BirWord reduce_word(const BirWord& w, ReduceStrategy strategy) {
    BirWord cur = w;
    while (true) {
        auto rs = find_redexes(cur);
        Redex r;
        if (!pick_redex(rs, strategy, r)) return cur;
        cur = apply_redex(cur, r);
    }
}

std::vector<BirWord> all_normal_forms(const BirWord& w, std::size_t cap) {
    std::vector<BirWord> out;
    std::set<std::string> seen, normal;
    std::vector<BirWord> stack{w};
    seen.insert(word_key(w));
    while (!stack.empty()) {
        BirWord cur = std::move(stack.back());
        stack.pop_back();
        auto rs = find_redexes(cur);
        if (rs.empty()) {
            if (normal.insert(word_key(cur)).second) out.push_back(std::move(cur));
            continue;
        }
        for (const auto& r : rs) {
            BirWord next = apply_redex(cur, r);
            if (seen.size() >= cap)
                throw domain_error("all_normal_forms: state cap exceeded");
            if (seen.insert(word_key(next)).second) stack.push_back(std::move(next));
        }
    }
    return out;
}

BirWord zeta_word(const PairRepr& base, const Rational& a) {
    if (base.P(Rational(0)) == 0) throw domain_error("zeta_word: P(0) = 0 (base must be type I)");
    if (a == 0) throw domain_error("zeta_word: a = 0 gives a degenerate cycle");
    if (base.Q(Rational(0)) == 0) throw domain_error("zeta_word: Q(0) = 0");
    if (base.P(a) == 0) throw domain_error("zeta_word: P(a) = 0");
    if (base.Q(a) == 0) throw domain_error("zeta_word: Q(a) = 0");

    Letter l1 = make_reversion(base, Rational(0));
    Letter l2 = make_reversion(l1.target, a);
    Letter l3 = make_reversion(l2.target, a);
    Letter l4 = make_reversion(l3.target, -a);

    std::vector<PairRepr> cycle{base, l1.target, l2.target, l3.target};
    auto ids = pairwise_isomorphic(cycle);
    for (size_t i = 0; i < cycle.size(); ++i)
        for (size_t j = i + 1; j < cycle.size(); ++j)
            if (ids[i] == ids[j])
                throw domain_error("zeta_word: cycle classes " + std::to_string(i) + " and " +
                                   std::to_string(j) + " are isomorphic (" +
                                   pair_text(cycle[i]) + " ~ " + pair_text(cycle[j]) + ")");
    if (!pairs_isomorphic(l4.target, base))
        throw domain_error("zeta_word: cycle does not close at the base");
    return make_word(base, {l1, l2, l3, l4});
}

namespace {

struct Syllable {
    size_t a_index = 0; // into the nonzero family values
    bool inverse = false;
};

std::string syllable_text(const Syllable& s, const std::vector<Rational>& values) {
    std::string t = "z(" + rat_text(values[s.a_index]) + ")";
    if (s.inverse) t += "^-1";
    return t;
}

} // namespace

std::string FreeFamilyCertificate::json() const {
    detail::ojson j;
    j["certified"] = certified;
    if (!certified) j["failure"] = failure;
    j["base"] = detail::pair_to_json(base);
    j["family"] = detail::ojson::array();
    for (const auto& a : family) j["family"].push_back(rat_json(a));
    j["max_syllables"] = max_syllables;
    j["non_isomorphisms"] = detail::ojson::array();
    for (const auto& c : checked) {
        detail::ojson cj;
        cj["left"] = c.left;
        cj["right"] = c.right;
        j["non_isomorphisms"].push_back(std::move(cj));
    }
    j["spot_reductions"] = detail::ojson::array();
    for (const auto& s : spot_reductions) {
        detail::ojson sj;
        sj["word"] = s.word;
        sj["syllables"] = s.syllables;
        sj["reduced_length"] = s.reduced_length;
        j["spot_reductions"].push_back(std::move(sj));
    }
    return j.dump(2);
}

std::string FreeFamilyCertificate::text() const {
    std::ostringstream os;
    if (certified) {
        os << "certified free family at " << pair_text(base) << "\n";
    } else {
        os << "NOT certified: " << failure << "\n";
    }
    os << "family:";
    for (const auto& a : family) os << " " << rat_text(a);
    os << "\n";
    os << checked.size() << " non-isomorphisms verified\n";
    os << spot_reductions.size() << " spot reductions (max " << max_syllables
       << " syllables), all of full length\n";
    return os.str();
}

FreeFamilyCertificate certify_free_family(const PairRepr& base, std::vector<Rational> A,
                                          int max_syllables, int jobs) {
    FreeFamilyCertificate cert;
    cert.base = base;
    cert.family = A;
    cert.max_syllables = max_syllables;

    auto fail = [&cert](std::string why) {
        cert.certified = false;
        cert.failure = std::move(why);
        return cert;
    };

    if (std::find(A.begin(), A.end(), Rational(0)) == A.end())
        return fail("0 is not in the family");
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
            if (A[i] == A[j]) return fail("duplicate family value " + rat_text(A[i]));

    std::vector<Rational> nz;
    for (const auto& a : A)
        if (a != 0) nz.push_back(a);
    if (nz.empty()) return fail("family has no nonzero values");

    // Per-value zeta cycles; zeta_word itself verifies the six in-cycle
    // non-isomorphisms and the closure.
    std::vector<BirWord> zetas;
    std::vector<std::array<PairRepr, 4>> cycles;
    for (const auto& a : nz) {
        BirWord z;
        try {
            z = zeta_word(base, a);
        } catch (const domain_error& e) {
            return fail("zeta(" + rat_text(a) + "): " + e.what());
        }
        std::array<PairRepr, 4> cyc{base, z.letters[0].target, z.letters[1].target,
                                    z.letters[2].target};
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j)
                cert.checked.push_back({pair_text(cyc[i]), pair_text(cyc[j])});
        zetas.push_back(std::move(z));
        cycles.push_back(std::move(cyc));
    }

    // Junction conditions across cycles: distinct shifts give distinct
    // middle classes on both rails.
    for (size_t x = 0; x < nz.size(); ++x) {
        for (size_t y = x + 1; y < nz.size(); ++y) {
            if (pairs_isomorphic(cycles[x][2], cycles[y][2]))
                return fail("junction failure: " + pair_text(cycles[x][2]) + " ~ " +
                            pair_text(cycles[y][2]));
            cert.checked.push_back({pair_text(cycles[x][2]), pair_text(cycles[y][2])});
            if (pairs_isomorphic(cycles[x][3], cycles[y][3]))
                return fail("junction failure: " + pair_text(cycles[x][3]) + " ~ " +
                            pair_text(cycles[y][3]));
            cert.checked.push_back({pair_text(cycles[x][3]), pair_text(cycles[y][3])});
        }
    }

    // Enumerate freely reduced syllable sequences of length 1..max_syllables.
    std::vector<std::vector<Syllable>> sequences;
    std::vector<Syllable> prefix;
    auto extend = [&](auto&& self, int remaining) -> void {
        if (!prefix.empty()) sequences.push_back(prefix);
        if (remaining == 0) return;
        for (size_t i = 0; i < nz.size(); ++i) {
            for (bool inv : {false, true}) {
                if (!prefix.empty() && prefix.back().a_index == i &&
                    prefix.back().inverse != inv)
                    continue; // z z^-1 is not freely reduced
                prefix.push_back({i, inv});
                self(self, remaining - 1);
                prefix.pop_back();
            }
        }
    };
    extend(extend, max_syllables);

    cert.spot_reductions.resize(sequences.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> violated{false};
    std::string violation;
    std::mutex violation_mutex;
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= sequences.size() || violated.load()) return;
            const auto& seq = sequences[idx];
            BirWord word = seq[0].inverse ? invert_word(zetas[seq[0].a_index])
                                          : zetas[seq[0].a_index];
            std::string name = syllable_text(seq[0], nz);
            for (size_t s = 1; s < seq.size(); ++s) {
                const BirWord& z = zetas[seq[s].a_index];
                word = concat(word, seq[s].inverse ? invert_word(z) : z);
                name += " " + syllable_text(seq[s], nz);
            }
            BirWord reduced = reduce_word(word);
            int len = word_length(reduced);
            cert.spot_reductions[idx] = {name, static_cast<int>(seq.size()), len};
            // The only junction cancellation is the shared center-0 reversion
            // when an inverted syllable precedes a direct one; each removes
            // exactly two reversion letters.
            int expected = 4 * static_cast<int>(seq.size());
            for (size_t s = 0; s + 1 < seq.size(); ++s)
                if (seq[s].inverse && !seq[s + 1].inverse) expected -= 2;
            if (len != expected || len == 0) {
                std::lock_guard<std::mutex> lock(violation_mutex);
                violated.store(true);
                if (violation.empty())
                    violation = "word " + name + " reduced to length " + std::to_string(len) +
                                ", expected " + std::to_string(expected);
            }
        }
    };
    int nthreads = std::max(1, jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (violated.load()) return fail(violation);

    cert.certified = true;
    return cert;
}

LoopProfile pi1_loop_profile(const BirWord& w) {
    PairRepr end = w.letters.empty() ? w.base : w.letters.back().target;
    if (!pairs_isomorphic(w.base, end))
        throw domain_error("pi1_loop_profile: word is not closed");

    std::vector<const Letter*> revs;
    for (const auto& l : w.letters)
        if (l.kind == Letter::Kind::Reversion) revs.push_back(&l);

    LoopProfile p;
    size_t lo = 0, hi = revs.size();
    while (hi - lo >= 2 && pairs_isomorphic(revs[lo]->target, revs[hi - 1]->source)) {
        ++lo;
        --hi;
        ++p.conjugator_length;
    }
    if (lo < hi) {
        const PairRepr& anchor = revs[lo]->source;
        int len = 0;
        for (size_t i = lo; i < hi; ++i) {
            ++len;
            if (pairs_isomorphic(revs[i]->target, anchor)) {
                p.loops.push_back(len);
                len = 0;
            }
        }
        if (len > 0) p.loops.push_back(len); // closed at the anchor by construction
    }
    p.algebraic_shaped = p.loops.empty() || (p.loops.size() == 1 && p.loops[0] <= 1);
    return p;
}

std::string loop_profile_json(const LoopProfile& p) {
    detail::ojson j;
    j["loops"] = p.loops;
    j["conjugator_length"] = p.conjugator_length;
    j["algebraic_shaped"] = p.algebraic_shaped;
    return j.dump(2);
}

} // namespace zz
