#include "zz/aut.hpp"
#include "zz/dual_graph.hpp"
#include "zz/equations.hpp"
#include "zz/errors.hpp"
#include "zz/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Inline JSON (leading '{' or '[') or a file path.
std::string read_input(const std::string& arg) {
    size_t i = arg.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && (arg[i] == '{' || arg[i] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw CLI::ValidationError("input", "cannot read file '" + arg + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<zz::Rational> parse_rational_list(const std::string& arg, const char* what) {
    std::vector<zz::Rational> out;
    std::string piece;
    std::istringstream in(arg);
    while (std::getline(in, piece, ',')) {
        auto r = zz::rat_parse(piece);
        if (!r) throw CLI::ValidationError(what, "bad rational '" + piece + "'");
        out.push_back(*r);
    }
    if (out.empty()) throw CLI::ValidationError(what, "empty list");
    return out;
}

zz::ZigzagType parse_type_arg(const std::string& arg) {
    size_t i = arg.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && arg[i] == '[') return zz::zigzag_from_json(arg);
    zz::ZigzagType z;
    std::string piece;
    std::istringstream in(arg);
    while (std::getline(in, piece, ',')) z.push_back(std::stoi(piece));
    return z;
}

struct Options {
    std::string format = "text";
    std::string pair_arg, pair2_arg, word_arg, graph_arg, type_arg;
    std::string centers_arg, family_arg;
    std::string center_arg = "0";
    std::string lambda_arg;
    std::string strategy_arg = "leftmost";
    int depth = 2;
    int jobs = 1;
    int max_syllables = 3;
    bool report = false;
};

int run(const std::string& cmd, const Options& opt) {
    using namespace zz;
    const bool json = opt.format == "json";
    const bool dot = opt.format == "dot";

    auto pair_of = [](const std::string& arg) { return pair_from_json(read_input(arg)); };
    auto center_of = [](const std::string& arg, const char* what) {
        auto r = rat_parse(arg);
        if (!r) throw CLI::ValidationError(what, "bad rational '" + arg + "'");
        return *r;
    };

    if (cmd == "classify") {
        PairRepr r = pair_of(opt.pair_arg);
        if (json) {
            std::cout << pair_json(r) << "\n";
        } else {
            std::cout << case_name(classify_case(r)) << "\n";
        }
        return 0;
    }
    if (cmd == "equations") {
        EquationTriple eq = emit_equations(pair_of(opt.pair_arg));
        std::cout << (json ? eq.json() + "\n" : eq.display_text());
        return 0;
    }
    if (cmd == "graph-dual") {
        PairRepr r = pair_of(opt.pair_arg);
        if (opt.report) {
            if (dot) throw CLI::ValidationError("--format", "the report has no dot form");
            SurfaceReport rep = surface_report(r);
            std::cout << (json ? surface_report_json(rep) + "\n" : surface_report_text(rep));
            return 0;
        }
        DualGraph g = opt.lambda_arg.empty()
                          ? dual_graph(r)
                          : section_augmented_graph(r, center_of(opt.lambda_arg, "--lambda"));
        if (dot) std::cout << dual_graph_dot(g);
        else if (json) std::cout << dual_graph_json(g) << "\n";
        else std::cout << dual_graph_text(g);
        return 0;
    }
    if (cmd == "graph-fibrations") {
        FibrationGraph g;
        if (!opt.graph_arg.empty()) {
            g = graph_from_json(read_input(opt.graph_arg));
        } else {
            std::vector<Rational> centers =
                opt.centers_arg.empty() ? std::vector<Rational>{Rational(0), Rational(1)}
                                        : parse_rational_list(opt.centers_arg, "--centers");
            g = build_graph(pair_of(opt.pair_arg), centers, opt.depth);
        }
        if (dot) std::cout << graph_dot(g);
        else if (json) std::cout << graph_json(g) << "\n";
        else std::cout << graph_text(g);
        return 0;
    }
    if (cmd == "iso") {
        PairIso iso = pairs_isomorphic(pair_of(opt.pair_arg), pair_of(opt.pair2_arg));
        std::cout << (json ? iso_json(iso) + "\n" : iso_text(iso));
        return 0;
    }
    if (cmd == "revert") {
        PairRepr target =
            reversion_target(pair_of(opt.pair_arg), center_of(opt.center_arg, "--center"));
        std::cout << pair_json(target) << "\n";
        return 0;
    }
    if (cmd == "reduce") {
        BirWord w = word_from_json(read_input(opt.word_arg));
        ReduceStrategy strategy = ReduceStrategy::LeftmostFirst;
        if (opt.strategy_arg == "rightmost") strategy = ReduceStrategy::RightmostFirst;
        else if (opt.strategy_arg == "reversions") strategy = ReduceStrategy::ReversionsFirst;
        else if (opt.strategy_arg != "leftmost")
            throw CLI::ValidationError("--strategy", "unknown strategy '" + opt.strategy_arg + "'");
        BirWord reduced = reduce_word(w, strategy);
        if (json) {
            std::cout << word_json(reduced) << "\n";
        } else {
            std::cout << "letters: " << reduced.letters.size()
                      << ", length: " << word_length(reduced) << "\n";
        }
        return 0;
    }
    if (cmd == "aut") {
        std::vector<Rational> family;
        if (!opt.family_arg.empty()) family = parse_rational_list(opt.family_arg, "--family");
        AutReport rep = aut_structure(pair_of(opt.pair_arg), family, opt.jobs);
        std::cout << (json ? rep.json() + "\n" : rep.text());
        return 0;
    }
    if (cmd == "certify-free") {
        std::vector<Rational> family = parse_rational_list(opt.family_arg, "--family");
        FreeFamilyCertificate cert =
            certify_free_family(pair_of(opt.pair_arg), family, opt.max_syllables, opt.jobs);
        std::cout << (json ? cert.json() + "\n" : cert.text());
        return 0;
    }
    if (cmd == "trace-type") {
        MoveTrace t = reversion_trace(parse_type_arg(opt.type_arg));
        std::cout << (json ? trace_json(t) + "\n" : trace_text(t));
        return 0;
    }
    throw CLI::ValidationError("subcommand", "unknown command '" + cmd + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus for affine surfaces fibered by polynomial pairs"};
    app.require_subcommand(1);

    Options opt;
    std::string cmd;

    auto add_format = [&opt](CLI::App* sub, bool with_dot) {
        std::vector<std::string> allowed = {"json", "text"};
        if (with_dot) allowed.push_back("dot");
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };
    auto add_pair = [&opt](CLI::App* sub) {
        sub->add_option("--pair", opt.pair_arg, "Pair JSON (inline or file path)")->required();
    };

    CLI::App* classify = app.add_subcommand("classify", "Print the construction case of a pair");
    add_pair(classify);
    add_format(classify, false);

    CLI::App* equations = app.add_subcommand("equations", "Print the defining equations");
    add_pair(equations);
    add_format(equations, false);

    CLI::App* gdual = app.add_subcommand("graph-dual", "Dual graph of the boundary resolution");
    add_pair(gdual);
    gdual->add_option("--lambda", opt.lambda_arg, "Add the reversion-center section");
    gdual->add_flag("--report", opt.report, "Emit the surface report instead");
    add_format(gdual, true);

    CLI::App* gfib = app.add_subcommand("graph-fibrations", "Explore the fibration graph");
    gfib->add_option("--pair", opt.pair_arg, "Seed pair JSON (inline or file path)");
    gfib->add_option("--centers", opt.centers_arg, "Comma-separated reversion centers");
    gfib->add_option("--depth", opt.depth, "Exploration depth")->capture_default_str();
    gfib->add_option("--graph", opt.graph_arg, "Re-export an existing graph JSON");
    add_format(gfib, true);

    CLI::App* iso = app.add_subcommand("iso", "Decide isomorphism of two pairs");
    add_pair(iso);
    iso->add_option("--pair2", opt.pair2_arg, "Second pair JSON")->required();
    add_format(iso, false);

    CLI::App* revert = app.add_subcommand("revert", "Reversion target class of a pair");
    add_pair(revert);
    revert->add_option("--center", opt.center_arg, "Reversion center")->capture_default_str();
    add_format(revert, false);

    CLI::App* reduce = app.add_subcommand("reduce", "Reduce a birational word");
    reduce->add_option("--word", opt.word_arg, "Word JSON (inline or file path)")->required();
    reduce->add_option("--strategy", opt.strategy_arg, "leftmost|rightmost|reversions")
        ->capture_default_str();
    add_format(reduce, false);

    CLI::App* aut = app.add_subcommand("aut", "Automorphism-group structure report");
    add_pair(aut);
    aut->add_option("--family", opt.family_arg, "Shift family for the certificate");
    aut->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();
    add_format(aut, false);

    CLI::App* certify = app.add_subcommand("certify-free", "Free-family certificate");
    add_pair(certify);
    certify->add_option("--family", opt.family_arg, "Comma-separated shifts, 0 included")
        ->required();
    certify->add_option("--max-syllables", opt.max_syllables, "Spot-reduction depth")
        ->capture_default_str();
    certify->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();
    add_format(certify, false);

    CLI::App* trace = app.add_subcommand("trace-type", "Elementary-move trace of a reversion");
    trace->add_option("--type", opt.type_arg, "Zigzag type, e.g. 0,-1,-2,-3")->required();
    add_format(trace, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    for (CLI::App* sub : {classify, equations, gdual, gfib, iso, revert, reduce, aut, certify,
                          trace})
        if (sub->parsed()) cmd = sub->get_name();

    if (cmd == "graph-fibrations" && opt.graph_arg.empty() && opt.pair_arg.empty()) {
        std::cerr << "graph-fibrations: --pair or --graph is required\n";
        return 2;
    }

    try {
        return run(cmd, opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const zz::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
