#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "polsyz/report.hpp"

using namespace polsyz;

namespace {

enum class Format { Json, Text, Dot, Mon };

int emit(const Json& doc, Format fmt) {
    if (fmt == Format::Text) std::cout << render_text(doc);
    else std::cout << doc.dump(2) << "\n";
    return 0;
}

std::pair<int, int> parse_edge(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--edge", "expected i,j");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--edge", "expected i,j");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarizability and syzygies of degree-2 monomial sets"};
    std::string command, input, module = "Z", edge, output;
    RunConfig cfg;
    bool json = false, text = false, dot = false, mon = false, edge_graph_dot = false;

    app.add_option("command", command, "analyze|walks|bowties|syzygies|oracle|pinch|export")
        ->required()
        ->check(CLI::IsMember({"analyze", "walks", "bowties", "syzygies", "oracle", "pinch", "export"}));
    app.add_option("input", input, ".mon file")->required();
    app.add_option("--max-walk-len", cfg.max_walk_len, "longest walk enumerated")->check(CLI::Range(4, 64));
    app.add_option("--degree-bound", cfg.degree_bound, "largest total degree checked by the oracle")->check(CLI::Range(1, 64));
    app.add_option("--max-cycle-len", cfg.max_cycle_len, "bowties: longest odd cycle considered")->check(CLI::Range(1, 64));
    app.add_option("--seed", cfg.seed, "seed for random evaluation points");
    app.add_option("--module", module, "syzygies: Z or P")->check(CLI::IsMember({"Z", "P"}));
    app.add_option("--edge", edge, "pinch: i,j (1-based variables)");
    app.add_option("--output", output, "pinch: write the result as .mon");
    auto* fmt_group = app.add_option_group("format");
    fmt_group->add_flag("--json", json, "JSON output (default)");
    fmt_group->add_flag("--text", text, "plain text output");
    fmt_group->add_flag("--dot", dot, "graphviz output (walks, export)");
    fmt_group->add_flag("--mon", mon, "export: .mon output");
    fmt_group->add_flag("--edge-graph", edge_graph_dot, "export: DOT of the edge graph");
    fmt_group->require_option(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    cfg.module = module[0];
    Format fmt = text ? Format::Text : dot ? Format::Dot : mon ? Format::Mon : Format::Json;
    if (edge_graph_dot) fmt = Format::Dot;

    try {
        if (!std::ifstream(input)) {
            std::cerr << "polsyz: cannot open " << input << "\n";
            return 1;
        }
        MonomialSet f = read_monomial_file(input);
        if (command == "export") {
            LoopGraph g(f);
            if (fmt == Format::Mon) std::cout << to_mon(f);
            else if (edge_graph_dot) std::cout << to_dot(edge_graph(g), f);
            else if (fmt == Format::Dot) std::cout << to_dot(g);
            else return emit(Json{{"command", "export"}, {"input", set_json(f)}, {"mon", to_mon(f)}, {"dot", to_dot(g)}}, fmt);
            return 0;
        }
        if (fmt == Format::Mon || (fmt == Format::Dot && command != "walks")) {
            std::cerr << "polsyz: this output format is not available for " << command << "\n";
            return 1;
        }
        if (command == "analyze") return emit(analyze_doc(f, cfg), fmt);
        if (command == "walks") {
            if (fmt == Format::Dot) {
                std::cout << walks_dot(f, cfg);
                return 0;
            }
            return emit(walks_doc(f, cfg), fmt);
        }
        if (command == "bowties") return emit(bowties_doc(f, cfg), fmt);
        if (command == "syzygies") return emit(syzygies_doc(f, cfg), fmt);
        if (command == "oracle") return emit(oracle_doc(f, cfg), fmt);
        if (command == "pinch") {
            if (edge.empty()) {
                std::cerr << "polsyz: pinch needs --edge i,j\n";
                return 1;
            }
            auto [i, j] = parse_edge(edge);
            if (i < 1 || j < 1 || i > f.n || j > f.n) {
                std::cerr << "polsyz: --edge out of range\n";
                return 1;
            }
            Json doc = pinch_doc(f, i - 1, j - 1);
            if (!output.empty()) {
                std::ofstream out(output);
                if (!out) {
                    std::cerr << "polsyz: cannot write " << output << "\n";
                    return 1;
                }
                out << doc["mon"].get<std::string>();
                doc["written"] = output;
            }
            return emit(doc, fmt);
        }
    } catch (const IncohesiveError& e) {
        std::cout << incohesive_doc(e.witness()).dump(2) << "\n";
        std::cerr << "polsyz: " << e.what() << "\n";
        return 2;
    } catch (const InvariantBreach& e) {
        std::cerr << "polsyz: internal invariant broken: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "polsyz: " << input << ":" << e.line() << ": " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "polsyz: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "polsyz: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "polsyz: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
