#include "polsyz/report.hpp"

#include <sstream>

namespace polsyz {

namespace {

Json one_based(const std::vector<int>& xs) {
    Json a = Json::array();
    for (int x : xs) a.push_back(x + 1);
    return a;
}

Json bounds_json(const RunConfig& cfg) {
    return Json{{"max_walk_len", cfg.max_walk_len}, {"degree_bound", cfg.degree_bound}};
}

}  // namespace

std::string monomial_string(const std::vector<int>& exponents) {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
    }
    return s.empty() ? "1" : s;
}

Json set_json(const MonomialSet& f) {
    Json gens = Json::array();
    for (const auto& g : f.gens) gens.push_back(monomial_name(g));
    return Json{{"n", f.n}, {"m", f.m()}, {"generators", gens}, {"unused_vars", one_based(f.unused_vars())}};
}

Json cycle_json(const Cycle& c) {
    return Json{{"vertices", one_based(c.vertices)}, {"edges", one_based(c.edges)}, {"length", c.length()}};
}

Json walk_json(const Walk& w, const LoopGraph& g, bool with_decomposition) {
    Json j{{"edges", one_based(w.edges)}, {"vertices", one_based(w.vertices)}, {"length", w.length()}};
    auto split = split_decomposition(w);
    if (split) {
        j["split"] = Json{{"vertex", split->vertex + 1},
                          {"kind", split->kind == SplitKind::Rotation ? "rotation" : "sense_repetition"},
                          {"first", one_based(split->first)},
                          {"second", one_based(split->second)}};
    } else {
        j["split"] = nullptr;
    }
    auto c = classify_configuration(w);
    if (!c) {
        j["class"] = nullptr;
        return j;
    }
    j["class"] = kind_name(c->kind);
    Json cycles = Json::array();
    for (const auto& cy : c->cycles) cycles.push_back(cycle_json(cy));
    j["cycles"] = cycles;
    Json paths = Json::array();
    for (std::size_t p = 0; p < c->paths.size(); ++p)
        paths.push_back(Json{{"vertices", one_based(c->path_vertices[p])}, {"edges", one_based(c->paths[p])}});
    j["paths"] = paths;
    auto s = build_skeleton(*c);
    Json nodes = Json::array();
    for (const auto& n : s.nodes) {
        Json node{{"color", n.black ? "black" : "white"}};
        if (n.cycle >= 0) node["cycle"] = n.cycle + 1;
        else node["path_edge"] = Json::array({n.path + 1, n.path_edge + 1});
        nodes.push_back(node);
    }
    Json links = Json::array();
    for (auto [a, b] : s.links) links.push_back(Json::array({a + 1, b + 1}));
    j["skeleton"] = Json{{"nodes", nodes}, {"links", links}, {"non_split", skeleton_non_split(s)}};
    if (with_decomposition && !split) {
        auto d = is_decomposable(w, g);
        if (d) j["decomposable"] = Json{{"h", one_based(d->h)}, {"first", one_based(d->first)}, {"second", one_based(d->second)}};
        else j["decomposable"] = false;
    }
    return j;
}

Json bowtie_json(const BowTie& b, const LoopGraph& g) {
    auto c = classify_bowtie(b);
    return Json{{"cycle1", cycle_json(b.cycle1)},
                {"cycle2", cycle_json(b.cycle2)},
                {"path", Json{{"vertices", one_based(b.path_vertices)}, {"edges", one_based(b.path)}}},
                {"kind", bowtie_kind_name(c.kind)},
                {"loops", c.loops},
                {"induced", is_induced_bowtie(b, g)},
                {"degree", b.degree()},
                {"walk", one_based(b.key())}};
}

Json syzygy_json(const SyzygyVector& v) {
    Json entries = Json::array();
    for (std::size_t j = 0; j < v.entries.size(); ++j) {
        const auto& e = v.entries[j];
        if (e.coeff == 0) continue;
        entries.push_back(Json{{"gen_index", j + 1}, {"coeff", e.coeff}, {"monomial", monomial_string(e.exponents)}});
    }
    return Json{{"walk", one_based(v.walk)},
                {"multidegree", v.multidegree},
                {"degree_monomial", monomial_string(v.multidegree)},
                {"entries", entries}};
}

Json binomial_json(const Binomial& p) {
    auto side = [](const std::vector<int>& e) {
        Json o = Json::object();
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j]) o["T" + std::to_string(j + 1)] = e[j];
        return o;
    };
    return Json{{"plus", side(p.plus)}, {"minus", side(p.minus)}};
}

Json slice_json(const GradedSliceReport& r) {
    return Json{{"b", r.b},
                {"monomial", monomial_string(r.b)},
                {"divisors", r.divisors},
                {"dim_Z", r.dim_Z},
                {"dim_span_Z_gens", r.dim_span_Z_gens},
                {"dim_P", r.dim_P},
                {"new_min_gens", r.new_min_gens}};
}

Json incohesive_doc(const Cohesion& c) {
    return Json{{"cohesive", false},
                {"partition", Json::array({one_based(c.side_a), one_based(c.side_b)})},
                {"isolated_vars", one_based(c.isolated)}};
}

Json analyze_doc(const MonomialSet& f, const RunConfig& cfg) {
    LoopGraph g(f);
    require_cohesive(g);
    auto coh = is_cohesive(g);
    auto bip = is_bipartite(g);
    auto diam = graph_diameter(edge_graph(g));
    auto rep = is_polarizable(f);
    int dim = algebra_dimension(f);
    Json doc;
    doc["command"] = "analyze";
    doc["input"] = set_json(f);
    doc["cohesive"] = true;
    doc["isolated_vars"] = one_based(coh.isolated);
    doc["bipartite"] = bip.bipartite;
    doc["dimension"] = dim;
    doc["l_diameter"] = diam ? Json(*diam) : Json(nullptr);
    doc["linearly_presented"] = diam && *diam <= 2;
    doc["polarizable"] = rep.polarizable;
    doc["normal"] = rep.normal;
    doc["odd_cycle_condition"] = rep.odd_cycle_condition;
    doc["normal_by_bowties"] = rep.normal_by_bowties;
    Json w = Json::array();
    for (const auto& b : rep.witnesses) w.push_back(bowtie_json(b, g));
    doc["witnesses"] = w;
    Json nw = Json::array();
    for (const auto& b : rep.normality_witnesses) nw.push_back(bowtie_json(b, g));
    doc["normality_witnesses"] = nw;
    if (rep.odd_cycle_violation)
        doc["odd_cycle_violation"] = Json::array({cycle_json(rep.odd_cycle_violation->first), cycle_json(rep.odd_cycle_violation->second)});
    else
        doc["odd_cycle_violation"] = nullptr;
    Json notes = Json::array();
    if (!bip.bipartite) notes.push_back("odd cycle: " + one_based(bip.odd_cycle).dump());
    if (rep.polarizable && dim == f.n)
        notes.push_back("polarizable with dimension n: the map given by f is birational onto its image (implication only, not checked)");
    doc["implications"] = notes;
    doc["bounds"] = bounds_json(cfg);
    doc["seed"] = cfg.seed;
    return doc;
}

Json walks_doc(const MonomialSet& f, const RunConfig& cfg) {
    LoopGraph g(f);
    Json list = Json::array();
    for (const auto& w : enumerate_non_split_walks(g, cfg.max_walk_len)) list.push_back(walk_json(w, g, true));
    return Json{{"command", "walks"}, {"input", set_json(f)}, {"count", list.size()}, {"walks", list},
                {"bounds", bounds_json(cfg)}, {"seed", cfg.seed}};
}

std::string walks_dot(const MonomialSet& f, const RunConfig& cfg) {
    LoopGraph g(f);
    static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown"};
    std::string out;
    int k = 0;
    for (const auto& w : enumerate_non_split_walks(g, cfg.max_walk_len)) {
        ++k;
        std::vector<std::string> color(f.m());
        auto c = classify_configuration(w);
        if (c) {
            for (std::size_t i = 0; i < c->cycles.size(); ++i)
                for (int e : c->cycles[i].edges) color[e] = palette[i % 6];
            for (const auto& p : c->paths)
                for (int e : p) color[e] = "black\", style=\"bold,dashed";
        }
        out += "graph W" + std::to_string(k) + " {\n";
        for (int v = 0; v < f.n; ++v) out += "  x" + std::to_string(v + 1) + ";\n";
        for (int j = 0; j < f.m(); ++j) {
            const auto& e = f.gens[j];
            out += "  x" + std::to_string(e.lo + 1) + " -- x" + std::to_string(e.hi + 1) + " [label=\"f" + std::to_string(j + 1) + "\"";
            if (!color[j].empty()) out += ", color=\"" + color[j] + "\", penwidth=2";
            else out += ", color=\"gray\"";
            out += "];\n";
        }
        out += "}\n";
    }
    return out;
}

Json bowties_doc(const MonomialSet& f, const RunConfig& cfg) {
    LoopGraph g(f);
    Json list = Json::array();
    for (const auto& b : enumerate_bowties(g, cfg.max_cycle_len)) list.push_back(bowtie_json(b, g));
    Json bounds = bounds_json(cfg);
    if (cfg.max_cycle_len > 0 && cfg.max_cycle_len < g.n()) {
        bounds["max_cycle_len"] = cfg.max_cycle_len;
        bounds["truncated"] = true;
    }
    return Json{{"command", "bowties"}, {"input", set_json(f)}, {"count", list.size()}, {"bowties", list},
                {"bounds", bounds}, {"seed", cfg.seed}};
}

Json syzygies_doc(const MonomialSet& f, const RunConfig& cfg) {
    LoopGraph g(f);
    require_cohesive(g);
    Json list = Json::array();
    std::vector<SyzygyVector> vs;
    if (cfg.module == 'P') {
        for (const auto& w : enumerate_non_split_walks(g, cfg.max_walk_len)) {
            auto t = t_vector(w, f);
            Json j = syzygy_json(t);
            j["binomial"] = binomial_json(p_binomial(w, f.m()));
            j["m_factor"] = monomial_string(checked_m_factor(w, f));
            list.push_back(j);
            vs.push_back(std::move(t));
        }
    } else {
        vs = generators_Z(f);
        for (const auto& v : vs) list.push_back(syzygy_json(v));
    }
    return Json{{"command", "syzygies"},
                {"module", std::string(1, cfg.module)},
                {"input", set_json(f)},
                {"count", list.size()},
                {"vectors", list},
                {"generic_rank", generic_rank(vs, f.m(), cfg.seed)},
                {"expected_rank", f.m() - algebra_dimension(f)},
                {"truncated", cfg.module == 'P'},
                {"bounds", bounds_json(cfg)},
                {"seed", cfg.seed}};
}

Json oracle_doc(const MonomialSet& f, const RunConfig& cfg) {
    Json slices = Json::array();
    for (const auto& r : slice_reports(f, cfg.degree_bound)) slices.push_back(slice_json(r));
    auto pol = polarizable_oracle(f, cfg.degree_bound);
    auto mu = mu_Z(f, cfg.degree_bound);
    auto lin = linear_presentation_oracle(f, cfg.degree_bound);
    auto theorem = is_polarizable(f);
    bool theorem_up_to = theorem.polarizable_up_to(cfg.degree_bound);
    Json gens = Json::array();
    for (auto& [b, k] : mu.generators) gens.push_back(Json{{"b", b}, {"monomial", monomial_string(b)}, {"count", k}});
    Json summary{{"polarizable_oracle", pol.holds},
                 {"first_failure", pol.first_failure ? Json(*pol.first_failure) : Json(nullptr)},
                 {"mu_Z", mu.mu},
                 {"mu_Z_generators", gens},
                 {"linear_presentation_oracle", lin.holds},
                 {"polarizable_theorem", theorem.polarizable},
                 {"polarizable_theorem_up_to_bound", theorem_up_to},
                 {"agree_with_theorem", pol.holds == theorem_up_to},
                 {"linear_presentation_agrees", lin.holds == is_linearly_presented(f)},
                 {"truncated", pol.truncated},
                 {"verified_up_to_degree", cfg.degree_bound}};
    return Json{{"command", "oracle"}, {"input", set_json(f)}, {"slices", slices}, {"summary", summary},
                {"bounds", bounds_json(cfg)}, {"seed", cfg.seed}};
}

Json pinch_doc(const MonomialSet& f, int i, int j) {
    auto r = pinch(f, i, j);
    Json collapsed = Json::array();
    for (auto [a, b] : r.collapsed) collapsed.push_back(Json::array({a + 1, b + 1}));
    return Json{{"command", "pinch"},
                {"edge", Json::array({i + 1, j + 1})},
                {"input", set_json(f)},
                {"output", set_json(r.set)},
                {"image", one_based(r.image)},
                {"collapsed", collapsed},
                {"mon", to_mon(r.set)}};
}

namespace {

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        std::string label = j.is_object() ? it.key() : "-";
        if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
            out << indent << label << ":\n";
            render(v, indent + "  ", out);
        } else if (v.is_string()) {
            out << indent << label << ": " << v.get<std::string>() << "\n";
        } else {
            out << indent << label << ": " << v.dump() << "\n";
        }
    }
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream out;
    render(doc, "", out);
    return out.str();
}

}  // namespace polsyz
