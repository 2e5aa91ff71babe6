#include "wheelcheck/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "wheelcheck/alon_tarsi.hpp"
#include "wheelcheck/coloring.hpp"
#include "wheelcheck/enumerate.hpp"
#include "wheelcheck/extendability.hpp"
#include "wheelcheck/parallel.hpp"

namespace wheelcheck::cli {

namespace {

using nlohmann::json;

long long default_instance_budget() {
    if (const char* env = std::getenv("WHEELCHECK_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
        }
    }
    return 1'000'000;
}

PlaneGraph load_graph(const std::string& path) { return read_ptri_file(path); }

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int k = std::stoi(text);
        return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

json term_json(const Term& t) {
    json j;
    j["exponents"] = json::array();
    for (int v = 0; v < t.exps.size(); ++v) j["exponents"].push_back(t.exps[v]);
    j["coefficient"] = t.coeff.str();
    return j;
}

json wheel_json(const WheelWitness& w) {
    json j;
    j["central"] = w.central;
    j["degenerate_triangle"] = w.degenerate_triangle;
    j["components"] = json::array();
    for (const auto& c : w.components) {
        json cj;
        cj["kind"] = c.kind == WheelComponentSpec::Kind::Broken ? "broken" : "ordinary";
        cj["segment"] = c.segment;
        if (c.hub >= 0)
            cj["hub"] = c.hub;
        else
            cj["hub"] = nullptr;
        j["components"].push_back(cj);
    }
    return j;
}

json verdict_json(const std::string& graph_file, const PrincipalPath& p, const Verdict& v) {
    json j;
    j["graph"] = graph_file;
    j["path"] = {p.vk, p.v1, p.v2};
    j["outcome"] = v.extendable() ? "extendable" : "blocked";
    j["witness"] = v.witness ? term_json(*v.witness) : json(nullptr);
    j["wheel"] = v.wheel ? wheel_json(*v.wheel) : json(nullptr);
    return j;
}

void write_file(const std::string& path, const std::string& content, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
    f << content;
}

std::string describe_term(const Term& t) {
    std::ostringstream os;
    os << t.coeff << " * [";
    for (int v = 0; v < t.exps.size(); ++v) {
        if (v) os << ' ';
        os << t.exps[v];
    }
    os << ']';
    return os.str();
}

json lemma_json(const LemmaReport& rep) {
    json j;
    j["lemma"] = rep.lemma;
    j["pass"] = rep.all_pass();
    j["instances"] = json::array();
    for (const auto& inst : rep.instances) {
        json ij;
        ij["params"] = inst.params;
        ij["pass"] = inst.pass;
        if (!inst.pass) ij["detail"] = inst.detail;
        j["instances"].push_back(ij);
    }
    return j;
}

struct CapsSpec {
    std::string text;  // per-vertex list "0,2,*,4" or empty
    CapVector resolve(const PlaneGraph& g, const PrincipalPath* path) const {
        int n = g.vertex_count();
        if (!text.empty()) {
            CapVector caps = CapVector::unbounded(n);
            std::istringstream in(text);
            std::string tok;
            int v = 0;
            while (std::getline(in, tok, ',')) {
                if (v >= n) throw Error(ErrorCode::BadParameter, "too many caps");
                if (tok != "*") caps.set(v, std::stoi(tok));
                ++v;
            }
            if (v != n) throw Error(ErrorCode::BadParameter, "need one cap per vertex");
            return caps;
        }
        if (path) {
            CapVector caps = CapVector::uniform(n, 0);
            for (VertexId v = 0; v < n; ++v) caps.set(v, g.on_outer(v) ? 2 : 4);
            caps.set(path->vk, 0);
            caps.set(path->v1, 0);
            caps.set(path->v2, 0);
            return caps;
        }
        return CapVector::unbounded(n);
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph polynomials of plane near-triangulations under exponent caps"};
    app.name("wheelcheck");
    app.require_subcommand(1);

    uint64_t seed = 12345;  // fixed default, not entropy
    int jobs = 1;
    long long budget = default_instance_budget();
    app.add_option("--seed", seed, "seed for all randomized work");
    app.add_option("--jobs", jobs, "worker threads for sharded work");
    app.add_option("--budget", budget, "instance budget for enumeration");

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.fallthrough();

    // check-extend
    auto* ce = app.add_subcommand("check-extend", "3-path extendability verdict");
    std::string ce_graph, ce_dot;
    std::vector<int> ce_path;
    ce->add_option("--graph", ce_graph, "ptri file")->required();
    ce->add_option("--path", ce_path, "principal path: vk v1 v2")->expected(3)->required();
    ce->add_option("--dot", ce_dot, "write a DOT rendering");

    // check-2path
    auto* c2 = app.add_subcommand("check-2path", "boundary-edge witness");
    std::string c2_graph;
    std::vector<int> c2_edge;
    c2->add_option("--graph", c2_graph, "ptri file")->required();
    c2->add_option("--edge", c2_edge, "boundary edge: x y")->expected(2)->required();

    // short-cycle
    auto* sc = app.add_subcommand("short-cycle", "interior witness for |C| in {3,4,5}");
    std::string sc_graph;
    sc->add_option("--graph", sc_graph, "ptri file")->required();

    // verify-lemma
    auto* vl = app.add_subcommand("verify-lemma", "machine-check one lemma");
    std::string vl_id, vl_range;
    vl->add_option("id", vl_id, "lemma id")->required();
    vl->add_option("--k", vl_range, "parameter range lo..hi");

    // gen-wheel
    auto* gw = app.add_subcommand("gen-wheel", "emit a wheel as a ptri record");
    std::string gw_spec, gw_out, gw_dot;
    gw->add_option("spec", gw_spec, "wheel spec, e.g. B6+O5")->required();
    gw->add_option("--out", gw_out, "output file (default stdout)");
    gw->add_option("--dot", gw_dot, "write a DOT rendering");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "stream near-triangulations");
    int en_outer = 0, en_interior = 0;
    bool en_labeled = false;
    std::string en_out;
    en->add_option("--outer", en_outer, "outer cycle length")->required();
    en->add_option("--interior", en_interior, "max interior vertices");
    en->add_flag("--labeled", en_labeled, "raw labeled stream, no dedup");
    en->add_option("--out", en_out, "output file (default stdout)");

    // at-number
    auto* an = app.add_subcommand("at-number", "Alon-Tarsi number");
    std::string an_graph;
    an->add_option("--graph", an_graph, "ptri file")->required();

    // expand
    auto* ex = app.add_subcommand("expand", "capped polynomial dump");
    std::string ex_graph, ex_caps, ex_out;
    std::vector<int> ex_path;
    ex->add_option("--graph", ex_graph, "ptri file")->required();
    ex->add_option("--path", ex_path, "delete this principal path first")->expected(3);
    ex->add_option("--caps", ex_caps, "per-vertex caps, '*' = unbounded");
    ex->add_option("--out", ex_out, "output file (default stdout)");

    // cn-check
    auto* cn = app.add_subcommand("cn-check", "Nullstellensatz coloring bridge");
    std::string cn_graph, cn_term;
    long long cn_trials = 200;
    int cn_exhaustive = 0;
    cn->add_option("--graph", cn_graph, "ptri file")->required();
    cn->add_option("--term", cn_term, "comma-separated exponents")->required();
    cn->add_option("--trials", cn_trials, "random list assignments to test");
    cn->add_option("--exhaustive", cn_exhaustive, "universe size for a full sweep");

    std::vector<std::string> argv_copy = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("wheelcheck");
        for (const auto& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*ce) {
            auto g = load_graph(ce_graph);
            PrincipalPath p{ce_path[0], ce_path[1], ce_path[2]};
            auto v = check_3path_extendable(g, p);
            if (!ce_dot.empty()) write_file(ce_dot, to_dot(g, &p), out);
            if (as_json) {
                out << verdict_json(ce_graph, p, v).dump(2) << "\n";
            } else if (v.extendable()) {
                out << "extendable: witness " << describe_term(*v.witness) << "\n";
            } else {
                out << "blocked: generalized wheel with " << v.wheel->components.size()
                    << (v.wheel->degenerate_triangle ? " component (degenerate triangle)"
                                                     : " component(s)")
                    << "\n";
            }
            return 0;
        }
        if (*c2) {
            auto g = load_graph(c2_graph);
            auto t = check_2path_witness(g, c2_edge[0], c2_edge[1]);
            if (as_json) {
                json j;
                j["graph"] = c2_graph;
                j["edge"] = c2_edge;
                j["witness"] = term_json(t);
                out << j.dump(2) << "\n";
            } else {
                out << "witness " << describe_term(t) << "\n";
            }
            return 0;
        }
        if (*sc) {
            auto g = load_graph(sc_graph);
            auto t = check_short_outer_cycle(g);
            if (as_json) {
                json j;
                j["graph"] = sc_graph;
                j["witness"] = term_json(t);
                out << j.dump(2) << "\n";
            } else {
                out << "witness " << describe_term(t) << "\n";
            }
            return 0;
        }
        if (*vl) {
            int lo = 1, hi = 0;
            if (!vl_range.empty()) {
                std::tie(lo, hi) = parse_range(vl_range);
            } else {
                lo = 1;
                hi = 5;
            }
            LemmaReport rep;
            if (jobs > 1 && hi > lo) {
                auto parts = parallel_map<LemmaReport>(hi - lo + 1, jobs, [&](int i) {
                    return verify_lemma(vl_id, lo + i, lo + i);
                });
                rep.lemma = parts.front().lemma;
                for (auto& part : parts)
                    for (auto& inst : part.instances) rep.instances.push_back(std::move(inst));
            } else {
                rep = verify_lemma(vl_id, lo, hi);
            }
            if (as_json) {
                out << lemma_json(rep).dump(2) << "\n";
            } else {
                for (const auto& inst : rep.instances) {
                    out << rep.lemma << " (";
                    for (size_t i = 0; i < inst.params.size(); ++i)
                        out << (i ? " " : "") << inst.params[i];
                    out << "): " << (inst.pass ? "pass" : "FAIL") << "\n";
                    if (!inst.pass) out << inst.detail << "\n";
                }
                out << rep.lemma << ": " << (rep.all_pass() ? "all pass" : "FAILURES") << "\n";
            }
            return rep.all_pass() ? 0 : 2;
        }
        if (*gw) {
            auto built = build_wheel(WheelSpec::parse(gw_spec));
            std::ostringstream os;
            os << "# wheel " << gw_spec << ", principal path " << built.path.vk << ' '
               << built.path.v1 << ' ' << built.path.v2 << "\n";
            write_ptri(os, built.graph);
            write_file(gw_out, os.str(), out);
            if (!gw_dot.empty()) write_file(gw_dot, to_dot(built.graph, &built.path), out);
            return 0;
        }
        if (*en) {
            EnumerateOptions opts;
            opts.max_interior = en_interior;
            opts.dedup = !en_labeled;
            opts.instance_budget = budget;
            std::ostringstream os;
            long long count = 0;
            enumerate_near_triangulations(en_outer, opts, [&](const PlaneGraph& g) {
                ++count;
                write_ptri(os, g);
            });
            write_file(en_out, os.str(), out);
            err << count << " instance(s)\n";
            return 0;
        }
        if (*an) {
            auto g = load_graph(an_graph);
            out << at_number(g) << "\n";
            return 0;
        }
        if (*ex) {
            auto g = load_graph(ex_graph);
            PlaneGraph target = g;
            std::optional<PrincipalPath> path;
            if (!ex_path.empty()) {
                path = PrincipalPath{ex_path[0], ex_path[1], ex_path[2]};
                require_principal_path(g, *path);
                target = remove_path_edges(g, *path);
            }
            CapsSpec spec{ex_caps};
            auto caps = spec.resolve(g, path ? &*path : nullptr);
            auto p = graph_polynomial(target, identity_ordering(g.vertex_count()), caps);
            std::ostringstream os;
            dump_polynomial(os, p);
            write_file(ex_out, os.str(), out);
            return 0;
        }
        if (*cn) {
            auto g = load_graph(cn_graph);
            std::vector<int> exps;
            std::istringstream ts(cn_term);
            std::string tok;
            while (std::getline(ts, tok, ',')) exps.push_back(std::stoi(tok));
            if (static_cast<int>(exps.size()) != g.vertex_count())
                throw Error(ErrorCode::BadParameter, "term size mismatch");
            auto term = ExponentVector::of(exps);
            CnCheckReport rep = cn_exhaustive > 0
                                    ? cn_implication_check_exhaustive(g, term, cn_exhaustive)
                                    : cn_implication_check(g, term, cn_trials, seed);
            if (as_json) {
                json j;
                j["graph"] = cn_graph;
                j["trials"] = rep.trials;
                j["failures"] = rep.failures;
                j["seed"] = rep.seed;
                out << j.dump(2) << "\n";
            } else {
                out << rep.trials << " assignment(s), " << rep.failures << " failure(s)\n";
            }
            return rep.ok() ? 0 : 2;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.code() == ErrorCode::TheoremViolation ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace wheelcheck::cli
