// Command line front end: embedding decisions, enumeration, star-forcing
// predictions, exact sweeps and the verification campaigns, all JSON-first.
// Exit codes: 0 success, 1 flagged negative result, 2 usage error,
// 3 internal contradiction (a falsifying event, kept unmissable).

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "treedeg/embed.hpp"
#include "treedeg/errors.hpp"
#include "treedeg/graph.hpp"
#include "treedeg/graph_io.hpp"
#include "treedeg/numerics.hpp"
#include "treedeg/oracle.hpp"
#include "treedeg/parallel.hpp"
#include "treedeg/ramsey.hpp"
#include "treedeg/tree.hpp"
#include "treedeg/verify.hpp"

using nlohmann::json;
using namespace treedeg;

namespace {

struct Common {
    bool pretty = false;
    std::string out;
    int jobs = 0;
    bool fail_on_negative = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool file_exists(const std::string& path) {
    std::ifstream in(path);
    return bool(in);
}

// graph6 payloads never start with a digit (every size byte is >= 63), so a
// leading digit reliably marks the plain-text formats.
bool digits_first(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }
    return false;
}

Tree parse_tree_spec(const std::string& spec) {
    if (spec.rfind("tpq:", 0) == 0) {
        std::istringstream in(spec.substr(4));
        int p = 0, q = 0;
        char comma = 0;
        std::string rest;
        if (!(in >> p >> comma >> q) || comma != ',' || (in >> rest))
            throw ParseError("tree spec: expected tpq:p,q");
        return make_tpq(p, q);
    }
    std::string text = file_exists(spec) ? slurp(spec) : spec;
    if (digits_first(text)) return from_parent_array(text);
    return Tree(from_graph6(text));
}

Graph parse_graph_spec(const std::string& spec) {
    std::string text = file_exists(spec) ? slurp(spec) : spec;
    if (digits_first(text)) return from_edge_list(text);
    return from_graph6(text);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + out_path);
    out << text;
}

std::string hash_hex(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Two-column rendering of a flat object; nested values are dumped inline.
std::string kv_table(const json& j) {
    size_t width = 0;
    for (auto& [key, value] : j.items()) width = std::max(width, key.size());
    std::ostringstream out;
    for (auto& [key, value] : j.items())
        out << key << std::string(width - key.size() + 2, ' ') << scalar_text(value)
            << "\n";
    return out.str();
}

std::string render(const json& j, const Common& c) {
    if (c.pretty) return kv_table(j);
    return j.dump() + "\n";
}

json verdict_json(const Tree& t, const Graph& g, const EmbedVerdict& v,
                  bool with_witness) {
    json j;
    j["tree"] = to_graph6(t.graph());
    j["graph"] = to_graph6(g);
    j["n"] = t.vertex_count();
    j["status"] = to_string(v.status);
    switch (v.status) {
        case EmbedStatus::ExceptionBipartite:
            j["p"] = v.p;
            break;
        case EmbedStatus::ExceptionMultipartite:
            j["k"] = v.k;
            j["a"] = v.a;
            break;
        case EmbedStatus::OutOfScope:
            j["reason"] = v.reason;
            break;
        case EmbedStatus::Embeddable:
            if (with_witness) {
                j["strategy"] = v.strategy;
                j["witness"] = v.witness->map;
            }
            break;
    }
    return j;
}

int run_verdict(const std::string& tree_spec, const std::string& graph_spec,
                bool with_witness, bool fallback, const Common& c) {
    Tree t = parse_tree_spec(tree_spec);
    Graph g = parse_graph_spec(graph_spec);
    EmbedVerdict v = decide_and_embed(t, g);
    json j = verdict_json(t, g, v, with_witness);
    if (fallback && v.status == EmbedStatus::OutOfScope) {
        json oracle;
        if (t.vertex_count() <= g.vertex_count()) {
            auto e = subgraph_embed(t.graph(), g);
            oracle["embeddable"] = e.has_value();
            if (e && with_witness) oracle["witness"] = e->map;
        } else {
            oracle["embeddable"] = false;
        }
        j["oracle"] = oracle;
    }
    emit(render(j, c), c.out);
    return c.fail_on_negative && v.status != EmbedStatus::Embeddable ? 1 : 0;
}

std::string items_text(const json& j) {
    std::ostringstream out;
    out << j["kind"].get<std::string>() << " n=" << j["n"].get<int>()
        << " count=" << j["count"].get<std::size_t>() << "\n";
    for (const auto& item : j["items"]) out << item.get<std::string>() << "\n";
    return out.str();
}

int run_enumerate_trees(int n, int max_degree, const Common& c) {
    auto trees = enumerate_trees(n, max_degree);
    json j;
    j["kind"] = "trees";
    j["n"] = n;
    j["max_degree"] = max_degree < 0 ? json(nullptr) : json(max_degree);
    j["count"] = trees.size();
    json items = json::array();
    for (const Tree& t : trees) items.push_back(to_graph6(t.graph()));
    j["items"] = items;
    emit(c.pretty ? items_text(j) : j.dump() + "\n", c.out);
    return 0;
}

int run_enumerate_graphs(int n, int min_degree, bool connected,
                         const std::string& mode, const Common& c) {
    EnumMode m = EnumMode::Auto;
    if (mode == "direct") m = EnumMode::Direct;
    if (mode == "complement") m = EnumMode::Complement;
    auto graphs = enumerate_graphs(n, min_degree, connected, m, c.jobs);
    json j;
    j["kind"] = "graphs";
    j["n"] = n;
    j["min_degree"] = min_degree;
    j["connected"] = connected;
    j["mode"] = mode;
    j["count"] = graphs.size();
    json items = json::array();
    for (const Graph& g : graphs) items.push_back(to_graph6(g));
    j["items"] = items;
    emit(c.pretty ? items_text(j) : j.dump() + "\n", c.out);
    return 0;
}

json side_json(const SideConditions& s) {
    json j;
    j["in_exact_m_family"] = s.in_exact_m_family;
    j["tpq"] = s.tpq ? json{{"p", s.tpq->p}, {"q", s.tpq->q}} : json(nullptr);
    j["base_parts_member"] =
        s.base_parts_member ? json(*s.base_parts_member) : json(nullptr);
    j["divisor_parts_member"] =
        s.divisor_parts_member ? json(*s.divisor_parts_member) : json(nullptr);
    j["both_ends_parts_member"] =
        s.both_ends_parts_member ? json(*s.both_ends_parts_member) : json(nullptr);
    return j;
}

int run_predict(const std::string& tree_spec, int m, const Common& c) {
    Tree t = parse_tree_spec(tree_spec);
    RamseyPrediction r = predict_ramsey(t, m);
    json j;
    j["tree"] = to_graph6(t.graph());
    j["n"] = t.vertex_count();
    j["m"] = m;
    j["rule"] = to_string(r.rule);
    j["exact"] = r.exact;
    j["value"] = r.value ? json(*r.value) : json(nullptr);
    j["side_conditions"] = side_json(r.side);
    emit(render(j, c), c.out);
    return 0;
}

int run_exact(const std::string& tree_spec, int m, int cap, const Common& c) {
    Tree t = parse_tree_spec(tree_spec);
    auto r = exact_ramsey(t, m, cap, c.jobs);
    json j;
    j["tree"] = to_graph6(t.graph());
    j["m"] = m;
    j["cap"] = cap;
    j["found"] = r.has_value();
    if (r) {
        j["value"] = r->value;
        j["lower_witness"] = json{{"n", r->lower_witness.n},
                                  {"red", to_graph6(r->lower_witness.red)}};
        j["certificate"] =
            json{{"classes_checked", r->certificate.classes_checked},
                 {"class_list_hash", hash_hex(r->certificate.class_list_hash)}};
    }
    emit(render(j, c), c.out);
    return c.fail_on_negative && !r ? 1 : 0;
}

json row_json(const CampaignRow& row) {
    json j;
    j["n"] = row.n;
    j["k"] = row.k;
    j["m"] = row.m;
    j["tree"] = row.tree_id;
    j["rule"] = row.rule;
    j["predicted"] = row.predicted ? json(*row.predicted) : json(nullptr);
    j["predicted_exact"] = row.predicted_exact;
    j["exact"] = row.exact ? json(*row.exact) : json(nullptr);
    j["lower_witness_valid"] = row.lower_witness_valid;
    j["note"] = row.note;
    return j;
}

int run_campaign(int n_lo, int n_hi, int k_lo, int k_hi, const Common& c) {
    auto rows = ramsey_campaign({n_lo, n_hi}, {k_lo, k_hi}, c.jobs);
    std::ostringstream out;
    bool all_ok = true;
    for (const CampaignRow& row : rows) {
        bool ok = row.lower_witness_valid &&
                  (!row.exact || !row.predicted || *row.exact == *row.predicted);
        all_ok = all_ok && ok;
        if (c.pretty)
            out << "n=" << row.n << " k=" << row.k << " m=" << row.m << " "
                << row.tree_id << " " << row.rule << " predicted="
                << (row.predicted ? std::to_string(*row.predicted) : "-")
                << " exact=" << (row.exact ? std::to_string(*row.exact) : "-")
                << " witness=" << (row.lower_witness_valid ? "ok" : "BAD")
                << (row.note.empty() ? "" : " (" + row.note + ")") << "\n";
        else
            out << row_json(row).dump() << "\n";
    }
    emit(out.str(), c.out);
    return c.fail_on_negative && !all_ok ? 1 : 0;
}

int run_selftest(const std::vector<std::string>& tokens, std::vector<int> ns,
                 std::size_t random_pairs, std::uint64_t seed, const Common& c) {
    if (ns.empty()) ns = {5, 6, 7};
    std::vector<std::string> names;
    for (const std::string& raw : tokens) {
        std::string name = raw;
        if (name == "theorem1") name = "embedding_equivalence";
        if (name == "fact1") name = "m_family_equivalence";
        if (name == "all") {
            names.insert(names.end(),
                         {"embedding_equivalence", "exception_instances",
                          "m_family_equivalence", "desk_tables",
                          "lower_bound_witnesses", "path_lemmas",
                          "enumeration_oracles"});
        } else {
            names.push_back(name);
        }
    }
    std::vector<SuiteResult> results;
    for (const std::string& name : names) {
        if (name == "embedding_equivalence") {
            results.push_back(
                check_embedding_equivalence(ns, random_pairs, seed, c.jobs));
        } else if (name == "exception_instances") {
            results.push_back(check_exception_instances());
        } else if (name == "m_family_equivalence") {
            results.push_back(check_m_family_equivalence());
        } else if (name == "desk_tables") {
            results.push_back(check_desk_tables(c.jobs));
        } else if (name == "lower_bound_witnesses") {
            results.push_back(check_lower_bound_witnesses(c.jobs));
        } else if (name == "path_lemmas") {
            results.push_back(check_path_lemmas(seed, c.jobs));
        } else {
            results.push_back(check_enumeration_oracles(c.jobs));
        }
    }

    bool all_pass = true;
    json suites = json::array();
    std::ostringstream table;
    for (const SuiteResult& r : results) {
        all_pass = all_pass && r.pass;
        suites.push_back(json{{"name", r.name},
                              {"pass", r.pass},
                              {"checked", r.checked},
                              {"failures", r.failures},
                              {"detail", r.detail}});
        table << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << " ("
              << r.checked << " checks)" << (r.detail.empty() ? "" : " " + r.detail)
              << "\n";
    }
    json j;
    j["pass"] = all_pass;
    j["seed"] = seed;
    j["suites"] = suites;
    emit(c.pretty ? table.str() : j.dump() + "\n", c.out);
    return all_pass ? 0 : 1;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--pretty", c.pretty, "human-readable table instead of JSON");
    sub->add_option("--out", c.out, "write output to this file instead of stdout");
    sub->add_option("--jobs", c.jobs,
                    "worker threads (default: TREEDEG_JOBS or all cores)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree embeddings under degree bounds, with star-forcing sweeps"};
    app.require_subcommand(1);

    Common c;
    std::string tree_spec, graph_spec;
    bool fallback = false;
    int n = 0, n_hi = -1, k_lo = 0, k_hi = -1;
    int max_degree = -1, min_degree = 0, m = 3, cap = 10;
    bool connected = false;
    std::string mode = "auto";
    std::vector<std::string> suites{"all"};
    std::vector<int> ns;
    std::size_t random_pairs = 0;
    std::uint64_t seed = 424242;
    int rc = 0;

    const std::string tree_help = "tree: file, tpq:p,q, graph6 or parent array";
    const std::string graph_help = "graph: file, graph6 or edge list";

    CLI::App* embed = app.add_subcommand("embed", "decide and emit a witness");
    embed->add_option("--tree", tree_spec, tree_help)->required();
    embed->add_option("--graph", graph_spec, graph_help)->required();
    embed->add_flag("--fallback-oracle", fallback,
                    "on out-of-scope inputs, attempt the exhaustive search too");
    embed->add_flag("--fail-on-negative", c.fail_on_negative,
                    "exit 1 unless the verdict is embeddable");
    add_common(embed, c);
    embed->callback([&] { rc = run_verdict(tree_spec, graph_spec, true, fallback, c); });

    CLI::App* decide = app.add_subcommand("decide", "decide without a witness");
    decide->add_option("--tree", tree_spec, tree_help)->required();
    decide->add_option("--graph", graph_spec, graph_help)->required();
    decide->add_flag("--fallback-oracle", fallback,
                     "on out-of-scope inputs, attempt the exhaustive search too");
    decide->add_flag("--fail-on-negative", c.fail_on_negative,
                     "exit 1 unless the verdict is embeddable");
    add_common(decide, c);
    decide->callback(
        [&] { rc = run_verdict(tree_spec, graph_spec, false, fallback, c); });

    CLI::App* et = app.add_subcommand("enumerate-trees",
                                      "isomorph-free trees, ascending");
    et->add_option("--n", n, "vertex count")->required()->check(CLI::Range(1, 12));
    et->add_option("--max-degree", max_degree, "cap on the maximum degree");
    add_common(et, c);
    et->callback([&] { rc = run_enumerate_trees(n, max_degree, c); });

    CLI::App* eg = app.add_subcommand("enumerate-graphs",
                                      "isomorph-free graphs, ascending");
    eg->add_option("--n", n, "vertex count")->required()->check(CLI::Range(1, 14));
    eg->add_option("--min-degree", min_degree, "minimum degree floor");
    eg->add_flag("--connected", connected, "connected graphs only");
    eg->add_option("--mode", mode, "growth strategy")
        ->check(CLI::IsMember({"auto", "direct", "complement"}));
    add_common(eg, c);
    eg->callback([&] { rc = run_enumerate_graphs(n, min_degree, connected, mode, c); });

    CLI::App* ramsey = app.add_subcommand("ramsey", "star-forcing numbers");
    ramsey->require_subcommand(1);

    CLI::App* predict = ramsey->add_subcommand("predict", "closed-form prediction");
    predict->add_option("--tree", tree_spec, tree_help)->required();
    predict->add_option("--m", m, "star order")->required();
    add_common(predict, c);
    predict->callback([&] { rc = run_predict(tree_spec, m, c); });

    CLI::App* exact = ramsey->add_subcommand("exact", "exhaustive sweep");
    exact->add_option("--tree", tree_spec, tree_help)->required();
    exact->add_option("--m", m, "star order")->required();
    exact->add_option("--cap", cap, "largest board size to certify");
    exact->add_flag("--fail-on-negative", c.fail_on_negative,
                    "exit 1 when no value is certified under the cap");
    add_common(exact, c);
    exact->callback([&] { rc = run_exact(tree_spec, m, cap, c); });

    CLI::App* campaign = ramsey->add_subcommand("campaign",
                                                "predict and verify over a range");
    campaign->add_option("--n", n, "tree order (lower end)")->required();
    campaign->add_option("--n-hi", n_hi, "tree order (upper end, default --n)");
    campaign->add_option("--k", k_lo, "family index (lower end)");
    campaign->add_option("--k-hi", k_hi, "family index (upper end, default --k)");
    campaign->add_flag("--fail-on-negative", c.fail_on_negative,
                       "exit 1 when any row fails verification");
    add_common(campaign, c);
    campaign->callback([&] {
        rc = run_campaign(n, n_hi < 0 ? n : n_hi, k_lo, k_hi < 0 ? k_lo : k_hi, c);
    });

    CLI::App* selftest = app.add_subcommand("selftest", "verification suites");
    selftest->add_option("suites", suites, "suites to run")
        ->check(CLI::IsMember({"all", "embedding_equivalence", "theorem1",
                               "exception_instances", "m_family_equivalence",
                               "fact1", "desk_tables", "lower_bound_witnesses",
                               "path_lemmas", "enumeration_oracles"}));
    selftest->add_option("--n", ns, "tree orders for the exhaustive sweep")
        ->check(CLI::Range(5, 9));
    selftest->add_option("--random", random_pairs,
                         "seeded random pairs on top of the exhaustive sweep");
    selftest->add_option("--seed", seed, "seed for randomized phases");
    add_common(selftest, c);
    selftest->callback([&] { rc = run_selftest(suites, ns, random_pairs, seed, c); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InternalContradictionError& e) {
        std::fprintf(stderr, "internal contradiction: %s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
