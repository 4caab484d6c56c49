#include "treedeg/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "treedeg/embed.hpp"
#include "treedeg/graph.hpp"
#include "treedeg/graph_io.hpp"
#include "treedeg/numerics.hpp"
#include "treedeg/oracle.hpp"
#include "treedeg/parallel.hpp"
#include "treedeg/ramsey.hpp"
#include "treedeg/tree.hpp"

namespace treedeg {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Lowest-index-first failure capture; chunks merge in chunk order so the
// reported first failure is deterministic under any job count.
struct FailLog {
    std::size_t failures = 0;
    std::string first;
    void add(std::string msg) {
        if (failures++ == 0) first = std::move(msg);
    }
    void merge(const FailLog& o) {
        if (failures == 0 && o.failures > 0) first = o.first;
        failures += o.failures;
    }
};

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Tree random_tree(int n, std::mt19937_64& r, int max_degree) {
    if (n <= 2) return Tree(path_graph(n));
    for (;;) {
        std::vector<int> seq(std::size_t(n - 2));
        for (auto& v : seq) v = int(r() % std::uint64_t(n));
        Tree t = prufer_decode(seq);
        if (max_degree < 0 || t.max_degree() <= max_degree) return t;
    }
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    Graph h(g.vertex_count());
    for (auto [u, v] : g.edges()) h.add_edge(perm[std::size_t(u)], perm[std::size_t(v)]);
    return h;
}

void finish(SuiteResult& res, const FailLog& log, Clock::time_point t0, std::string summary) {
    res.failures = log.failures;
    res.pass = log.failures == 0;
    res.detail = log.failures ? log.first : std::move(summary);
    res.seconds = since(t0);
}

// One decision-versus-oracle comparison; exception pairs are recorded by
// canonical form so class counts can be pinned per n.
void check_pair(const Tree& t, const Graph& g, int n, FailLog& log,
                std::set<std::pair<std::string, std::string>>* exc) {
    auto id = [&] {
        return to_graph6(canonical_relabel(t.graph())) + " into " +
               to_graph6(canonical_relabel(g));
    };
    EmbedVerdict v = decide_and_embed(t, g);
    auto oracle = subgraph_embed(t.graph(), g);
    switch (v.status) {
        case EmbedStatus::Embeddable:
            if (!oracle) {
                log.add("decision embeddable, oracle fails: " + id());
            } else if (!v.witness || !is_valid_embedding(t.graph(), g, *v.witness, true)) {
                log.add("invalid embedding witness: " + id());
            }
            return;
        case EmbedStatus::ExceptionBipartite: {
            if (oracle) {
                log.add("bipartite exception but oracle embeds: " + id());
                return;
            }
            auto half = is_balanced_bipartite_ktt(g);
            if (!half || *half != n - 3 || !recognize_tpq(t)) {
                log.add("bipartite exception on unrecognized shape: " + id());
                return;
            }
            if (exc) exc->emplace(canonical_form(t.graph()), canonical_form(g));
            return;
        }
        case EmbedStatus::ExceptionMultipartite: {
            if (oracle) {
                log.add("multipartite exception but oracle embeds: " + id());
                return;
            }
            auto shape = is_balanced_complete_multipartite(g);
            bool ok = shape && shape->parts >= 3 &&
                      (shape->parts - 1) * shape->part_size == n - 3 && is_t1_nminus4(t);
            if (!ok) {
                log.add("multipartite exception on unrecognized shape: " + id());
                return;
            }
            if (exc) exc->emplace(canonical_form(t.graph()), canonical_form(g));
            return;
        }
        case EmbedStatus::OutOfScope:
            log.add("in-scope pair reported out of scope: " + id());
            return;
    }
}

}  // namespace

SuiteResult check_embedding_equivalence(std::span<const int> exhaustive_ns,
                                        std::size_t random_pairs, std::uint64_t seed,
                                        int jobs) {
    SuiteResult res;
    res.name = "embedding_equivalence";
    auto t0 = Clock::now();
    FailLog log;
    std::ostringstream summary;
    for (int n : exhaustive_ns) {
        auto trees = enumerate_trees(n, n - 3);
        std::vector<Graph> hosts;
        int h_hi = n <= 6 ? n + 3 : n + 1;
        for (int hn = n; hn <= h_hi; ++hn) {
            auto part = enumerate_graphs(hn, n - 3, true, EnumMode::Auto, jobs);
            for (auto& g : part) hosts.push_back(std::move(g));
        }
        std::size_t total = trees.size() * hosts.size();
        std::size_t nch = std::min<std::size_t>(std::size_t(default_jobs(jobs)),
                                                std::max<std::size_t>(total, 1));
        std::vector<FailLog> logs(nch);
        std::vector<std::set<std::pair<std::string, std::string>>> excs(nch);
        parallel_chunks(total, int(nch), [&](std::size_t c, std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i)
                check_pair(trees[i / hosts.size()], hosts[i % hosts.size()], n, logs[c],
                           &excs[c]);
        });
        std::set<std::pair<std::string, std::string>> exc;
        for (std::size_t c = 0; c < nch; ++c) {
            log.merge(logs[c]);
            exc.merge(excs[c]);
        }
        res.checked += total;
        int expected = n == 5 ? 0 : n == 6 ? 1 : n == 7 ? 2 : -1;
        if (expected >= 0 && int(exc.size()) != expected) {
            std::ostringstream o;
            o << "n=" << n << ": expected " << expected << " exception classes, found "
              << exc.size();
            log.add(o.str());
        }
        if (n == 6 &&
            !exc.count({canonical_form(make_tpq(1, 2).graph()),
                        canonical_form(complete_bipartite(3, 3))}))
            log.add("n=6 bipartite exception pair missing");
        summary << "n=" << n << ": " << trees.size() << " trees x " << hosts.size()
                << " hosts, " << exc.size() << " exception classes; ";
    }
    if (random_pairs > 0) {
        std::size_t nch = std::min<std::size_t>(std::size_t(default_jobs(jobs)), random_pairs);
        std::vector<FailLog> logs(nch);
        parallel_chunks(random_pairs, int(nch), [&](std::size_t c, std::size_t lo,
                                                    std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                std::mt19937_64 r(splitmix(seed + i));
                int n = (i % 2) ? 9 : 8;
                int hn = n + int(r() % 4);
                Graph host = random_graph(hn, n - 3, r());
                Tree t = random_tree(n, r, n - 3);
                check_pair(t, host, n, logs[c], nullptr);
            }
        });
        for (auto& l : logs) log.merge(l);
        res.checked += random_pairs;
        summary << random_pairs << " random pairs at n in {8,9}";
    }
    finish(res, log, t0, summary.str());
    return res;
}

SuiteResult check_exception_instances() {
    SuiteResult res;
    res.name = "exception_instances";
    auto t0 = Clock::now();
    FailLog log;
    Graph host = complete_multipartite(3, 3);
    Tree t15 = make_tpq(1, 5);
    EmbedVerdict v = decide_and_embed(t15, host);
    if (v.status != EmbedStatus::ExceptionMultipartite || v.k != 2 || v.a != 3)
        log.add("T(1,5) vs three balanced parts: wrong verdict " +
                std::string(to_string(v.status)));
    if (subgraph_embed(t15.graph(), host))
        log.add("oracle embeds T(1,5) into the three-part host");
    Tree t24 = make_tpq(2, 4);
    EmbedVerdict w = decide_and_embed(t24, host);
    if (w.status != EmbedStatus::Embeddable || !w.witness ||
        !is_valid_embedding(t24.graph(), host, *w.witness, true))
        log.add("T(2,4) vs three balanced parts: expected a valid embedding");
    res.checked = 2;
    finish(res, log, t0, "exception shape and its embeddable sibling behave as pinned");
    return res;
}

SuiteResult check_m_family_equivalence() {
    SuiteResult res;
    res.name = "m_family_equivalence";
    auto t0 = Clock::now();
    FailLog log;
    for (int n = 5; n <= 40; ++n) {
        std::array<int, 2> ps{n - 1, n - 2};
        for (int m = 1; m <= 300; ++m) {
            bool lhs = exact_m_family(m, n);
            bool rhs = is_lin_comb(m + n - 4, ps) && !is_lin_comb(m + n - 3, ps);
            if (lhs != rhs) {
                std::ostringstream o;
                o << "m=" << m << " n=" << n << ": family predicate " << lhs
                  << " vs combination test " << rhs;
                log.add(o.str());
            }
            ++res.checked;
        }
    }
    finish(res, log, t0, "10800 (m, n) pairs agree with the combination DP");
    return res;
}

SuiteResult check_desk_tables(int jobs) {
    SuiteResult res;
    res.name = "desk_tables";
    auto t0 = Clock::now();
    FailLog log;
    std::ostringstream table;
    for (int n : {6, 7}) {
        auto trees = enumerate_trees(n, n - 3);
        std::size_t expected = n == 6 ? 4 : 9;
        if (trees.size() != expected) {
            std::ostringstream o;
            o << "n=" << n << ": expected " << expected << " in-scope trees, found "
              << trees.size();
            log.add(o.str());
        }
        std::multiset<int> values;
        for (const Tree& t : trees) {
            auto pred = predict_ramsey(t, 3);
            auto ex = exact_ramsey(t, 3, 3 + n - 2, jobs);
            ++res.checked;
            if (!pred.value || !pred.exact || !ex) {
                log.add("n=" + std::to_string(n) + ": prediction or sweep incomplete");
                continue;
            }
            if (*pred.value != ex->value) {
                std::ostringstream o;
                o << "n=" << n << " tree " << canonical_form(t.graph()) << ": predicted "
                  << *pred.value << ", exact " << ex->value;
                log.add(o.str());
            }
            bool tpq = recognize_tpq(t).has_value();
            int want = n == 6 ? (tpq ? 7 : 6) : 7;
            if (ex->value != want) {
                std::ostringstream o;
                o << "n=" << n << " tree " << canonical_form(t.graph()) << ": value "
                  << ex->value << ", pinned " << want;
                log.add(o.str());
            }
            values.insert(ex->value);
            table << canonical_form(t.graph()) << " " << to_string(pred.rule) << " "
                  << ex->value << "; ";
        }
        if (n == 6 && values != std::multiset<int>{6, 6, 6, 7})
            log.add("n=6 value multiset is not {6,6,6,7}");
    }
    for (auto [p, q] : {std::pair{1, 2}, std::pair{2, 1}}) {
        auto ex = exact_ramsey(make_tpq(p, q), 3, 7, jobs);
        ++res.checked;
        if (!ex || ex->value != 7) {
            std::ostringstream o;
            o << "T(" << p << "," << q << ") at m=3: expected exact 7";
            log.add(o.str());
        }
    }
    finish(res, log, t0, table.str());
    return res;
}

SuiteResult check_lower_bound_witnesses(int jobs) {
    SuiteResult res;
    res.name = "lower_bound_witnesses";
    auto t0 = Clock::now();
    FailLog log;
    auto rows = ramsey_campaign({6, 9}, {0, 4}, jobs);
    for (const auto& row : rows) {
        ++res.checked;
        if (!row.lower_witness_valid) {
            std::ostringstream o;
            o << "n=" << row.n << " k=" << row.k << " tree " << row.tree_id
              << ": lower witness failed";
            log.add(o.str());
        }
        if (!row.predicted || !row.predicted_exact) {
            std::ostringstream o;
            o << "n=" << row.n << " k=" << row.k << " tree " << row.tree_id
              << ": no exact prediction inside the m-family";
            log.add(o.str());
        }
        if (row.exact && row.predicted && *row.exact != *row.predicted) {
            std::ostringstream o;
            o << "n=" << row.n << " k=" << row.k << " tree " << row.tree_id << ": exact "
              << *row.exact << " vs predicted " << *row.predicted;
            log.add(o.str());
        }
    }
    std::ostringstream summary;
    summary << rows.size() << " campaign rows, all witnesses verified";
    finish(res, log, t0, summary.str());
    return res;
}

SuiteResult check_path_lemmas(std::uint64_t seed, int jobs) {
    SuiteResult res;
    res.name = "path_lemmas";
    auto t0 = Clock::now();
    FailLog log;
    std::vector<std::vector<Graph>> conn(9);
    for (int n = 1; n <= 8; ++n) conn[std::size_t(n)] = enumerate_graphs(n, 0, true, EnumMode::Auto, jobs);

    // Long-path guarantee on every connected graph up to 8 vertices.
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : conn[std::size_t(n)]) {
            Path p = dirac_path(g);
            int bound = std::min(n, 2 * degree_stats(g).first + 1);
            ++res.checked;
            if (!is_valid_path(g, p) || p.size() < bound)
                log.add("long-path bound failed on " + to_graph6(g));
        }
    }

    // Escape paths on seeded precondition-satisfying instances.
    constexpr std::size_t escape_runs = 10000;
    {
        std::size_t nch = std::min<std::size_t>(std::size_t(default_jobs(jobs)), escape_runs);
        std::vector<FailLog> logs(nch);
        parallel_chunks(escape_runs, int(nch), [&](std::size_t c, std::size_t lo,
                                                   std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                std::mt19937_64 r(splitmix(seed ^ (0x100000 + i)));
                int n = 6 + int(r() % 3);
                const auto& corpus = conn[std::size_t(n)];
                const Graph& g = corpus[r() % corpus.size()];
                VertexSet s0(n), s1(n);
                int alpha = -1;
                for (int attempt = 0; attempt < 64 && alpha < 0; ++attempt) {
                    s1 = VertexSet(n);
                    int k1 = int(r() % 3);
                    for (int j = 0; j < k1; ++j) s1.set(int(r() % std::uint64_t(n)));
                    s0 = s1;
                    s1.for_each([&](int v) { s0 |= g.neighbors(v); });
                    for (int v = 0; v < n; ++v)
                        if (!s0.test(v) && r() % 4 == 0) s0.set(v);
                    if (s0.none() || int(s0.count()) == n || s0.count() == s1.count())
                        continue;
                    std::vector<int> alphas;
                    s0.for_each([&](int v) {
                        VertexSet out = g.neighbors(v);
                        out -= s0;
                        if (out.any()) alphas.push_back(v);
                    });
                    if (!alphas.empty()) alpha = alphas[r() % alphas.size()];
                }
                if (alpha < 0) continue;  // no admissible shape grown, skip
                Path p = escape_path(g, s0, s1, alpha);
                int bound = int(s1.count()) + degree_stats(g).first - int(s0.count()) + 1;
                bool ok = is_valid_path(g, p) && p.size() >= 1 &&
                          p.size() >= bound && g.neighbors(alpha).test(p.verts[0]);
                for (int v : p.verts)
                    if (s0.test(v)) ok = false;
                if (!ok) logs[c].add("escape path violated its bound on " + to_graph6(g));
            }
        });
        for (auto& l : logs) log.merge(l);
        res.checked += escape_runs;
    }

    // Induced centre-edge-edge triples exist exactly off the complete graphs.
    for (int n = 3; n <= 7; ++n) {
        for (const Graph& g : conn[std::size_t(n)]) {
            bool complete = g.edge_count() == n * (n - 1) / 2;
            auto trip = induced_p3(g);
            ++res.checked;
            if (complete != !trip.has_value()) {
                log.add("induced triple presence wrong on " + to_graph6(g));
                continue;
            }
            if (trip) {
                bool ok = g.has_edge(trip->alpha, trip->beta) &&
                          g.has_edge(trip->alpha, trip->gamma) &&
                          !g.has_edge(trip->beta, trip->gamma);
                if (!ok) log.add("induced triple malformed on " + to_graph6(g));
            }
        }
    }

    // Greedy embedding never blocks once host degrees reach n-1.
    constexpr std::size_t greedy_runs = 10000;
    {
        std::size_t nch = std::min<std::size_t>(std::size_t(default_jobs(jobs)), greedy_runs);
        std::vector<FailLog> logs(nch);
        parallel_chunks(greedy_runs, int(nch), [&](std::size_t c, std::size_t lo,
                                                   std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                std::mt19937_64 r(splitmix(seed ^ (0x200000 + i)));
                int n = 3 + int(r() % 6);
                int hn = n + int(r() % 4);
                Graph host = random_graph(hn, n - 1, r());
                Tree t = random_tree(n, r, -1);
                auto lab = conventional_labelling_bfs(t, 0);
                auto e = embed_greedy(t, host, lab);
                if (!e || !is_valid_embedding(t.graph(), host, *e, true))
                    logs[c].add("greedy embedding blocked with min degree n-1");
            }
        });
        for (auto& l : logs) log.merge(l);
        res.checked += greedy_runs;
    }
    finish(res, log, t0, "long-path, escape-path, induced-triple and greedy suites clean");
    return res;
}

SuiteResult check_enumeration_oracles(int jobs) {
    SuiteResult res;
    res.name = "enumeration_oracles";
    auto t0 = Clock::now();
    FailLog log;
    constexpr std::array<std::size_t, 9> tree_counts{0, 1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        ++res.checked;
        if (enumerate_trees(n).size() != tree_counts[std::size_t(n)])
            log.add("grown tree count off at n=" + std::to_string(n));
        std::size_t swept = 1;
        if (n >= 3) {
            std::set<std::string> forms;
            std::vector<int> seq(std::size_t(n - 2), 0);
            for (;;) {
                forms.insert(ahu_canonical_string(prufer_decode(seq)));
                int pos = 0;
                while (pos < n - 2 && ++seq[std::size_t(pos)] == n) seq[std::size_t(pos++)] = 0;
                if (pos == n - 2) break;
            }
            swept = forms.size();
        }
        ++res.checked;
        if (swept != tree_counts[std::size_t(n)])
            log.add("sequence-swept tree count off at n=" + std::to_string(n));
    }

    constexpr std::array<std::size_t, 8> graph_counts{0, 1, 2, 4, 11, 34, 156, 1044};
    std::vector<Graph> all_small;
    for (int n = 1; n <= 7; ++n) {
        auto graphs = enumerate_graphs(n, 0, false, EnumMode::Auto, jobs);
        ++res.checked;
        if (graphs.size() != graph_counts[std::size_t(n)])
            log.add("grown graph count off at n=" + std::to_string(n));
        // Orbit counting: average 2^(pair cycles) over all vertex permutations.
        auto perm = std::vector<int>(std::size_t(n));
        std::iota(perm.begin(), perm.end(), 0);
        unsigned long long total = 0, fact = 1;
        for (int i = 2; i <= n; ++i) fact *= (unsigned long long)i;
        do {
            std::array<bool, 64> seen{};
            int cycles = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (seen[std::size_t(i * n + j)]) continue;
                    ++cycles;
                    int a = i, b = j;
                    do {
                        seen[std::size_t(std::min(a, b) * n + std::max(a, b))] = true;
                        int na = perm[std::size_t(a)], nb = perm[std::size_t(b)];
                        a = na;
                        b = nb;
                    } while (!(std::min(a, b) == i && std::max(a, b) == j));
                }
            total += 1ULL << cycles;
        } while (std::next_permutation(perm.begin(), perm.end()));
        ++res.checked;
        if (total / fact != graph_counts[std::size_t(n)] || total % fact != 0)
            log.add("orbit-counted graph total off at n=" + std::to_string(n));
        for (auto& g : graphs) all_small.push_back(std::move(g));
    }

    // Canonical form is constant across random relabelings.
    {
        std::size_t nch = std::min<std::size_t>(std::size_t(default_jobs(jobs)),
                                                std::max<std::size_t>(all_small.size(), 1));
        std::vector<FailLog> logs(nch);
        parallel_chunks(all_small.size(), int(nch), [&](std::size_t c, std::size_t lo,
                                                        std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const Graph& g = all_small[i];
                std::string base = canonical_form(g);
                std::mt19937_64 r(splitmix(0xC0DE + i));
                auto perm = std::vector<int>(std::size_t(g.vertex_count()));
                std::iota(perm.begin(), perm.end(), 0);
                for (int rep = 0; rep < 100; ++rep) {
                    std::shuffle(perm.begin(), perm.end(), r);
                    if (canonical_form(relabel(g, perm)) != base) {
                        logs[c].add("canonical form moved under relabeling of " + base);
                        break;
                    }
                }
            }
        });
        for (auto& l : logs) log.merge(l);
        res.checked += all_small.size();
    }
    finish(res, log, t0, "counts reproduced two ways; canonical forms relabeling-invariant");
    return res;
}

std::vector<SuiteResult> run_acceptance(int jobs) {
    constexpr std::array<int, 3> ns{5, 6, 7};
    std::vector<SuiteResult> out;
    out.push_back(check_embedding_equivalence(ns, 100000, 424242, jobs));
    out.push_back(check_exception_instances());
    out.push_back(check_m_family_equivalence());
    out.push_back(check_desk_tables(jobs));
    out.push_back(check_lower_bound_witnesses(jobs));
    out.push_back(check_path_lemmas(424242, jobs));
    out.push_back(check_enumeration_oracles(jobs));
    return out;
}

}  // namespace treedeg
