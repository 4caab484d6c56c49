#pragma once

#include <optional>
#include <string>

#include "treedeg/embedding.hpp"
#include "treedeg/graph.hpp"
#include "treedeg/tree.hpp"

namespace treedeg {

// Places v_j (1-based position in lab.order, j >= 2) on a free host neighbor
// of its parent's image. Tie-break: fewest free neighbors of its own, then
// lowest index. Returns false and leaves e unchanged when every neighbor is
// taken. Requires v_1..v_{j-1} assigned and v_j unassigned.
bool extend(const Tree& t, const Graph& g, const ConventionalLabelling& lab,
            Embedding& e, int j);

// Greedy pass: v_1 on host vertex 0, then extend for j = 2..n. nullopt when
// blocked. Never blocks when the host minimum degree is at least n-1.
std::optional<Embedding> embed_greedy(const Tree& t, const Graph& g,
                                      const ConventionalLabelling& lab);

enum class EmbedStatus {
    Embeddable,
    ExceptionBipartite,
    ExceptionMultipartite,
    OutOfScope,
};

inline const char* to_string(EmbedStatus s) {
    switch (s) {
        case EmbedStatus::Embeddable: return "embeddable";
        case EmbedStatus::ExceptionBipartite: return "exception_bipartite";
        case EmbedStatus::ExceptionMultipartite: return "exception_multipartite";
        case EmbedStatus::OutOfScope: return "out_of_scope";
    }
    return "unknown";
}

struct EmbedVerdict {
    EmbedStatus status;
    std::optional<Embedding> witness;  // Embeddable only; always total and valid
    std::string strategy;              // Embeddable: "structured" or "backtracking"
    int p = 0;                         // ExceptionBipartite: smaller leaf count of T(p,q)
    int k = 0;                         // ExceptionMultipartite: host has k+1 parts
    int a = 0;                         // ExceptionMultipartite: part size
    std::string reason;                // OutOfScope: which hypothesis failed
};

// Full decision procedure: scope check, the two exception recognizers, then a
// constructive embedding (induced-P3 seeding, greedy extension, leaf-swap and
// parent-reseat repair) with exhaustive backtracking in labelling order as
// fallback. Exhaustion on an in-scope non-exception pair is an
// InternalContradictionError, never a quiet failure.
EmbedVerdict decide_and_embed(const Tree& t, const Graph& g);

}  // namespace treedeg
