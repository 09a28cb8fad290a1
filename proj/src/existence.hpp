#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "model.hpp"

namespace psell {

// Bipartite divisibility graph: left vertices are the target coordinates
// with exponent >= 2, right vertices are the source coordinates; (k, i)
// is an edge exactly when q_k divides p_i. All indices 0-based in the
// user's coordinate order.
struct DivisibilityGraph {
    std::vector<int> left;                  // target indices, q >= 2
    int right = 0;                          // number of source indices
    std::vector<std::vector<int>> adj;      // per left vertex: sorted source indices
    bool has_edge(int left_pos, int source) const;
};

DivisibilityGraph build_graph(const ProblemInstance& inst);

struct Matching {
    // pair_left[l] = matched source index for left position l, or -1
    std::vector<int> pair_left;
    int size = 0;
};

// Maximum-cardinality matching (Hopcroft-Karp). Deterministic for a fixed
// vertex ordering.
Matching max_matching(const DivisibilityGraph& g);

// The pair (K, sigma): a set of weakly pseudoconvex target coordinates and
// an assignment to source coordinates with q_k | p_sigma(k) whose image
// covers at least n - s source slots.
struct AdmissiblePattern {
    std::set<int> K;            // target indices (q >= 2), user order, 0-based
    std::map<int, int> sigma;   // target index -> source index

    friend bool operator==(const AdmissiblePattern& a, const AdmissiblePattern& b) {
        return a.K == b.K && a.sigma == b.sigma;
    }
};

// Checks the pattern against the instance (divisibility, image size,
// emptiness rule). Throws on violation.
void check_pattern(const ProblemInstance& inst, const AdmissiblePattern& pat);
int pattern_image_size(const AdmissiblePattern& pat);

// Hall-type witness that no admissible pattern exists: a set S of source
// indices whose divisibility neighborhood is too small, |N(S)| + s < |S|.
struct InfeasibilityCertificate {
    std::vector<int> violating_sources;      // subset S of {0..n-1}
    std::vector<int> neighborhood;           // N(S) among the q>=2 target indices
};

// O(|edges|) verification of the certificate against the instance.
bool verify_certificate(const ProblemInstance& inst, const InfeasibilityCertificate& cert);

struct ExistenceResult {
    bool exists = false;
    std::optional<AdmissiblePattern> witness;
    std::optional<InfeasibilityCertificate> certificate;
};

// Theorem-level decision: a transversal map exists iff the divisibility
// graph has a matching of size >= n - s. Requires N - n < n.
ExistenceResult maps_exist(const ProblemInstance& inst);

// Emits distinct admissible patterns in a deterministic order: by |K|,
// then lexicographically on K, then on the sigma value tuple. Includes
// non-injective sigma. Empty when infeasible.
std::vector<AdmissiblePattern> enumerate_patterns(const ProblemInstance& inst, std::size_t limit = 1000);

}  // namespace psell
