#include "existence.hpp"

#include <algorithm>
#include <queue>

namespace psell {

bool DivisibilityGraph::has_edge(int left_pos, int source) const {
    const auto& row = adj[left_pos];
    return std::binary_search(row.begin(), row.end(), source);
}

DivisibilityGraph build_graph(const ProblemInstance& inst) {
    DivisibilityGraph g;
    g.right = inst.n();
    for (int k = 0; k < inst.N(); ++k) {
        unsigned qk = inst.target.exps[k];
        if (qk < 2) continue;
        g.left.push_back(k);
        std::vector<int> row;
        for (int i = 0; i < inst.n(); ++i)
            if (inst.source.exps[i] % qk == 0) row.push_back(i);
        g.adj.push_back(std::move(row));
    }
    return g;
}

namespace {

constexpr int kInf = 1 << 29;

struct HopcroftKarp {
    const DivisibilityGraph& g;
    int nl, nr;
    std::vector<int> pair_l, pair_r, dist;

    explicit HopcroftKarp(const DivisibilityGraph& graph)
        : g(graph),
          nl(static_cast<int>(graph.left.size())),
          nr(graph.right),
          pair_l(nl, -1),
          pair_r(nr, -1),
          dist(nl, kInf) {}

    bool bfs() {
        std::queue<int> q;
        bool reachable_free = false;
        for (int l = 0; l < nl; ++l) {
            if (pair_l[l] == -1) {
                dist[l] = 0;
                q.push(l);
            } else {
                dist[l] = kInf;
            }
        }
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : g.adj[l]) {
                int l2 = pair_r[r];
                if (l2 == -1) {
                    reachable_free = true;
                } else if (dist[l2] == kInf) {
                    dist[l2] = dist[l] + 1;
                    q.push(l2);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int l) {
        for (int r : g.adj[l]) {
            int l2 = pair_r[r];
            if (l2 == -1 || (dist[l2] == dist[l] + 1 && dfs(l2))) {
                pair_l[l] = r;
                pair_r[r] = l;
                return true;
            }
        }
        dist[l] = kInf;
        return false;
    }

    Matching run() {
        int total = 0;
        while (bfs()) {
            for (int l = 0; l < nl; ++l)
                if (pair_l[l] == -1 && dfs(l)) ++total;
        }
        return Matching{pair_l, total};
    }
};

}  // namespace

Matching max_matching(const DivisibilityGraph& g) { return HopcroftKarp(g).run(); }

int pattern_image_size(const AdmissiblePattern& pat) {
    std::set<int> image;
    for (const auto& [k, i] : pat.sigma) image.insert(i);
    return static_cast<int>(image.size());
}

void check_pattern(const ProblemInstance& inst, const AdmissiblePattern& pat) {
    int s = inst.target.ones_count();
    if (pat.sigma.size() != pat.K.size()) throw Error("pattern: sigma domain must equal K");
    for (int k : pat.K) {
        if (k < 0 || k >= inst.N()) throw Error("pattern: target index out of range");
        if (inst.target.exps[k] < 2) throw Error("pattern: K must consist of exponent >= 2 coordinates");
        auto it = pat.sigma.find(k);
        if (it == pat.sigma.end()) throw Error("pattern: sigma undefined on K");
        int i = it->second;
        if (i < 0 || i >= inst.n()) throw Error("pattern: source index out of range");
        if (inst.source.exps[i] % inst.target.exps[k] != 0)
            throw Error("pattern: divisibility q_k | p_sigma(k) fails");
    }
    if (pattern_image_size(pat) < inst.n() - s) throw Error("pattern: image covers too few source coordinates");
}

bool verify_certificate(const ProblemInstance& inst, const InfeasibilityCertificate& cert) {
    int s = inst.target.ones_count();
    std::set<int> sources(cert.violating_sources.begin(), cert.violating_sources.end());
    std::set<int> claimed(cert.neighborhood.begin(), cert.neighborhood.end());
    for (int i : sources)
        if (i < 0 || i >= inst.n()) return false;
    for (int k : claimed)
        if (k < 0 || k >= inst.N() || inst.target.exps[k] < 2) return false;
    // Neighborhood must really contain every target coordinate whose
    // exponent divides some selected source exponent.
    for (int k = 0; k < inst.N(); ++k) {
        unsigned qk = inst.target.exps[k];
        if (qk < 2) continue;
        for (int i : sources) {
            if (inst.source.exps[i] % qk == 0 && claimed.count(k) == 0) return false;
        }
    }
    return static_cast<int>(claimed.size()) + s < static_cast<int>(sources.size());
}

ExistenceResult maps_exist(const ProblemInstance& inst) {
    inst.require_codim();
    int s = inst.target.ones_count();
    DivisibilityGraph g = build_graph(inst);
    Matching m = max_matching(g);

    ExistenceResult res;
    if (m.size >= inst.n() - s) {
        res.exists = true;
        AdmissiblePattern pat;
        for (std::size_t l = 0; l < g.left.size(); ++l) {
            if (m.pair_left[l] >= 0) {
                pat.K.insert(g.left[l]);
                pat.sigma[g.left[l]] = m.pair_left[l];
            }
        }
        check_pattern(inst, pat);
        res.witness = std::move(pat);
        return res;
    }

    // Hall witness from the final matching: sources reachable from an
    // unmatched source by alternating paths have a deficient neighborhood.
    std::vector<int> matched_source_to_left(g.right, -1);
    for (std::size_t l = 0; l < g.left.size(); ++l)
        if (m.pair_left[l] >= 0) matched_source_to_left[m.pair_left[l]] = static_cast<int>(l);

    std::vector<bool> seen_source(g.right, false), seen_left(g.left.size(), false);
    std::queue<int> frontier;
    for (int i = 0; i < g.right; ++i) {
        if (matched_source_to_left[i] == -1) {
            seen_source[i] = true;
            frontier.push(i);
        }
    }
    while (!frontier.empty()) {
        int i = frontier.front();
        frontier.pop();
        for (std::size_t l = 0; l < g.left.size(); ++l) {
            if (seen_left[l] || !g.has_edge(static_cast<int>(l), i)) continue;
            seen_left[l] = true;
            int j = m.pair_left[l];  // matched, else the matching would augment
            if (j >= 0 && !seen_source[j]) {
                seen_source[j] = true;
                frontier.push(j);
            }
        }
    }
    InfeasibilityCertificate cert;
    for (int i = 0; i < g.right; ++i)
        if (seen_source[i]) cert.violating_sources.push_back(i);
    for (std::size_t l = 0; l < g.left.size(); ++l)
        if (seen_left[l]) cert.neighborhood.push_back(g.left[l]);
    if (!verify_certificate(inst, cert)) throw Error("internal: infeasibility certificate failed to verify");
    res.certificate = std::move(cert);
    return res;
}

namespace {

// Subsets of `universe` ordered by size then lexicographically.
void subsets_ordered(const std::vector<int>& universe, std::vector<std::vector<int>>& out) {
    int m = static_cast<int>(universe.size());
    for (int size = 0; size <= m; ++size) {
        std::vector<int> idx(size);
        // first combination
        for (int t = 0; t < size; ++t) idx[t] = t;
        while (true) {
            std::vector<int> sub(size);
            for (int t = 0; t < size; ++t) sub[t] = universe[idx[t]];
            out.push_back(std::move(sub));
            if (size == 0) break;
            int t = size - 1;
            while (t >= 0 && idx[t] == m - size + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < size; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
}

}  // namespace

std::vector<AdmissiblePattern> enumerate_patterns(const ProblemInstance& inst, std::size_t limit) {
    inst.require_codim();
    int s = inst.target.ones_count();
    DivisibilityGraph g = build_graph(inst);
    std::vector<AdmissiblePattern> out;

    std::vector<std::vector<int>> subsets;
    subsets_ordered(g.left, subsets);
    // left index -> adjacency row
    std::map<int, const std::vector<int>*> row_of;
    for (std::size_t l = 0; l < g.left.size(); ++l) row_of[g.left[l]] = &g.adj[l];

    for (const auto& K : subsets) {
        if (out.size() >= limit) break;
        if (K.empty()) {
            if (inst.n() <= s) out.push_back(AdmissiblePattern{});
            continue;
        }
        std::vector<const std::vector<int>*> cand;
        bool possible = true;
        for (int k : K) {
            const auto* row = row_of[k];
            if (row->empty()) {
                possible = false;
                break;
            }
            cand.push_back(row);
        }
        if (!possible) continue;
        // Odometer over sigma value tuples, lexicographic.
        std::vector<std::size_t> pos(K.size(), 0);
        while (true) {
            AdmissiblePattern pat;
            for (std::size_t t = 0; t < K.size(); ++t) {
                pat.K.insert(K[t]);
                pat.sigma[K[t]] = (*cand[t])[pos[t]];
            }
            if (pattern_image_size(pat) >= inst.n() - s) {
                out.push_back(std::move(pat));
                if (out.size() >= limit) return out;
            }
            int t = static_cast<int>(K.size()) - 1;
            while (t >= 0 && pos[t] + 1 == cand[t]->size()) {
                pos[t] = 0;
                --t;
            }
            if (t < 0) break;
            ++pos[t];
        }
    }
    return out;
}

}  // namespace psell
