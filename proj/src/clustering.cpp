#include "cellform/clustering.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cellform {

double merge_level_update(double s_rk, double s_qk, double s_rq, int n_r, int n_q) {
    if (n_r < 1 || n_q < 1) throw std::domain_error("cluster sizes must be positive");
    const double n = n_r + n_q;
    return (n_r * s_rk + n_q * s_qk) / n - (n_r * n_q) / (n * n) * s_rq;
}

LinkageTree build_dendrogram(const SimilarityMatrix& sim) {
    const int m = sim.machine_count;
    if (m < 2) throw std::domain_error("need at least 2 machines to cluster");

    struct Cluster {
        int node_id;  // 1-based
        int size;
    };
    std::vector<Cluster> active;
    active.reserve(m);
    for (int i = 0; i < m; ++i) active.push_back({i + 1, 1});

    // Working similarities indexed by position in `active`.
    std::vector<std::vector<double>> s(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s[i][j] = sim.at(i, j);

    LinkageTree tree;
    tree.leaf_count = m;
    tree.merges.reserve(m - 1);

    for (int t = 1; t < m; ++t) {
        // Active clusters stay sorted by node id, so scanning positions in
        // order realizes the lexicographic tie-break.
        int best_a = 0, best_b = 1;
        double best = s[0][1];
        const int count = static_cast<int>(active.size());
        for (int a = 0; a < count; ++a)
            for (int b = a + 1; b < count; ++b)
                if (s[a][b] > best) {
                    best = s[a][b];
                    best_a = a;
                    best_b = b;
                }

        const Cluster r = active[best_a];
        const Cluster q = active[best_b];
        tree.merges.push_back({std::min(r.node_id, q.node_id),
                               std::max(r.node_id, q.node_id), best});

        std::vector<double> merged(count - 1);
        int out = 0;
        for (int a = 0; a < count; ++a) {
            if (a == best_a || a == best_b) continue;
            merged[out++] =
                merge_level_update(s[best_a][a], s[best_b][a], best, r.size, q.size);
        }

        // Drop the two merged clusters and append the new one (node id m+t
        // is larger than all existing ids, so sorted order is preserved).
        std::vector<Cluster> next_active;
        std::vector<std::vector<double>> next_s(count - 1, std::vector<double>(count - 1));
        std::vector<int> keep;
        for (int a = 0; a < count; ++a)
            if (a != best_a && a != best_b) keep.push_back(a);
        for (std::size_t a = 0; a < keep.size(); ++a) {
            next_active.push_back(active[keep[a]]);
            for (std::size_t b = 0; b < keep.size(); ++b) next_s[a][b] = s[keep[a]][keep[b]];
        }
        next_active.push_back({m + t, r.size + q.size});
        const int last = count - 2;
        for (int a = 0; a < last; ++a) {
            next_s[a][last] = merged[a];
            next_s[last][a] = merged[a];
        }
        next_s[last][last] = 1.0;

        active = std::move(next_active);
        s = std::move(next_s);
    }
    return tree;
}

std::vector<std::vector<int>> cut_tree(const LinkageTree& tree, int k) {
    const int m = tree.leaf_count;
    if (k < 1 || k > m) throw std::domain_error("cut level k out of range");

    // Apply the first m-k merges; the remaining roots are the k clusters.
    std::vector<int> parent(2 * m, 0);  // node id -> merged-into node id, 0 = root
    for (int t = 0; t < m - k; ++t) {
        const MergeRecord& rec = tree.merges[t];
        parent[rec.left] = m + t + 1;
        parent[rec.right] = m + t + 1;
    }

    std::map<int, std::vector<int>> by_root;  // root node id -> machines
    std::vector<int> order;                   // roots in order of smallest member
    for (int leaf = 1; leaf <= m; ++leaf) {
        int node = leaf;
        while (parent[node] != 0) node = parent[node];
        auto [it, inserted] = by_root.try_emplace(node);
        if (inserted || it->second.empty()) order.push_back(node);
        it->second.push_back(leaf - 1);
    }

    std::vector<std::vector<int>> cells;
    cells.reserve(order.size());
    for (int root : order) cells.push_back(by_root[root]);
    return cells;
}

}  // namespace cellform
