#pragma once

#include <vector>

#include "cellform/similarity.hpp"

namespace cellform {

// One agglomeration step. Node ids follow the usual linkage convention:
// leaves are 1..m, the t-th merge creates node m+t. left < right.
struct MergeRecord {
    int left = 0;
    int right = 0;
    double level = 0.0;  // similarity at merge time; may be negative
};

struct LinkageTree {
    int leaf_count = 0;
    std::vector<MergeRecord> merges;  // exactly leaf_count - 1 entries
};

// Centroid-linkage recurrence on similarity values: similarity between the
// merged cluster (r u q) of sizes n_r, n_q and any other cluster k.
//
//   s((r u q), k) = (n_r*s_rk + n_q*s_qk)/(n_r+n_q)
//                 - n_r*n_q/(n_r+n_q)^2 * s_rq
//
// The correction term can push results below zero; levels are not clamped.
double merge_level_update(double s_rk, double s_qk, double s_rq, int n_r, int n_q);

// Agglomerative clustering: repeatedly merge the active pair with maximum
// current similarity, ties broken by smallest (left, right) node-id pair.
LinkageTree build_dendrogram(const SimilarityMatrix& sim);

// Undo the last k-1 merges and return the k clusters that existed just
// before them. Each cluster is a sorted list of 0-based machine indices;
// clusters are ordered by smallest member.
std::vector<std::vector<int>> cut_tree(const LinkageTree& tree, int k);

}  // namespace cellform
