#ifndef KMM_PARTITION_HPP
#define KMM_PARTITION_HPP

#include <vector>

#include "kmm/errors.hpp"

namespace kmm {

/// Cluster assignment for n observations: xi[i] is the assigned cluster,
/// psi[i] the recorded second-closest cluster (psi[i] == xi[i] only when
/// k == 1). Cluster indices are 0-based and in [0, k).
struct Partition {
    std::vector<int> xi;
    std::vector<int> psi;
    int k = 0;

    Partition() = default;
    Partition(int n, int k_) : xi(n, 0), psi(n, 0), k(k_) {}

    int n() const { return static_cast<int>(xi.size()); }

    /// Checks the structural invariants: indices in range, no empty
    /// cluster, psi != xi whenever k >= 2.
    void validate() const {
        if (k < 1) throw Error("partition has k < 1");
        if (xi.size() != psi.size()) throw Error("xi/psi length mismatch");
        std::vector<int> sizes(k, 0);
        for (std::size_t i = 0; i < xi.size(); ++i) {
            if (xi[i] < 0 || xi[i] >= k) throw Error("xi out of range");
            if (psi[i] < 0 || psi[i] >= k) throw Error("psi out of range");
            if (k >= 2 && psi[i] == xi[i]) throw Error("psi equals xi");
            ++sizes[xi[i]];
        }
        for (int c = 0; c < k; ++c)
            if (sizes[c] == 0) throw Error("empty cluster in partition");
    }

    std::vector<int> cluster_sizes() const {
        std::vector<int> sizes(k, 0);
        for (int c : xi) ++sizes[c];
        return sizes;
    }
};

}  // namespace kmm

#endif  // KMM_PARTITION_HPP
