#ifndef KMM_CLUSTER_STATE_HPP
#define KMM_CLUSTER_STATE_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "kmm/masked_dataset.hpp"
#include "kmm/partition.hpp"

namespace kmm {

/// Per-cluster, per-feature observed counts, sums and means, maintained
/// incrementally as rows move between clusters. means[k][j] is defined only
/// where counts[k][j] > 0 (NaN elsewhere); present[k][j] mirrors
/// counts[k][j] > 0. Single-writer: owned by one fitting run.
class ClusterState {
public:
    ClusterState(int k, int p)
        : k_(k), p_(p),
          counts_(static_cast<std::size_t>(k) * p, 0),
          sums_(static_cast<std::size_t>(k) * p, 0.0),
          means_(static_cast<std::size_t>(k) * p, std::numeric_limits<double>::quiet_NaN()),
          present_(static_cast<std::size_t>(k) * p, 0),
          sizes_(k, 0) {}

    int k() const { return k_; }
    int p() const { return p_; }

    int count(int c, int j) const { return counts_[idx(c, j)]; }
    double sum(int c, int j) const { return sums_[idx(c, j)]; }
    double mean(int c, int j) const { return means_[idx(c, j)]; }
    bool feature_present(int c, int j) const { return present_[idx(c, j)] != 0; }
    int size(int c) const { return sizes_[c]; }

    std::span<const double> mean_row(int c) const {
        return {means_.data() + idx(c, 0), static_cast<std::size_t>(p_)};
    }
    std::span<const std::uint8_t> present_row(int c) const {
        return {present_.data() + idx(c, 0), static_cast<std::size_t>(p_)};
    }
    const std::vector<int>& sizes() const { return sizes_; }
    const std::vector<double>& means() const { return means_; }
    const std::vector<std::uint8_t>& present() const { return present_; }
    const std::vector<int>& counts() const { return counts_; }

    void add_row(const MaskedDataset& ds, int i, int c) {
        ++sizes_[c];
        for (int j = 0; j < p_; ++j) {
            if (!ds.observed(i, j)) continue;
            const std::size_t t = idx(c, j);
            sums_[t] += ds.value(i, j);
            ++counts_[t];
            present_[t] = 1;
            means_[t] = sums_[t] / counts_[t];
        }
    }

    void remove_row(const MaskedDataset& ds, int i, int c) {
        --sizes_[c];
        for (int j = 0; j < p_; ++j) {
            if (!ds.observed(i, j)) continue;
            const std::size_t t = idx(c, j);
            --counts_[t];
            if (counts_[t] == 0) {
                // Reset exactly so later additions start from a clean slate
                // instead of accumulated cancellation dust.
                sums_[t] = 0.0;
                present_[t] = 0;
                means_[t] = std::numeric_limits<double>::quiet_NaN();
            } else {
                sums_[t] -= ds.value(i, j);
                means_[t] = sums_[t] / counts_[t];
            }
        }
    }

private:
    std::size_t idx(int c, int j) const { return static_cast<std::size_t>(c) * p_ + j; }

    int k_;
    int p_;
    std::vector<int> counts_;
    std::vector<double> sums_;
    std::vector<double> means_;
    std::vector<std::uint8_t> present_;
    std::vector<int> sizes_;
};

/// Per-cluster masked means of the rows assigned by the partition.
inline ClusterState cluster_means(const MaskedDataset& ds, const Partition& part) {
    ClusterState cs(part.k, ds.p());
    for (int i = 0; i < ds.n(); ++i) cs.add_row(ds, i, part.xi[i]);
    return cs;
}

}  // namespace kmm

#endif  // KMM_CLUSTER_STATE_HPP
