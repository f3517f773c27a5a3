#ifndef KMM_DISTANCE_HPP
#define KMM_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "kmm/cluster_state.hpp"
#include "kmm/masked_dataset.hpp"
#include "kmm/partition.hpp"

namespace kmm {

/// Partial squared distance between a row and a center, summed only over
/// features observed on both sides. shared == 0 means the two masks are
/// disjoint and d2 carries no information.
struct PartialDist {
    double d2 = 0.0;
    int shared = 0;
};

inline PartialDist partial_sq_distance(const MaskedDataset& ds, int i,
                                       std::span<const double> center_values,
                                       std::span<const std::uint8_t> center_present) {
    PartialDist out;
    const auto vals = ds.row_values(i);
    const auto mask = ds.row_mask(i);
    const int p = ds.p();
    for (int j = 0; j < p; ++j) {
        if (mask[j] && center_present[j]) {
            const double d = vals[j] - center_values[j];
            out.d2 += d * d;
            ++out.shared;
        }
    }
    return out;
}

inline PartialDist partial_sq_distance(const MaskedDataset& ds, int i, const ClusterState& cs,
                                       int c) {
    return partial_sq_distance(ds, i, cs.mean_row(c), cs.present_row(c));
}

/// d2 / shared-feature count; empty when the masks are disjoint (no shared
/// features carries no proximity information, so no value is produced).
inline std::optional<double> scaled_partial_sq_distance(const MaskedDataset& ds, int i,
                                                        std::span<const double> center_values,
                                                        std::span<const std::uint8_t> center_present) {
    const PartialDist d = partial_sq_distance(ds, i, center_values, center_present);
    if (d.shared == 0) return std::nullopt;
    return d.d2 / d.shared;
}

inline std::optional<double> scaled_partial_sq_distance(const MaskedDataset& ds, int i,
                                                        const ClusterState& cs, int c) {
    return scaled_partial_sq_distance(ds, i, cs.mean_row(c), cs.present_row(c));
}

/// Masked within-cluster sum of squares: squared residuals against the
/// assigned cluster's means, over observed cells only. Features a cluster
/// has never observed contribute nothing.
inline double objective(const MaskedDataset& ds, const Partition& part, const ClusterState& cs) {
    double w = 0.0;
    const int p = ds.p();
    for (int i = 0; i < ds.n(); ++i) {
        const int c = part.xi[i];
        const auto vals = ds.row_values(i);
        const auto mask = ds.row_mask(i);
        const auto means = cs.mean_row(c);
        const auto present = cs.present_row(c);
        for (int j = 0; j < p; ++j) {
            if (mask[j] && present[j]) {
                const double d = vals[j] - means[j];
                w += d * d;
            }
        }
    }
    return w;
}

}  // namespace kmm

#endif  // KMM_DISTANCE_HPP
