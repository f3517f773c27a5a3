#ifndef KMM_TRANSFER_HPP
#define KMM_TRANSFER_HPP

#include "kmm/cluster_state.hpp"
#include "kmm/errors.hpp"
#include "kmm/masked_dataset.hpp"

namespace kmm {

/// Exact increase in the masked objective if row i joined cluster l:
/// sum over shared features of n_lj * (x_ij - mean_lj)^2 / (n_lj + 1).
/// Features the cluster has never observed contribute zero (their mean
/// would become x_ij, leaving a zero residual).
inline double delta_plus(const ClusterState& cs, const MaskedDataset& ds, int i, int l) {
    double acc = 0.0;
    const auto vals = ds.row_values(i);
    const auto mask = ds.row_mask(i);
    const int p = ds.p();
    for (int j = 0; j < p; ++j) {
        if (!mask[j]) continue;
        const int nlj = cs.count(l, j);
        if (nlj == 0) continue;
        const double d = vals[j] - cs.mean(l, j);
        acc += nlj * d * d / (nlj + 1);
    }
    return acc;
}

/// Exact decrease in the masked objective if row i left cluster c:
/// sum over shared features of n_cj * (x_ij - mean_cj)^2 / (n_cj - 1).
/// When row i is the sole observed value of a feature the term is zero
/// (the mean equals the value, so nothing is lost).
inline double delta_minus(const ClusterState& cs, const MaskedDataset& ds, int i, int c) {
    if (cs.size(c) <= 1) throw LastMemberError(c);
    double acc = 0.0;
    const auto vals = ds.row_values(i);
    const auto mask = ds.row_mask(i);
    const int p = ds.p();
    for (int j = 0; j < p; ++j) {
        if (!mask[j]) continue;
        const int ncj = cs.count(c, j);
        if (ncj <= 1) continue;
        const double d = vals[j] - cs.mean(c, j);
        acc += ncj * d * d / (ncj - 1);
    }
    return acc;
}

}  // namespace kmm

#endif  // KMM_TRANSFER_HPP
