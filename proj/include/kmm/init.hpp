#ifndef KMM_INIT_HPP
#define KMM_INIT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kmm/distance.hpp"
#include "kmm/errors.hpp"
#include "kmm/masked_dataset.hpp"

namespace kmm {

/// K x p centers that may themselves have undefined coordinates. Centers
/// produced by seeding are copies of data rows and carry those rows' masks.
struct MaskedCenters {
    int k = 0;
    int p = 0;
    std::vector<double> values;
    std::vector<std::uint8_t> present;

    MaskedCenters() = default;
    MaskedCenters(int k_, int p_)
        : k(k_), p(p_),
          values(static_cast<std::size_t>(k_) * p_, 0.0),
          present(static_cast<std::size_t>(k_) * p_, 0) {}

    std::span<const double> row_values(int c) const {
        return {values.data() + static_cast<std::size_t>(c) * p, static_cast<std::size_t>(p)};
    }
    std::span<const std::uint8_t> row_present(int c) const {
        return {present.data() + static_cast<std::size_t>(c) * p, static_cast<std::size_t>(p)};
    }
    void set_row(int c, std::span<const double> vals, std::span<const std::uint8_t> pres) {
        std::copy(vals.begin(), vals.end(), values.begin() + static_cast<std::size_t>(c) * p);
        std::copy(pres.begin(), pres.end(), present.begin() + static_cast<std::size_t>(c) * p);
    }
};

enum class InitWeighting { unscaled_delta, scaled_delta };

struct InitConfig {
    InitWeighting weighting = InitWeighting::scaled_delta;
};

struct InitCenters {
    MaskedCenters centers;
    std::vector<int> rows;  // distinct source row indices
};

/// k-means++-style seeding on masked data. The first center is a uniformly
/// chosen row; each further center is a row sampled with probability
/// proportional to its distance to the nearest already-chosen center,
/// where distance is the partial squared distance (optionally divided by
/// the shared-feature count). Rows sharing no features with any chosen
/// center get the largest finite weight of the round: no information must
/// not read as proximity, and such rows have to stay selectable.
inline InitCenters kmeanspp_init(const MaskedDataset& ds, int k, std::mt19937_64& rng,
                                 const InitConfig& cfg = {}) {
    const int n = ds.n();
    const int p = ds.p();
    if (k < 1) throw Error("k must be >= 1");
    if (k > n) throw KGreaterThanNError(k, n);

    InitCenters out;
    out.centers = MaskedCenters(k, p);
    out.rows.reserve(k);

    std::uniform_int_distribution<int> uniform_row(0, n - 1);
    const int first = uniform_row(rng);
    out.rows.push_back(first);
    out.centers.set_row(0, ds.row_values(first), ds.row_mask(first));

    constexpr double kUndefined = -1.0;
    std::vector<double> best(n, kUndefined);  // min weight over chosen centers so far
    std::vector<char> chosen(n, 0);
    chosen[first] = 1;

    std::vector<double> weight(n, 0.0);
    for (int t = 1; t < k; ++t) {
        // Fold the newest center into the running minimum.
        const int newest = t - 1;
        for (int i = 0; i < n; ++i) {
            if (chosen[i]) continue;
            const PartialDist d =
                partial_sq_distance(ds, i, out.centers.row_values(newest), out.centers.row_present(newest));
            if (d.shared == 0) continue;
            const double w = cfg.weighting == InitWeighting::scaled_delta ? d.d2 / d.shared : d.d2;
            if (best[i] == kUndefined || w < best[i]) best[i] = w;
        }

        double max_finite = 0.0;
        for (int i = 0; i < n; ++i)
            if (!chosen[i] && best[i] != kUndefined) max_finite = std::max(max_finite, best[i]);

        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            if (chosen[i]) {
                weight[i] = 0.0;
            } else if (best[i] == kUndefined) {
                weight[i] = max_finite;
            } else {
                weight[i] = best[i];
            }
            total += weight[i];
        }

        int pick = -1;
        if (total > 0.0) {
            const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng) * total;
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += weight[i];
                if (u < acc) {
                    pick = i;
                    break;
                }
            }
            if (pick == -1) {  // u landed on the accumulated total (rounding)
                for (int i = n - 1; i >= 0; --i)
                    if (!chosen[i]) {
                        pick = i;
                        break;
                    }
            }
        } else {
            // All remaining rows coincide with chosen centers; fall back to a
            // uniform draw over the unchosen ones so k distinct rows are
            // still produced.
            std::vector<int> open;
            for (int i = 0; i < n; ++i)
                if (!chosen[i]) open.push_back(i);
            pick = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        }

        chosen[pick] = 1;
        out.rows.push_back(pick);
        out.centers.set_row(t, ds.row_values(pick), ds.row_mask(pick));
    }
    return out;
}

}  // namespace kmm

#endif  // KMM_INIT_HPP
