#ifndef KMM_MASKED_DATASET_HPP
#define KMM_MASKED_DATASET_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kmm/errors.hpp"

namespace kmm {

/// Dense n x p value matrix paired with an n x p observation mask.
/// Unobserved cells hold NaN and are never read; every row is guaranteed
/// to have at least one observed feature. Immutable after construction,
/// safe to share across threads.
class MaskedDataset {
public:
    MaskedDataset(std::vector<double> values, std::vector<std::uint8_t> mask, int n, int p)
        : n_(n), p_(p), values_(std::move(values)), mask_(std::move(mask)) {
        if (n_ <= 0 || p_ <= 0) throw EmptyInputError();
        if (values_.size() != static_cast<std::size_t>(n_) * p_ ||
            mask_.size() != static_cast<std::size_t>(n_) * p_)
            throw Error("values/mask size does not match n*p");
        per_row_observed_.resize(n_);
        long total = 0;
        for (int i = 0; i < n_; ++i) {
            int pi = 0;
            for (int j = 0; j < p_; ++j) {
                std::uint8_t& m = mask_[idx(i, j)];
                if (m > 1) throw Error("mask entries must be 0 or 1");
                if (m) {
                    ++pi;
                } else {
                    values_[idx(i, j)] = std::numeric_limits<double>::quiet_NaN();
                }
            }
            if (pi == 0) throw RowAllMissingError(i);
            per_row_observed_[i] = pi;
            total += pi;
        }
        p_bar_ = static_cast<double>(total) / n_;
    }

    int n() const { return n_; }
    int p() const { return p_; }
    double p_bar() const { return p_bar_; }
    long total_observed() const { return static_cast<long>(p_bar_ * n_ + 0.5); }

    double value(int i, int j) const { return values_[idx(i, j)]; }
    bool observed(int i, int j) const { return mask_[idx(i, j)] != 0; }
    int row_observed(int i) const { return per_row_observed_[i]; }

    std::span<const double> row_values(int i) const {
        return {values_.data() + idx(i, 0), static_cast<std::size_t>(p_)};
    }
    std::span<const std::uint8_t> row_mask(int i) const {
        return {mask_.data() + idx(i, 0), static_cast<std::size_t>(p_)};
    }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::uint8_t>& mask() const { return mask_; }
    const std::vector<int>& per_row_observed() const { return per_row_observed_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * p_ + j; }

    int n_;
    int p_;
    std::vector<double> values_;
    std::vector<std::uint8_t> mask_;
    std::vector<int> per_row_observed_;
    double p_bar_ = 0.0;
};

/// Builds a MaskedDataset from records with optional fields. Rows must all
/// have the same length; a row with no observed value is rejected.
inline MaskedDataset build_dataset(const std::vector<std::vector<std::optional<double>>>& rows) {
    if (rows.empty()) throw EmptyInputError();
    const int n = static_cast<int>(rows.size());
    const int p = static_cast<int>(rows[0].size());
    if (p == 0) throw EmptyInputError();
    std::vector<double> values(static_cast<std::size_t>(n) * p, 0.0);
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(n) * p, 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != p)
            throw RaggedRowsError(i, static_cast<int>(rows[i].size()), p);
        for (int j = 0; j < p; ++j) {
            if (rows[i][j].has_value()) {
                values[static_cast<std::size_t>(i) * p + j] = *rows[i][j];
                mask[static_cast<std::size_t>(i) * p + j] = 1;
            }
        }
    }
    return MaskedDataset(std::move(values), std::move(mask), n, p);
}

}  // namespace kmm

#endif  // KMM_MASKED_DATASET_HPP
