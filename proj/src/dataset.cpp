#include "evimm/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evimm {

Dataset::Dataset(std::vector<double> values, double zero_tol) {
    n_ = values.size();
    positives_.reserve(values.size());
    for (double v : values) {
        if (std::fabs(v) <= zero_tol) v = 0.0;
        if (v < 0.0) throw std::invalid_argument("Dataset: negative observation");
        if (!std::isfinite(v)) throw std::invalid_argument("Dataset: non-finite observation");
        if (v == 0.0) ++n_zero_;
        else positives_.push_back(v);
    }
    std::sort(positives_.begin(), positives_.end());
    prefix_sum_.resize(positives_.size() + 1, 0.0);
    prefix_log_sum_.resize(positives_.size() + 1, 0.0);
    for (std::size_t i = 0; i < positives_.size(); ++i) {
        prefix_sum_[i + 1] = prefix_sum_[i] + positives_[i];
        prefix_log_sum_[i + 1] = prefix_log_sum_[i] + std::log(positives_[i]);
    }
}

std::vector<double> Dataset::sorted_values() const {
    std::vector<double> out(n_zero_, 0.0);
    out.insert(out.end(), positives_.begin(), positives_.end());
    return out;
}

std::size_t Dataset::count_tail(double u) const {
    auto it = std::lower_bound(positives_.begin(), positives_.end(), u);
    return static_cast<std::size_t>(positives_.end() - it);
}

std::size_t Dataset::count_bulk_below(double u) const {
    return positives_.size() - count_tail(u);
}

double Dataset::sum_positives(std::size_t lo, std::size_t hi) const {
    return prefix_sum_[hi] - prefix_sum_[lo];
}

double Dataset::sum_log_positives(std::size_t lo, std::size_t hi) const {
    return prefix_log_sum_[hi] - prefix_log_sum_[lo];
}

double Dataset::quantile(double q) const {
    return sorted_quantile(sorted_values(), q);
}

double Dataset::positive_quantile(double q) const {
    return sorted_quantile(positives_, q);
}

double sorted_quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("sorted_quantile: empty sample");
    if (!(q >= 0.0) || !(q <= 1.0))
        throw std::invalid_argument("sorted_quantile: q must be in [0,1]");
    if (sorted.size() == 1) return sorted[0];
    double h = (static_cast<double>(sorted.size()) - 1.0) * q;
    auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo >= sorted.size() - 1) return sorted.back();
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace evimm
