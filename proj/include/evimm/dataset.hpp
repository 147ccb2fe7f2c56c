#pragma once

// Immutable sample of nonnegative observations, partitioned into exact zeros
// and sorted positives. Sorting happens once at construction; fitting and
// diagnostics work off the sorted view.

#include <cstddef>
#include <vector>

namespace evimm {

class Dataset {
  public:
    // Validates nonnegativity. Values with |x| <= zero_tol are coerced to
    // exact 0.0 at ingestion.
    explicit Dataset(std::vector<double> values, double zero_tol = 0.0);

    std::size_t n() const { return n_; }
    std::size_t n_zero() const { return n_zero_; }
    std::size_t n_positive() const { return positives_.size(); }

    // Positives in ascending order.
    const std::vector<double>& positives() const { return positives_; }
    // All observations in ascending order (zeros first).
    std::vector<double> sorted_values() const;

    // Count of positives >= u / strictly below u.
    std::size_t count_tail(double u) const;
    std::size_t count_bulk_below(double u) const;

    // Prefix sums over sorted positives of x and log x, for O(1) range sums
    // in the gamma bulk log-likelihood.
    double sum_positives(std::size_t lo, std::size_t hi) const;
    double sum_log_positives(std::size_t lo, std::size_t hi) const;

    double max_positive() const { return positives_.empty() ? 0.0 : positives_.back(); }

    // Type-7 (linear interpolation) empirical quantile over all observations.
    double quantile(double q) const;
    // Same, over the positives only.
    double positive_quantile(double q) const;

  private:
    std::size_t n_ = 0;
    std::size_t n_zero_ = 0;
    std::vector<double> positives_;
    std::vector<double> prefix_sum_;
    std::vector<double> prefix_log_sum_;
};

// Type-7 quantile of an already sorted vector.
double sorted_quantile(const std::vector<double>& sorted, double q);

} // namespace evimm
