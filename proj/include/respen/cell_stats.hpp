#ifndef RESPEN_CELL_STATS_HPP
#define RESPEN_CELL_STATS_HPP

#include <vector>

#include "respen/dataset.hpp"
#include "respen/partition.hpp"

namespace respen {

// Per-cell sufficient statistics: count, sum of y and sum of y^2. Every
// penalty and fit in the library is a function of these.
struct CellStats {
    Partition partition;
    std::vector<int> count;
    std::vector<double> sum_y;
    std::vector<double> sum_y2;

    int cells() const { return partition.cells(); }
    int n() const;
    int min_count() const;

    // count * sum_y2 - sum_y^2 for cell k. By the centering identity this
    // equals count * S2 - S1^2 for deviations about any constant, so the
    // unknown cell mean never enters.
    double centered_ss(int k) const {
        return count[k] * sum_y2[k] - sum_y[k] * sum_y[k];
    }
};

CellStats cell_stats(const Dataset& dataset, const Partition& partition);

// Piecewise-constant least-squares fit; cells with no data are flagged.
struct Regressogram {
    Partition partition;
    std::vector<double> values;
    std::vector<char> defined;

    bool all_defined() const;
};

Regressogram fit_regressogram(const CellStats& stats);

// (1/n) sum_i (y_i - value(cell(x_i)))^2. Throws std::domain_error if a
// datapoint falls in an undefined cell: such a model must be filtered.
double empirical_risk(const Regressogram& fit, const Dataset& dataset);

// Same value computed from the sufficient statistics alone.
double empirical_risk(const CellStats& stats);

}  // namespace respen

#endif  // RESPEN_CELL_STATS_HPP
