#include "respen/cell_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace respen {

int CellStats::n() const {
    int total = 0;
    for (int c : count) total += c;
    return total;
}

int CellStats::min_count() const {
    return *std::min_element(count.begin(), count.end());
}

CellStats cell_stats(const Dataset& dataset, const Partition& partition) {
    validate_dataset(dataset);
    const int d = partition.cells();
    CellStats stats{partition, std::vector<int>(d, 0), std::vector<double>(d, 0.0),
                    std::vector<double>(d, 0.0)};
    for (int i = 0; i < dataset.n(); ++i) {
        const int k = partition.locate(dataset.x[i]);
        stats.count[k] += 1;
        stats.sum_y[k] += dataset.y[i];
        stats.sum_y2[k] += dataset.y[i] * dataset.y[i];
    }
    return stats;
}

bool Regressogram::all_defined() const {
    return std::all_of(defined.begin(), defined.end(),
                       [](char c) { return c != 0; });
}

Regressogram fit_regressogram(const CellStats& stats) {
    const int d = stats.cells();
    Regressogram fit{stats.partition, std::vector<double>(d, 0.0),
                     std::vector<char>(d, 0)};
    for (int k = 0; k < d; ++k) {
        if (stats.count[k] > 0) {
            fit.values[k] = stats.sum_y[k] / stats.count[k];
            fit.defined[k] = 1;
        }
    }
    return fit;
}

double empirical_risk(const Regressogram& fit, const Dataset& dataset) {
    validate_dataset(dataset);
    double acc = 0.0;
    for (int i = 0; i < dataset.n(); ++i) {
        const int k = fit.partition.locate(dataset.x[i]);
        if (!fit.defined[k]) {
            throw std::domain_error(
                "datapoint in undefined cell: model must be filtered");
        }
        const double r = dataset.y[i] - fit.values[k];
        acc += r * r;
    }
    return acc / dataset.n();
}

double empirical_risk(const CellStats& stats) {
    double acc = 0.0;
    for (int k = 0; k < stats.cells(); ++k) {
        if (stats.count[k] > 0) {
            acc += stats.sum_y2[k] - stats.sum_y[k] * stats.sum_y[k] / stats.count[k];
        }
    }
    return acc / stats.n();
}

}  // namespace respen
