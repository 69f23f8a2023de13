#ifndef RESPEN_SELECTION_HPP
#define RESPEN_SELECTION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "respen/penalties.hpp"

namespace respen {

struct ModelCollection {
    std::vector<Partition> models;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(models.size()); }
    int dim(int m) const { return models[m].cells(); }
};

void validate_collection(const ModelCollection& collection);

struct SelectionResult {
    int selected_index = -1;
    std::vector<double> criterion_values;  // +infinity for filtered models
    std::vector<char> admissible;          // true when the model survived filtering
    std::vector<double> penalty_values;    // 0 for pure CV criteria
};

// true iff every cell of the model holds at least `threshold` datapoints.
// Throws std::domain_error if no model survives.
std::vector<char> filter_models(const ModelCollection& collection,
                                const Dataset& dataset, int threshold = 3);

// Everything select_penalized may need beyond the data: the truth for the
// expected-ideal penalty, and a seed for Monte-Carlo draws / fold draws.
struct SelectionInputs {
    const RegressionTruth* truth = nullptr;
    std::uint64_t seed = 0;
};

// crit(m) = empirical risk + penalty over admissible models; ties within
// 1e-12 go to the smallest dimension, then the smallest index.
SelectionResult select_penalized(const Dataset& dataset,
                                 const ModelCollection& collection,
                                 const PenaltySpec& spec,
                                 const SelectionInputs& inputs = {});

// V-fold cross-validation: crit(m) = mean validation risk. Models that are
// untrainable on some fold are filtered for this criterion only.
SelectionResult select_vfcv(const Dataset& dataset,
                            const ModelCollection& collection, int v,
                            std::span<const int> fold_assignment);

// Argmin with the tie-break above over (criterion, dimension) pairs.
int pick_argmin(std::span<const double> criteria, std::span<const int> dims,
                double tol = 1e-12);

}  // namespace respen

#endif  // RESPEN_SELECTION_HPP
