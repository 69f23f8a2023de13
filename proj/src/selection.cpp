#include "respen/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace respen {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void validate_collection(const ModelCollection& collection) {
    if (collection.models.empty()) {
        throw std::invalid_argument("collection must be nonempty");
    }
    if (collection.labels.size() != collection.models.size()) {
        throw std::invalid_argument("one label per model required");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : collection.labels) {
        if (!seen.insert(label).second) {
            throw std::invalid_argument("duplicate model label: " + label);
        }
    }
}

std::vector<char> filter_models(const ModelCollection& collection,
                                const Dataset& dataset, int threshold) {
    validate_collection(collection);
    validate_dataset(dataset);
    std::vector<char> keep(collection.size(), 0);
    bool any = false;
    for (int m = 0; m < collection.size(); ++m) {
        const CellStats stats = cell_stats(dataset, collection.models[m]);
        if (stats.min_count() >= threshold) {
            keep[m] = 1;
            any = true;
        }
    }
    if (!any) {
        throw std::domain_error("every model was filtered out");
    }
    return keep;
}

int pick_argmin(std::span<const double> criteria, std::span<const int> dims,
                double tol) {
    double best_value = kInf;
    for (double v : criteria) best_value = std::min(best_value, v);
    if (std::isinf(best_value)) {
        throw std::domain_error("no admissible model to select from");
    }
    // smallest dimension among the near-minimizers, then smallest index
    int best = -1;
    for (std::size_t m = 0; m < criteria.size(); ++m) {
        if (criteria[m] <= best_value + tol &&
            (best < 0 || dims[m] < dims[best])) {
            best = static_cast<int>(m);
        }
    }
    return best;
}

SelectionResult select_penalized(const Dataset& dataset,
                                 const ModelCollection& collection,
                                 const PenaltySpec& spec,
                                 const SelectionInputs& inputs) {
    if (!(spec.c_over_cw >= 0.0)) {
        throw std::invalid_argument("c_over_cw must be >= 0");
    }
    const int n = dataset.n();
    SelectionResult result;
    result.admissible = filter_models(collection, dataset);
    result.criterion_values.assign(collection.size(), kInf);
    result.penalty_values.assign(collection.size(), 0.0);

    double sigma2 = 0.0;
    if (spec.kind == PenaltySpec::Kind::Mallows) {
        sigma2 = estimate_sigma2(dataset);
    }
    std::optional<RTable> table;
    double c = spec.c_over_cw;
    if (spec.kind == PenaltySpec::Kind::RpClosed ||
        spec.kind == PenaltySpec::Kind::RpMonteCarlo) {
        c = spec.c_over_cw * c_w(spec.scheme, n);
        if (spec.kind == PenaltySpec::Kind::RpClosed) {
            table.emplace(spec.scheme, n);
        }
    } else if (spec.kind == PenaltySpec::Kind::VFoldPen) {
        c = spec.c_over_cw * (spec.vfold_v - 1);
    }

    Rng rng(substream_seed(inputs.seed, 0, stream_tag::mc));
    std::vector<int> dims(collection.size());
    for (int m = 0; m < collection.size(); ++m) {
        dims[m] = collection.dim(m);
        if (!result.admissible[m]) continue;
        const CellStats stats = cell_stats(dataset, collection.models[m]);
        double pen = 0.0;
        switch (spec.kind) {
            case PenaltySpec::Kind::RpClosed:
                pen = rp_penalty_closed(stats, *table, c);
                break;
            case PenaltySpec::Kind::RpMonteCarlo:
                pen = rp_penalty_mc(dataset, collection.models[m], spec.scheme, c,
                                    spec.mc_draws, rng)
                          .value;
                break;
            case PenaltySpec::Kind::Mallows:
                pen = mallows_penalty(dims[m], sigma2, n, spec.c_over_cw);
                break;
            case PenaltySpec::Kind::ExpectedIdeal:
                if (inputs.truth == nullptr) {
                    throw std::invalid_argument(
                        "expected-ideal penalty needs the simulation truth");
                }
                pen = expected_ideal_penalty(*inputs.truth, collection.models[m],
                                             n, spec.c_over_cw);
                break;
            case PenaltySpec::Kind::VFoldPen: {
                const auto folds = make_fold_assignment(
                    n, spec.vfold_v,
                    substream_seed(inputs.seed, m, stream_tag::folds));
                pen = vfold_penalty(dataset, collection.models[m], spec.vfold_v, c,
                                    folds);
                break;
            }
        }
        result.penalty_values[m] = pen;
        result.criterion_values[m] = empirical_risk(stats) + pen;
    }
    result.selected_index = pick_argmin(result.criterion_values, dims);
    return result;
}

SelectionResult select_vfcv(const Dataset& dataset,
                            const ModelCollection& collection, int v,
                            std::span<const int> fold_assignment) {
    const int n = dataset.n();
    if (v < 2 || static_cast<int>(fold_assignment.size()) != n) {
        throw std::invalid_argument("need V >= 2 and one fold index per point");
    }
    SelectionResult result;
    result.admissible = filter_models(collection, dataset);
    result.criterion_values.assign(collection.size(), kInf);
    result.penalty_values.assign(collection.size(), 0.0);

    std::vector<int> fold_size(v, 0);
    for (int f : fold_assignment) {
        if (f < 0 || f >= v) throw std::invalid_argument("fold index out of range");
        fold_size[f] += 1;
    }

    std::vector<int> dims(collection.size());
    std::vector<int> cell_of(n);
    for (int m = 0; m < collection.size(); ++m) {
        dims[m] = collection.dim(m);
        if (!result.admissible[m]) continue;
        const Partition& part = collection.models[m];
        const int d = part.cells();
        std::vector<int> count(d, 0);
        std::vector<double> sum_y(d, 0.0);
        for (int i = 0; i < n; ++i) {
            cell_of[i] = part.locate(dataset.x[i]);
            count[cell_of[i]] += 1;
            sum_y[cell_of[i]] += dataset.y[i];
        }
        std::vector<int> fold_count(static_cast<std::size_t>(v) * d, 0);
        std::vector<double> fold_sum(static_cast<std::size_t>(v) * d, 0.0);
        std::vector<double> fold_sum2(static_cast<std::size_t>(v) * d, 0.0);
        for (int i = 0; i < n; ++i) {
            const std::size_t at =
                static_cast<std::size_t>(fold_assignment[i]) * d + cell_of[i];
            fold_count[at] += 1;
            fold_sum[at] += dataset.y[i];
            fold_sum2[at] += dataset.y[i] * dataset.y[i];
        }

        double crit = 0.0;
        bool trainable = true;
        for (int f = 0; f < v && trainable; ++f) {
            double fold_risk = 0.0;
            for (int k = 0; k < d; ++k) {
                const std::size_t at = static_cast<std::size_t>(f) * d + k;
                const int train_count = count[k] - fold_count[at];
                if (train_count == 0 && count[k] > 0) {
                    trainable = false;  // filtered for this criterion only
                    break;
                }
                if (fold_count[at] == 0) continue;
                const double beta = (sum_y[k] - fold_sum[at]) / train_count;
                fold_risk += fold_sum2[at] - 2.0 * beta * fold_sum[at] +
                             static_cast<double>(fold_count[at]) * beta * beta;
            }
            if (fold_size[f] > 0) crit += fold_risk / fold_size[f];
        }
        if (trainable) {
            result.criterion_values[m] = crit / v;
        } else {
            result.admissible[m] = 0;
        }
    }
    result.selected_index = pick_argmin(result.criterion_values, dims);
    return result;
}

}  // namespace respen
