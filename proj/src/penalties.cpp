#include "respen/penalties.hpp"

#include <cmath>
#include <stdexcept>

#include "respen/diagnostics.hpp"

namespace respen {

namespace {

void require_from_n_points(const CellStats& stats, int n) {
    if (stats.n() != n) {
        throw std::invalid_argument("stats were not computed from n points");
    }
}

double closed_penalty_cell(double r_sum, int count, double css) {
    if (count < 2) return 0.0;
    return r_sum * css / (static_cast<double>(count) * (count - 1));
}

}  // namespace

double rp_penalty_closed(const CellStats& stats, const WeightScheme& scheme,
                         double c, int n) {
    if (!scheme.exchangeable()) {
        throw std::domain_error("closed-form penalty needs exchangeable weights");
    }
    require_from_n_points(stats, n);
    double acc = 0.0;
    for (int k = 0; k < stats.cells(); ++k) {
        if (stats.count[k] >= 2) {
            acc += closed_penalty_cell(
                r1w(scheme, n, stats.count[k]) + r2w(scheme, n, stats.count[k]),
                stats.count[k], stats.centered_ss(k));
        }
    }
    return c * acc / n;
}

double rp_penalty_closed(const CellStats& stats, const RTable& table, double c) {
    const int n = table.n();
    require_from_n_points(stats, n);
    double acc = 0.0;
    for (int k = 0; k < stats.cells(); ++k) {
        if (stats.count[k] >= 2) {
            acc += closed_penalty_cell(table.r_sum(stats.count[k]),
                                       stats.count[k], stats.centered_ss(k));
        }
    }
    return c * acc / n;
}

McPenalty rp_penalty_mc_with(
    const std::function<void(Rng&, std::vector<double>&)>& sampler,
    const Dataset& dataset, const Partition& partition, double c, int draws,
    Rng& rng) {
    if (draws < 2) throw std::invalid_argument("need at least 2 draws");
    const int n = dataset.n();
    const int d = partition.cells();

    std::vector<int> cell_of(n);
    std::vector<int> count(d, 0);
    std::vector<double> sum_y(d, 0.0);
    for (int i = 0; i < n; ++i) {
        cell_of[i] = partition.locate(dataset.x[i]);
        count[cell_of[i]] += 1;
        sum_y[cell_of[i]] += dataset.y[i];
    }
    std::vector<double> beta(d, 0.0);
    for (int k = 0; k < d; ++k) {
        if (count[k] > 0) beta[k] = sum_y[k] / count[k];
    }

    // per-draw, per-cell pieces kept for the jackknife
    std::vector<double> cond_sq(static_cast<std::size_t>(draws) * d, 0.0);
    std::vector<double> plug(static_cast<std::size_t>(draws) * d, 0.0);
    std::vector<char> positive(static_cast<std::size_t>(draws) * d, 0);

    std::vector<double> w;
    std::vector<double> w_sum(d), wy_sum(d);
    for (int b = 0; b < draws; ++b) {
        sampler(rng, w);
        std::fill(w_sum.begin(), w_sum.end(), 0.0);
        std::fill(wy_sum.begin(), wy_sum.end(), 0.0);
        for (int i = 0; i < n; ++i) {
            w_sum[cell_of[i]] += w[i];
            wy_sum[cell_of[i]] += w[i] * dataset.y[i];
        }
        for (int k = 0; k < d; ++k) {
            if (count[k] == 0 || w_sum[k] <= 0.0) continue;
            const double beta_w = wy_sum[k] / w_sum[k];
            const double dd = beta_w - beta[k];
            const double sq = dd * dd;
            const double w_hat = w_sum[k] / count[k];
            const std::size_t at = static_cast<std::size_t>(b) * d + k;
            cond_sq[at] = sq;
            plug[at] = w_hat * sq;
            positive[at] = 1;
        }
    }

    std::vector<long> n_pos(d, 0);
    std::vector<double> cond_total(d, 0.0), plug_total(d, 0.0);
    for (int b = 0; b < draws; ++b) {
        for (int k = 0; k < d; ++k) {
            const std::size_t at = static_cast<std::size_t>(b) * d + k;
            n_pos[k] += positive[at];
            cond_total[k] += cond_sq[at];
            plug_total[k] += plug[at];
        }
    }

    McPenalty result;
    const auto penalty_for = [&](int skip) {
        const int used = draws - (skip >= 0 ? 1 : 0);
        double acc = 0.0;
        for (int k = 0; k < d; ++k) {
            if (count[k] == 0) continue;
            const double p_hat = static_cast<double>(count[k]) / n;
            long pos = n_pos[k];
            double cond = cond_total[k];
            double pl = plug_total[k];
            if (skip >= 0) {
                const std::size_t at = static_cast<std::size_t>(skip) * d + k;
                pos -= positive[at];
                cond -= cond_sq[at];
                pl -= plug[at];
            }
            if (pos > 0) acc += p_hat * cond / pos;
            acc += p_hat * pl / used;
        }
        return c * acc;
    };

    result.value = penalty_for(-1);
    for (int k = 0; k < d; ++k) {
        if (count[k] > 0 && n_pos[k] == 0) {
            result.degenerate = true;
            result.degenerate_cells += 1;
        }
    }

    // leave-one-draw-out jackknife
    double mean = 0.0;
    std::vector<double> loo_vals(draws);
    for (int b = 0; b < draws; ++b) {
        loo_vals[b] = penalty_for(b);
        mean += loo_vals[b];
    }
    mean /= draws;
    double ss = 0.0;
    for (double v : loo_vals) ss += (v - mean) * (v - mean);
    result.std_error = std::sqrt(ss * (draws - 1) / draws);
    return result;
}

McPenalty rp_penalty_mc(const Dataset& dataset, const Partition& partition,
                        const WeightScheme& scheme, double c, int draws,
                        Rng& rng) {
    const int n = dataset.n();
    return rp_penalty_mc_with(
        [&scheme, n](Rng& r, std::vector<double>& w) {
            sample_weights(scheme, n, r, w);
        },
        dataset, partition, c, draws, rng);
}

double estimate_sigma2(const Dataset& dataset) {
    validate_dataset(dataset);
    const int n = dataset.n();
    if (n < 2) throw std::invalid_argument("need n >= 2");
    const CellStats stats = cell_stats(dataset, Partition::regular(n / 2));
    double rss = 0.0;
    for (int k = 0; k < stats.cells(); ++k) {
        if (stats.count[k] > 0) {
            rss += stats.sum_y2[k] - stats.sum_y[k] * stats.sum_y[k] / stats.count[k];
        }
    }
    return rss / (n - n / 2);
}

double mallows_penalty(int dim, double sigma2, int n, double c_ov) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    return c_ov * 2.0 * sigma2 * dim / n;
}

double expected_ideal_penalty(const RegressionTruth& truth,
                              const Partition& partition, int n, double c_ov) {
    double acc = 0.0;
    for (int k = 0; k < partition.cells(); ++k) {
        const double a = partition.lower(k);
        const double b = partition.upper(k);
        acc += (2.0 + delta_ideal(n, b - a)) * truth.cell_sigma2(a, b);
    }
    return c_ov * acc / n;
}

double vfold_penalty(const Dataset& dataset, const Partition& partition, int v,
                     double c, std::span<const int> fold_assignment) {
    validate_dataset(dataset);
    const int n = dataset.n();
    if (v < 2) throw std::invalid_argument("need V >= 2");
    if (static_cast<int>(fold_assignment.size()) != n) {
        throw std::invalid_argument("fold assignment size must equal n");
    }
    const int d = partition.cells();

    std::vector<int> cell_of(n);
    std::vector<int> count(d, 0);
    std::vector<double> sum_y(d, 0.0), sum_y2(d, 0.0);
    for (int i = 0; i < n; ++i) {
        const int k = partition.locate(dataset.x[i]);
        cell_of[i] = k;
        count[k] += 1;
        sum_y[k] += dataset.y[i];
        sum_y2[k] += dataset.y[i] * dataset.y[i];
    }

    std::vector<int> fold_count(static_cast<std::size_t>(v) * d, 0);
    std::vector<double> fold_sum(static_cast<std::size_t>(v) * d, 0.0);
    std::vector<double> fold_sum2(static_cast<std::size_t>(v) * d, 0.0);
    std::vector<int> fold_size(v, 0);
    for (int i = 0; i < n; ++i) {
        const int f = fold_assignment[i];
        if (f < 0 || f >= v) throw std::invalid_argument("fold index out of range");
        const std::size_t at = static_cast<std::size_t>(f) * d + cell_of[i];
        fold_count[at] += 1;
        fold_sum[at] += dataset.y[i];
        fold_sum2[at] += dataset.y[i] * dataset.y[i];
        fold_size[f] += 1;
    }

    double acc = 0.0;
    for (int f = 0; f < v; ++f) {
        const int train_n = n - fold_size[f];
        if (train_n == 0) throw std::domain_error("fold leaves no training data");
        double full_risk = 0.0;   // all n points against the fold-out fit
        double train_risk = 0.0;  // training points only
        for (int k = 0; k < d; ++k) {
            const std::size_t at = static_cast<std::size_t>(f) * d + k;
            const int train_count = count[k] - fold_count[at];
            if (train_count == 0) {
                if (count[k] > 0) {
                    throw std::domain_error(
                        "fold leaves an empty cell: model must be filtered");
                }
                continue;
            }
            const double beta = (sum_y[k] - fold_sum[at]) / train_count;
            full_risk += sum_y2[k] - 2.0 * beta * sum_y[k] +
                         static_cast<double>(count[k]) * beta * beta;
            train_risk += (sum_y2[k] - fold_sum2[at]) -
                          2.0 * beta * (sum_y[k] - fold_sum[at]) +
                          static_cast<double>(train_count) * beta * beta;
        }
        acc += full_risk / n - train_risk / train_n;
    }
    return c * acc / v;
}

}  // namespace respen
