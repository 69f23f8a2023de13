#ifndef RESPEN_PENALTIES_HPP
#define RESPEN_PENALTIES_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "respen/cell_stats.hpp"
#include "respen/rng.hpp"
#include "respen/truth.hpp"
#include "respen/weights.hpp"

namespace respen {

// Which penalty to use in penalized selection, with the effective constant
// C = c_over_cw * C_W for the resampling kinds (c_over_cw * base otherwise).
struct PenaltySpec {
    enum class Kind { RpClosed, RpMonteCarlo, Mallows, ExpectedIdeal, VFoldPen };

    Kind kind = Kind::RpClosed;
    WeightScheme scheme = WeightScheme::loo();  // RpClosed / RpMonteCarlo
    int mc_draws = 10000;                       // RpMonteCarlo
    int vfold_v = 5;                            // VFoldPen
    double c_over_cw = 1.0;                     // overpenalization factor
};

// Closed-form resampling penalty
//   (C/n) sum_cells (R1 + R2)(count) * centered_ss / (count (count - 1)),
// cells with count <= 1 contributing zero. Requires an exchangeable scheme.
double rp_penalty_closed(const CellStats& stats, const WeightScheme& scheme,
                         double c, int n);
// Same with precomputed R1 + R2 per count (fast path over collections).
double rp_penalty_closed(const CellStats& stats, const RTable& table, double c);

struct McPenalty {
    double value = 0;
    double std_error = 0;      // leave-one-draw-out jackknife
    bool degenerate = false;   // some occupied cell never resampled positive
    int degenerate_cells = 0;
};

// Monte-Carlo resampling penalty over B weight draws. The within-cell term
// conditioned on positive resampled mass is averaged only over draws where
// the cell resampled positive; the plug-in term over all draws.
McPenalty rp_penalty_mc(const Dataset& dataset, const Partition& partition,
                        const WeightScheme& scheme, double c, int draws,
                        Rng& rng);

// Generic-sampler variant: `sampler(rng, w)` must fill w with n weights.
// Exhaustive enumerations (e.g. the n leave-one-out vectors) plug in here.
McPenalty rp_penalty_mc_with(
    const std::function<void(Rng&, std::vector<double>&)>& sampler,
    const Dataset& dataset, const Partition& partition, double c, int draws,
    Rng& rng);

// Residual variance against the regular floor(n/2)-cell histogram,
// sigma2_hat = RSS / (n - floor(n/2)); empty cells contribute no residual.
double estimate_sigma2(const Dataset& dataset);

// c_ov * 2 * sigma2 * dim / n.
double mallows_penalty(int dim, double sigma2, int n, double c_ov);

// c_ov * (1/n) * sum_cells (2 + delta_ideal(n, p_cell)) * sigma2_cell; the
// exact mean of the ideal penalty under the known truth. Simulation only.
double expected_ideal_penalty(const RegressionTruth& truth,
                              const Partition& partition, int n, double c_ov);

// c * (1/V) * sum_folds [ P_n loss(fit on complement) - training loss ].
// Throws std::domain_error if some fold leaves an empty cell (the model
// must be filtered for this penalty).
double vfold_penalty(const Dataset& dataset, const Partition& partition, int v,
                     double c, std::span<const int> fold_assignment);

}  // namespace respen

#endif  // RESPEN_PENALTIES_HPP
