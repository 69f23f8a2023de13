#ifndef RESPEN_TRUTH_HPP
#define RESPEN_TRUTH_HPP

#include <functional>
#include <string>
#include <vector>

#include "respen/cell_stats.hpp"
#include "respen/partition.hpp"

namespace respen {

// Known regression function and noise level on [0, 1], with X uniform.
// Only used by simulations and diagnostics; fitting never sees it.
class RegressionTruth {
public:
    RegressionTruth(std::function<double(double)> s,
                    std::function<double(double)> sigma,
                    std::vector<double> jump_points = {});

    double s(double x) const { return s_(x); }
    double sigma(double x) const { return sigma_(x); }
    const std::vector<double>& jump_points() const { return jumps_; }

    // E[Y | X in [a,b)] = mean of s over the cell.
    double cell_mean(double a, double b) const;
    // E[(Y - s(X))^2 | X in [a,b)] = mean of sigma^2 over the cell.
    double cell_sigma2(double a, double b) const;
    // integral over [a,b] of (s - cell mean)^2.
    double cell_bias_integral(double a, double b) const;

private:
    std::function<double(double)> s_;
    std::function<double(double)> sigma_;
    std::vector<double> jumps_;
};

// Exact excess loss E[(fit(X) - s(X))^2], computed cell by cell by adaptive
// quadrature; +infinity if any cell is undefined.
double excess_loss(const RegressionTruth& truth, const Regressogram& fit);

// Approximation error ell(s, s_m) of the best piecewise-constant function.
double bias_loss(const RegressionTruth& truth, const Partition& partition);

// Replication-independent cell moments of the truth for one partition.
struct TruthCellMoments {
    std::vector<double> p;       // cell probabilities (widths under uniform X)
    std::vector<double> beta;    // cell means of s
    std::vector<double> sigma2;  // cell noise levels E[(Y - s(X))^2 | cell]
    double bias;                 // ell(s, s_m)
};

TruthCellMoments truth_cell_moments(const RegressionTruth& truth,
                                    const Partition& partition);

// Serializable description of a truth; the named functions cover every
// simulation experiment plus simple custom setups.
struct TruthSpec {
    enum class SKind { SinPi, HeaviSine, Constant };
    enum class SigmaKind { Constant, Linear, Affine };

    SKind s_kind = SKind::SinPi;
    double s_value = 0.0;  // Constant only
    SigmaKind sigma_kind = SigmaKind::Constant;
    double sigma_a = 1.0;  // Constant value, or intercept for Affine
    double sigma_b = 0.0;  // slope for Affine
};

RegressionTruth make_truth(const TruthSpec& spec);

// Donoho-Johnstone HeaviSine: 4 sin(4 pi x) - sgn(x - 0.3) - sgn(0.72 - x),
// with sgn(0) = 0. Jumps at 0.3 and 0.72.
double heavisine(double x);

}  // namespace respen

#endif  // RESPEN_TRUTH_HPP
