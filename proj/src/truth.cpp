#include "respen/truth.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "respen/quadrature.hpp"

namespace respen {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kCellTol = 1e-10;
}  // namespace

RegressionTruth::RegressionTruth(std::function<double(double)> s,
                                 std::function<double(double)> sigma,
                                 std::vector<double> jump_points)
    : s_(std::move(s)), sigma_(std::move(sigma)), jumps_(std::move(jump_points)) {
    if (!s_ || !sigma_) {
        throw std::invalid_argument("truth requires both s and sigma");
    }
}

double RegressionTruth::cell_mean(double a, double b) const {
    return integrate([this](double t) { return s_(t); }, a, b, kCellTol, jumps_) /
           (b - a);
}

double RegressionTruth::cell_sigma2(double a, double b) const {
    return integrate([this](double t) { const double sd = sigma_(t); return sd * sd; },
                     a, b, kCellTol, jumps_) /
           (b - a);
}

double RegressionTruth::cell_bias_integral(double a, double b) const {
    const double mean = cell_mean(a, b);
    return integrate(
        [this, mean](double t) {
            const double d = s_(t) - mean;
            return d * d;
        },
        a, b, kCellTol, jumps_);
}

double excess_loss(const RegressionTruth& truth, const Regressogram& fit) {
    if (!fit.all_defined()) {
        return std::numeric_limits<double>::infinity();
    }
    double acc = 0.0;
    for (int k = 0; k < fit.partition.cells(); ++k) {
        const double v = fit.values[k];
        acc += integrate(
            [&truth, v](double t) {
                const double d = v - truth.s(t);
                return d * d;
            },
            fit.partition.lower(k), fit.partition.upper(k), kCellTol,
            truth.jump_points());
    }
    return acc;
}

double bias_loss(const RegressionTruth& truth, const Partition& partition) {
    double acc = 0.0;
    for (int k = 0; k < partition.cells(); ++k) {
        acc += truth.cell_bias_integral(partition.lower(k), partition.upper(k));
    }
    return acc;
}

TruthCellMoments truth_cell_moments(const RegressionTruth& truth,
                                    const Partition& partition) {
    const int d = partition.cells();
    TruthCellMoments m;
    m.p.resize(d);
    m.beta.resize(d);
    m.sigma2.resize(d);
    m.bias = 0.0;
    for (int k = 0; k < d; ++k) {
        const double a = partition.lower(k);
        const double b = partition.upper(k);
        m.p[k] = b - a;
        m.beta[k] = truth.cell_mean(a, b);
        m.sigma2[k] = truth.cell_sigma2(a, b);
        m.bias += truth.cell_bias_integral(a, b);
    }
    return m;
}

double heavisine(double x) {
    const auto sgn = [](double t) { return (t > 0) - (t < 0); };
    return 4.0 * std::sin(4.0 * kPi * x) - sgn(x - 0.3) - sgn(0.72 - x);
}

RegressionTruth make_truth(const TruthSpec& spec) {
    std::function<double(double)> s;
    std::vector<double> jumps;
    switch (spec.s_kind) {
        case TruthSpec::SKind::SinPi:
            s = [](double x) { return std::sin(kPi * x); };
            break;
        case TruthSpec::SKind::HeaviSine:
            s = [](double x) { return heavisine(x); };
            jumps = {0.3, 0.72};
            break;
        case TruthSpec::SKind::Constant:
            s = [c = spec.s_value](double) { return c; };
            break;
    }
    std::function<double(double)> sigma;
    switch (spec.sigma_kind) {
        case TruthSpec::SigmaKind::Constant:
            sigma = [v = spec.sigma_a](double) { return v; };
            break;
        case TruthSpec::SigmaKind::Linear:
            sigma = [](double x) { return x; };
            break;
        case TruthSpec::SigmaKind::Affine:
            sigma = [a = spec.sigma_a, b = spec.sigma_b](double x) {
                return a + b * x;
            };
            break;
    }
    return RegressionTruth(std::move(s), std::move(sigma), std::move(jumps));
}

}  // namespace respen
