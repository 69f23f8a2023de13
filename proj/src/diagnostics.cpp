#include "respen/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "respen/csv.hpp"

namespace respen {

namespace {

// Walks the Binomial(n, p) pmf in log space and accumulates fn(k, pmf).
template <typename Fn>
void binomial_scan(int n, double p, Fn&& fn) {
    if (p == 1.0) {
        fn(n, 1.0);
        return;
    }
    const double log_odds = std::log(p) - std::log1p(-p);
    double logpmf = n * std::log1p(-p);
    fn(0, std::exp(logpmf));
    for (int k = 1; k <= n; ++k) {
        logpmf += std::log(static_cast<double>(n - k + 1)) -
                  std::log(static_cast<double>(k)) + log_odds;
        fn(k, std::exp(logpmf));
    }
}

void check_np(int n, double p) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("need p in (0, 1]");
}

}  // namespace

double delta_ideal(int n, double p) {
    check_np(n, p);
    const double np = n * p;
    double acc = 0.0;
    binomial_scan(n, p, [&acc, np](int k, double pmf) {
        acc += (k == 0) ? pmf * (np + 1.0) : pmf * (1.0 + np / k);
    });
    return acc - 2.0;
}

double delta_penw(const WeightScheme& scheme, int n, int np_hat) {
    if (np_hat < 2) return -2.0;  // the penalty vanishes on one-point cells
    return c_w(scheme, n) * (r1w(scheme, n, np_hat) + r2w(scheme, n, np_hat)) -
           2.0;
}

namespace {

double delta_penw_bar_with(const RTable& table, double cw, int n, double p) {
    double acc = 0.0;
    double p0 = 0.0;
    binomial_scan(n, p, [&](int k, double pmf) {
        if (k == 0) {
            p0 = pmf;
        } else {
            acc += pmf * ((k >= 2) ? cw * table.r_sum(k) - 2.0 : -2.0);
        }
    });
    return acc / (1.0 - p0);
}

}  // namespace

double delta_penw_bar(const WeightScheme& scheme, int n, double p) {
    check_np(n, p);
    if (!scheme.exchangeable()) {
        throw std::domain_error("needs an exchangeable scheme");
    }
    return delta_penw_bar_with(RTable(scheme, n), c_w(scheme, n), n, p);
}

DeltaCurve ordering_report(int n, const std::vector<int>& np_grid) {
    if (n < 4) throw std::invalid_argument("need n >= 4");
    for (int k : np_grid) {
        if (k < 1 || k > n) throw std::invalid_argument("np grid must lie in [1, n]");
    }
    const std::vector<std::pair<std::string, WeightScheme>> schemes = {
        {"efr", WeightScheme::efron(n)},
        {"rad", WeightScheme::rademacher(0.5)},
        {"poi", WeightScheme::poisson(1.0)},
        {"rho2", WeightScheme::rho(n / 2)},
        {"rho4", WeightScheme::rho(n / 4)},
        {"loo", WeightScheme::loo()},
    };

    DeltaCurve curve;
    curve.n = n;
    curve.np_grid = np_grid;
    curve.ideal.reserve(np_grid.size());
    for (int k : np_grid) {
        curve.ideal.push_back(delta_ideal(n, static_cast<double>(k) / n));
    }
    for (const auto& [name, scheme] : schemes) {
        const RTable table(scheme, n);
        const double cw = c_w(scheme, n);
        std::vector<double> vals;
        std::vector<int> signs;
        vals.reserve(np_grid.size());
        signs.reserve(np_grid.size());
        for (std::size_t i = 0; i < np_grid.size(); ++i) {
            const double bar = delta_penw_bar_with(
                table, cw, n, static_cast<double>(np_grid[i]) / n);
            vals.push_back(bar);
            const double diff = bar - curve.ideal[i];
            signs.push_back((diff > 0) - (diff < 0));
        }
        curve.scheme_names.push_back(name);
        curve.per_scheme.push_back(std::move(vals));
        curve.sign_vs_ideal.push_back(std::move(signs));
    }
    return curve;
}

DeltaCurve ordering_report(int n) {
    std::vector<int> grid;
    for (int k = 3; k <= n; ++k) grid.push_back(k);
    return ordering_report(n, grid);
}

void write_delta_csv(std::ostream& out, const DeltaCurve& curve) {
    out << "np,delta_ideal";
    for (const auto& name : curve.scheme_names) out << ",delta_" << name;
    out << '\n';
    for (std::size_t i = 0; i < curve.np_grid.size(); ++i) {
        out << curve.np_grid[i] << ',' << format_double(curve.ideal[i]);
        for (const auto& vals : curve.per_scheme) {
            out << ',' << format_double(vals[i]);
        }
        out << '\n';
    }
}

}  // namespace respen
