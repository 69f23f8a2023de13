#ifndef RESPEN_DIAGNOSTICS_HPP
#define RESPEN_DIAGNOSTICS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "respen/weights.hpp"

namespace respen {

// Second-order bias of the ideal penalty for a cell of probability p:
// the exact mean of the per-cell ideal-penalty contribution, relative to
// the asymptotic value 2, under binomial cell occupancy (empty cells follow
// the degenerate-cell conventions). Exact summation, pmf in log space.
double delta_ideal(int n, double p);

// Second-order bias of the resampling penalty at C = C_W for a cell holding
// np_hat points: C_W (R1 + R2) - 2, zero penalty below two points.
double delta_penw(const WeightScheme& scheme, int n, int np_hat);

// Occupancy-averaged version, conditional on the cell being non-empty.
double delta_penw_bar(const WeightScheme& scheme, int n, double p);

// Exact bias curves over an np grid, for the classical schemes at sample
// size n, plus the sign of (scheme curve - ideal curve) per grid point.
struct DeltaCurve {
    int n = 0;
    std::vector<int> np_grid;
    std::vector<double> ideal;
    std::vector<std::string> scheme_names;       // efr, rad, poi, rho2, rho4, loo
    std::vector<std::vector<double>> per_scheme; // [scheme][grid point]
    std::vector<std::vector<int>> sign_vs_ideal; // -1 / 0 / +1
};

DeltaCurve ordering_report(int n, const std::vector<int>& np_grid);
DeltaCurve ordering_report(int n);  // default grid {3, ..., n}

// Header: np,delta_ideal,delta_efr,delta_rad,delta_poi,delta_rho2,delta_rho4,delta_loo
void write_delta_csv(std::ostream& out, const DeltaCurve& curve);

}  // namespace respen

#endif  // RESPEN_DIAGNOSTICS_HPP
