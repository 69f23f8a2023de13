#ifndef RESPEN_EINV_HPP
#define RESPEN_EINV_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace respen {

enum class EinvLaw { Binomial, Hypergeometric, Poisson };

// Query for e_inv(Z) = E[Z] E[1/Z | Z > 0].
struct EinvQuery {
    EinvLaw law = EinvLaw::Binomial;
    int n = 0;      // Binomial trials / Hypergeometric population size
    double p = 0;   // Binomial success probability, in (0, 1]
    int r = 0;      // Hypergeometric: marked elements, 1 <= r <= n
    int q = 0;      // Hypergeometric: draws, 1 <= q <= n
    double mu = 0;  // Poisson mean
    double tolerance = 1e-13;  // Poisson tail truncation mass

    static EinvQuery binomial(int n, double p, double tol = 1e-13);
    static EinvQuery hypergeometric(int n, int r, int q, double tol = 1e-13);
    static EinvQuery poisson(double mu, double tol = 1e-13);

    std::string describe() const;
};

// Exact pmf summation; Poisson series truncated once the remaining tail
// mass drops below `tolerance` (the discarded 1/k contribution is below the
// tail mass, so the overall error budget is ~1e-12 at the default).
double einv(const EinvQuery& query);

// One grid point of the analytic sanity bounds on e_inv. `lower`/`upper`
// combine every bound applicable to the query; `exact_error` is set for the
// q = n-1 hypergeometric case, which has a closed form.
struct EinvBoundCheck {
    double value = 0;
    double lower = 0;
    double upper = 0;
    bool has_exact = false;
    double exact_error = 0;
    bool pass = false;
};

EinvBoundCheck check_einv_bounds(const EinvQuery& query);

struct EinvBoundsReport {
    long long checked = 0;
    long long failed = 0;
    // first few failures, for reporting
    std::vector<std::pair<EinvQuery, EinvBoundCheck>> failures;

    bool all_pass() const { return failed == 0; }
};

// Bound verification over an explicit grid; failures are reported, never
// thrown.
EinvBoundsReport verify_einv_bounds(const std::vector<EinvQuery>& grid);

// Streams the default verification grid: Binomial n in {3..max_n} with
// integer np >= 1 (plus p = 1/2), Hypergeometric with all admissible (r, q)
// for n <= max_n, Poisson mu in {0.1, 0.2, ..., mu_max}.
void for_each_default_einv_query(
    int max_n, double mu_max, const std::function<void(const EinvQuery&)>& fn);

EinvBoundsReport verify_einv_bounds_default(int max_n = 200,
                                            double mu_max = 50.0);

}  // namespace respen

#endif  // RESPEN_EINV_HPP
