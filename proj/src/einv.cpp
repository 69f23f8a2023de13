#include "respen/einv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace respen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double lchoose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void validate(const EinvQuery& query) {
    switch (query.law) {
        case EinvLaw::Binomial:
            if (query.n < 1 || !(query.p > 0.0) || query.p > 1.0) {
                throw std::invalid_argument("binomial needs n >= 1, p in (0, 1]");
            }
            break;
        case EinvLaw::Hypergeometric:
            if (query.r < 1 || query.q < 1 || query.n < query.r ||
                query.n < query.q) {
                throw std::invalid_argument(
                    "hypergeometric needs n >= r >= 1, n >= q >= 1");
            }
            break;
        case EinvLaw::Poisson:
            if (!(query.mu > 0.0)) {
                throw std::invalid_argument("poisson needs mu > 0");
            }
            break;
    }
}

double einv_binomial(int n, double p) {
    if (p == 1.0) return 1.0;  // Z = n almost surely
    const double log_odds = std::log(p) - std::log1p(-p);
    const double logpmf0 = n * std::log1p(-p);
    double logpmf = logpmf0;
    double sum_inv = 0.0;
    for (int k = 1; k <= n; ++k) {
        logpmf += std::log(static_cast<double>(n - k + 1)) -
                  std::log(static_cast<double>(k)) + log_odds;
        sum_inv += std::exp(logpmf) / k;
    }
    const double p_pos = -std::expm1(logpmf0);
    return n * p * sum_inv / p_pos;
}

double einv_hypergeometric(int n, int r, int q) {
    const int lo = std::max(0, q + r - n);
    const int hi = std::min(q, r);
    double logpmf = lchoose(r, lo) + lchoose(n - r, q - lo) - lchoose(n, q);
    const double pmf0 = (lo == 0) ? std::exp(logpmf) : 0.0;
    double sum_inv = (lo >= 1) ? std::exp(logpmf) / lo : 0.0;
    for (int k = lo; k < hi; ++k) {
        logpmf += std::log(static_cast<double>(r - k)) +
                  std::log(static_cast<double>(q - k)) -
                  std::log(static_cast<double>(k + 1)) -
                  std::log(static_cast<double>(n - r - q + k + 1));
        sum_inv += std::exp(logpmf) / (k + 1);
    }
    const double mean = static_cast<double>(q) * r / n;
    return mean * sum_inv / (1.0 - pmf0);
}

double einv_poisson(double mu, double tol) {
    double logpmf = -mu;
    double cum = std::exp(logpmf);
    double sum_inv = 0.0;
    const long hard_cap =
        static_cast<long>(mu + 200.0 * std::sqrt(mu + 1.0)) + 1000;
    for (long k = 1; k <= hard_cap; ++k) {
        logpmf += std::log(mu) - std::log(static_cast<double>(k));
        const double pmf = std::exp(logpmf);
        cum += pmf;
        sum_inv += pmf / k;
        if (k >= mu && 1.0 - cum < tol) break;
    }
    return mu * sum_inv / -std::expm1(-mu);
}

}  // namespace

EinvQuery EinvQuery::binomial(int n, double p, double tol) {
    EinvQuery query;
    query.law = EinvLaw::Binomial;
    query.n = n;
    query.p = p;
    query.tolerance = tol;
    return query;
}

EinvQuery EinvQuery::hypergeometric(int n, int r, int q, double tol) {
    EinvQuery query;
    query.law = EinvLaw::Hypergeometric;
    query.n = n;
    query.r = r;
    query.q = q;
    query.tolerance = tol;
    return query;
}

EinvQuery EinvQuery::poisson(double mu, double tol) {
    EinvQuery query;
    query.law = EinvLaw::Poisson;
    query.mu = mu;
    query.tolerance = tol;
    return query;
}

std::string EinvQuery::describe() const {
    std::ostringstream out;
    switch (law) {
        case EinvLaw::Binomial:
            out << "Binomial(n=" << n << ", p=" << p << ")";
            break;
        case EinvLaw::Hypergeometric:
            out << "Hypergeometric(n=" << n << ", r=" << r << ", q=" << q << ")";
            break;
        case EinvLaw::Poisson:
            out << "Poisson(mu=" << mu << ")";
            break;
    }
    return out.str();
}

double einv(const EinvQuery& query) {
    validate(query);
    switch (query.law) {
        case EinvLaw::Binomial:
            return einv_binomial(query.n, query.p);
        case EinvLaw::Hypergeometric:
            return einv_hypergeometric(query.n, query.r, query.q);
        case EinvLaw::Poisson:
            return einv_poisson(query.mu, query.tolerance);
    }
    return 0.0;  // unreachable
}

EinvBoundCheck check_einv_bounds(const EinvQuery& query) {
    validate(query);
    EinvBoundCheck check;
    check.value = einv(query);
    double lower = -kInf;
    double upper = kInf;

    switch (query.law) {
        case EinvLaw::Binomial: {
            const double np = query.n * query.p;
            if (np >= 1.0) {
                lower = std::max(lower, 1.0 - std::exp(-np));
                upper = std::min(
                    upper, std::min(3.2, 1.0 + 5.1 * std::pow(np, -0.25)));
            }
            if (query.p == 0.5) {
                lower = std::max(lower, query.n >= 3 ? 1.0 : 0.0);
                upper = std::min(upper, 2.0 + 3e-4);
            }
            break;
        }
        case EinvLaw::Hypergeometric: {
            const int n = query.n;
            const int r = query.r;
            const int q = query.q;
            lower = std::max(
                lower, 1.0 - (r <= n - q
                                  ? std::exp(-static_cast<double>(q) * r / n)
                                  : 0.0));
            {
                // general upper bound, taken at epsilon = 1/2
                const double eps = 0.5;
                const double kappa3 = 0.9 + 1.4 / (eps * eps);
                if (r >= 2 &&
                    static_cast<double>(n) / q <=
                        (1.0 - eps) * 2.0 * r /
                            (2.0 + std::sqrt(3.0 * (r + 1) * std::log(r)))) {
                    upper = std::min(
                        upper, 1.0 + kappa3 * (static_cast<double>(n) / q) *
                                         std::sqrt(std::log(r) / r));
                }
            }
            if (n >= 2 && q == n / 2) {
                upper = std::min(upper, 14.3);
                if (r >= 26) upper = std::min(upper, 3.0);
            }
            if (q == n - 1 && n >= 2) {
                const double exact =
                    1.0 +
                    (1.0 / n) * ((r >= 2 ? (static_cast<double>(n - 1) * r) /
                                               (static_cast<double>(n) * (r - 1))
                                         : 0.0) -
                                 1.0);
                check.has_exact = true;
                check.exact_error = std::abs(check.value - exact);
                upper = std::min(
                    upper, 1.0 + (r >= 2 ? 1.0 / (static_cast<double>(n) * (r - 1))
                                         : 0.0));
                lower = std::max(lower, 1.0 - (r == 1 ? 1.0 / n : 0.0));
            }
            if (r >= n - q + 1 && n - q + 1 >= 2) {
                lower = std::max(lower, 1.0);
                // log-space product n^(n-q) / (n (n-1) ... (q+1))
                double log_ub = std::log(static_cast<double>(r)) -
                                std::log(static_cast<double>(r - n + q)) +
                                (n - q) * std::log(static_cast<double>(n));
                for (int j = q + 1; j <= n; ++j) {
                    log_ub -= std::log(static_cast<double>(j));
                }
                upper = std::min(upper, log_ub > 700.0 ? kInf : std::exp(log_ub));
            }
            break;
        }
        case EinvLaw::Poisson: {
            const double mu = query.mu;
            lower =
                std::max(lower, 1.0 - (mu < 1.61 ? std::exp(-mu) : 0.0));
            double u = 2.0 - 2.0 * std::exp(-2.0 * mu);
            if (mu > 2.0) {
                u = std::min(u, 1.0 + 2.0 * (1.0 + std::exp(-3.0)) / (mu - 2.0));
            }
            upper = std::min(upper, u);
            break;
        }
    }

    check.lower = lower;
    check.upper = upper;
    constexpr double slack = 1e-9;
    check.pass = check.value >= lower - slack && check.value <= upper + slack &&
                 (!check.has_exact || check.exact_error <= 1e-12);
    return check;
}

EinvBoundsReport verify_einv_bounds(const std::vector<EinvQuery>& grid) {
    EinvBoundsReport report;
    for (const auto& query : grid) {
        const EinvBoundCheck check = check_einv_bounds(query);
        ++report.checked;
        if (!check.pass) {
            ++report.failed;
            if (report.failures.size() < 32) {
                report.failures.emplace_back(query, check);
            }
        }
    }
    return report;
}

void for_each_default_einv_query(
    int max_n, double mu_max, const std::function<void(const EinvQuery&)>& fn) {
    for (int n = 3; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            fn(EinvQuery::binomial(n, static_cast<double>(k) / n));
        }
        fn(EinvQuery::binomial(n, 0.5));
    }
    for (int n = 1; n <= max_n; ++n) {
        for (int r = 1; r <= n; ++r) {
            for (int q = 1; q <= n; ++q) {
                fn(EinvQuery::hypergeometric(n, r, q));
            }
        }
    }
    for (int j = 1; j <= static_cast<int>(std::round(10.0 * mu_max)); ++j) {
        fn(EinvQuery::poisson(j / 10.0));
    }
}

EinvBoundsReport verify_einv_bounds_default(int max_n, double mu_max) {
    EinvBoundsReport report;
    for_each_default_einv_query(max_n, mu_max, [&report](const EinvQuery& query) {
        const EinvBoundCheck check = check_einv_bounds(query);
        ++report.checked;
        if (!check.pass) {
            ++report.failed;
            if (report.failures.size() < 32) {
                report.failures.emplace_back(query, check);
            }
        }
    });
    return report;
}

}  // namespace respen
