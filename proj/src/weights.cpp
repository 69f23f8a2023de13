#include "respen/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "respen/einv.hpp"

namespace respen {

WeightScheme WeightScheme::efron(int m) {
    if (m < 1) throw std::invalid_argument("Efron needs m >= 1");
    WeightScheme s;
    s.kind_ = WeightKind::Efron;
    s.m_ = m;
    return s;
}

WeightScheme WeightScheme::rademacher(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("Rademacher needs p in (0, 1)");
    }
    WeightScheme s;
    s.kind_ = WeightKind::Rademacher;
    s.p_ = p;
    return s;
}

WeightScheme WeightScheme::poisson(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("Poisson needs mu > 0");
    WeightScheme s;
    s.kind_ = WeightKind::Poisson;
    s.mu_ = mu;
    return s;
}

WeightScheme WeightScheme::rho(int q) {
    if (q < 1) throw std::invalid_argument("Rho needs q >= 1");
    WeightScheme s;
    s.kind_ = WeightKind::Rho;
    s.q_ = q;
    return s;
}

WeightScheme WeightScheme::loo() {
    WeightScheme s;
    s.kind_ = WeightKind::Loo;
    return s;
}

WeightScheme WeightScheme::vfold_sub(int v, std::vector<int> fold_assignment) {
    if (v < 2) throw std::invalid_argument("V-fold needs V >= 2");
    for (int f : fold_assignment) {
        if (f < 0 || f >= v) throw std::invalid_argument("fold index out of range");
    }
    WeightScheme s;
    s.kind_ = WeightKind::VFoldSub;
    s.v_ = v;
    s.folds_ = std::make_shared<const std::vector<int>>(std::move(fold_assignment));
    return s;
}

std::string WeightScheme::name() const {
    switch (kind_) {
        case WeightKind::Efron:
            return "efron(" + std::to_string(m_) + ")";
        case WeightKind::Rademacher:
            return "rademacher(" + std::to_string(p_) + ")";
        case WeightKind::Poisson:
            return "poisson(" + std::to_string(mu_) + ")";
        case WeightKind::Rho:
            return "rho(" + std::to_string(q_) + ")";
        case WeightKind::Loo:
            return "loo";
        case WeightKind::VFoldSub:
            return "vfold_sub(" + std::to_string(v_) + ")";
    }
    return "?";
}

std::vector<int> make_fold_assignment(int n, int v, std::uint64_t seed) {
    if (v < 2 || v > n) {
        throw std::invalid_argument("need 2 <= V <= n");
    }
    // block sizes differ by at most one; membership shuffled
    std::vector<int> folds(n);
    for (int i = 0; i < n; ++i) folds[i] = i % v;
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.uniform_int(i + 1));
        std::swap(folds[i], folds[j]);
    }
    return folds;
}

namespace {

void check_scheme_for_n(const WeightScheme& scheme, int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    switch (scheme.kind()) {
        case WeightKind::Rho:
            if (scheme.rho_q() > n) {
                throw std::invalid_argument("Rho needs q <= n");
            }
            break;
        case WeightKind::Loo:
            if (n < 2) throw std::invalid_argument("Loo needs n >= 2");
            break;
        case WeightKind::VFoldSub:
            if (static_cast<int>(scheme.fold_assignment().size()) != n) {
                throw std::invalid_argument("fold assignment size must equal n");
            }
            break;
        default:
            break;
    }
}

}  // namespace

double c_w(const WeightScheme& scheme, int n) {
    check_scheme_for_n(scheme, n);
    switch (scheme.kind()) {
        case WeightKind::Efron:
            return static_cast<double>(scheme.efron_m()) / n;
        case WeightKind::Rademacher:
            return scheme.rademacher_p() / (1.0 - scheme.rademacher_p());
        case WeightKind::Poisson:
            return scheme.poisson_mu();
        case WeightKind::Rho:
            if (scheme.rho_q() == n) {
                throw std::domain_error("C_W undefined for Rho(q = n)");
            }
            return static_cast<double>(scheme.rho_q()) / (n - scheme.rho_q());
        case WeightKind::Loo:
            return static_cast<double>(n - 1);
        case WeightKind::VFoldSub:
            return 1.0;
    }
    return 0.0;  // unreachable
}

double r1w(const WeightScheme& scheme, int n, int np_hat) {
    check_scheme_for_n(scheme, n);
    if (np_hat < 1 || np_hat > n) {
        throw std::invalid_argument("need 1 <= np_hat <= n");
    }
    const double k = np_hat;
    switch (scheme.kind()) {
        case WeightKind::Efron: {
            const int m = scheme.efron_m();
            return (static_cast<double>(n) / m) *
                   einv(EinvQuery::binomial(m, k / n)) * (1.0 - 1.0 / k);
        }
        case WeightKind::Rademacher: {
            const double p = scheme.rademacher_p();
            return einv(EinvQuery::binomial(np_hat, p)) / p - 1.0;
        }
        case WeightKind::Poisson: {
            const double mu = scheme.poisson_mu();
            return einv(EinvQuery::poisson(k * mu)) / mu * (1.0 - 1.0 / k);
        }
        case WeightKind::Rho: {
            const int q = scheme.rho_q();
            return (static_cast<double>(n) / q) *
                       einv(EinvQuery::hypergeometric(n, np_hat, q)) -
                   1.0;
        }
        case WeightKind::Loo:
            return np_hat >= 2 ? k / (n * (k - 1.0)) : 0.0;
        case WeightKind::VFoldSub:
            throw std::domain_error(
                "V-fold subsampling weights are not exchangeable; no closed form");
    }
    return 0.0;  // unreachable
}

double r2w(const WeightScheme& scheme, int n, int np_hat) {
    check_scheme_for_n(scheme, n);
    if (np_hat < 1 || np_hat > n) {
        throw std::invalid_argument("need 1 <= np_hat <= n");
    }
    const double k = np_hat;
    switch (scheme.kind()) {
        case WeightKind::Efron:
            return (static_cast<double>(n) / scheme.efron_m()) * (1.0 - 1.0 / k);
        case WeightKind::Rademacher:
            return 1.0 / scheme.rademacher_p() - 1.0;
        case WeightKind::Poisson:
            return (1.0 - 1.0 / k) / scheme.poisson_mu();
        case WeightKind::Rho:
            return static_cast<double>(n) / scheme.rho_q() - 1.0;
        case WeightKind::Loo:
            return 1.0 / (n - 1.0);
        case WeightKind::VFoldSub:
            throw std::domain_error(
                "V-fold subsampling weights are not exchangeable; no closed form");
    }
    return 0.0;  // unreachable
}

RTable::RTable(const WeightScheme& scheme, int n) : n_(n), table_(n + 1, 0.0) {
    for (int k = 1; k <= n; ++k) {
        table_[k] = r1w(scheme, n, k) + r2w(scheme, n, k);
    }
}

void sample_weights(const WeightScheme& scheme, int n, Rng& rng,
                    std::vector<double>& out) {
    check_scheme_for_n(scheme, n);
    out.assign(n, 0.0);
    switch (scheme.kind()) {
        case WeightKind::Efron: {
            // multinomial via m uniform index draws, scaled to mean one
            const int m = scheme.efron_m();
            const double unit = static_cast<double>(n) / m;
            for (int j = 0; j < m; ++j) {
                out[rng.uniform_int(n)] += unit;
            }
            break;
        }
        case WeightKind::Rademacher: {
            const double p = scheme.rademacher_p();
            const double unit = 1.0 / p;
            for (int i = 0; i < n; ++i) {
                if (rng.uniform01() < p) out[i] = unit;
            }
            break;
        }
        case WeightKind::Poisson: {
            const double mu = scheme.poisson_mu();
            for (int i = 0; i < n; ++i) {
                out[i] = rng.poisson(mu) / mu;
            }
            break;
        }
        case WeightKind::Rho:
        case WeightKind::Loo: {
            const int q =
                scheme.kind() == WeightKind::Loo ? n - 1 : scheme.rho_q();
            // uniform q-subset by partial Fisher-Yates
            static thread_local std::vector<int> idx;
            idx.resize(n);
            std::iota(idx.begin(), idx.end(), 0);
            const double unit = static_cast<double>(n) / q;
            for (int j = 0; j < q; ++j) {
                const int pick =
                    j + static_cast<int>(rng.uniform_int(n - j));
                std::swap(idx[j], idx[pick]);
                out[idx[j]] = unit;
            }
            break;
        }
        case WeightKind::VFoldSub: {
            const int v = scheme.vfold_v();
            const auto& folds = scheme.fold_assignment();
            const int held_out = static_cast<int>(rng.uniform_int(v));
            const double unit = static_cast<double>(v) / (v - 1);
            for (int i = 0; i < n; ++i) {
                if (folds[i] != held_out) out[i] = unit;
            }
            break;
        }
    }
}

std::vector<double> sample_weights(const WeightScheme& scheme, int n, Rng& rng) {
    std::vector<double> out;
    sample_weights(scheme, n, rng, out);
    return out;
}

}  // namespace respen
