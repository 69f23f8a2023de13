#ifndef RESPEN_WEIGHTS_HPP
#define RESPEN_WEIGHTS_HPP

#include <memory>
#include <string>
#include <vector>

#include "respen/rng.hpp"

namespace respen {

enum class WeightKind { Efron, Rademacher, Poisson, Rho, Loo, VFoldSub };

// Exchangeable resampling weight law (plus the non-exchangeable V-fold
// subsampling scheme, which is sampled but has no closed-form constants).
class WeightScheme {
public:
    static WeightScheme efron(int m);
    static WeightScheme rademacher(double p);
    static WeightScheme poisson(double mu);
    static WeightScheme rho(int q);
    static WeightScheme loo();
    // fold_assignment[i] in {0..V-1}; see make_fold_assignment.
    static WeightScheme vfold_sub(int v, std::vector<int> fold_assignment);

    WeightKind kind() const { return kind_; }
    int efron_m() const { return m_; }
    double rademacher_p() const { return p_; }
    double poisson_mu() const { return mu_; }
    int rho_q() const { return q_; }
    int vfold_v() const { return v_; }
    const std::vector<int>& fold_assignment() const { return *folds_; }

    bool exchangeable() const { return kind_ != WeightKind::VFoldSub; }
    std::string name() const;

private:
    WeightScheme() = default;

    WeightKind kind_ = WeightKind::Loo;
    int m_ = 0;
    double p_ = 0;
    double mu_ = 0;
    int q_ = 0;
    int v_ = 0;
    std::shared_ptr<const std::vector<int>> folds_;
};

// Seeded partition of {0..n-1} into V blocks of near-equal size.
std::vector<int> make_fold_assignment(int n, int v, std::uint64_t seed);

// Normalization constant C_W for sample size n.
double c_w(const WeightScheme& scheme, int n);

// Per-cell resampling moments for a cell holding np_hat of the n points.
// Throw for VFoldSub (non-exchangeable, no closed form here).
double r1w(const WeightScheme& scheme, int n, int np_hat);
double r2w(const WeightScheme& scheme, int n, int np_hat);

// R1 + R2 for every possible cell count, computed once; the closed-form
// penalty over a model collection is then O(cells) per model.
class RTable {
public:
    RTable(const WeightScheme& scheme, int n);

    int n() const { return n_; }
    double r_sum(int np_hat) const { return table_[np_hat]; }

private:
    int n_;
    std::vector<double> table_;
};

// One weight vector W with E[W_i] = 1, law given by the scheme.
std::vector<double> sample_weights(const WeightScheme& scheme, int n, Rng& rng);
void sample_weights(const WeightScheme& scheme, int n, Rng& rng,
                    std::vector<double>& out);

}  // namespace respen

#endif  // RESPEN_WEIGHTS_HPP
