#ifndef RESPEN_SIMBENCH_HPP
#define RESPEN_SIMBENCH_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "respen/selection.hpp"
#include "respen/truth.hpp"

namespace respen {

// One selection procedure to benchmark, parsed from tokens like
// "penrad+", "mallows", "vfcv5", "loocv", "vfpen2", "eideal", "oracle".
struct Procedure {
    enum class Kind { Penalized, VFoldCV, Oracle };

    std::string token;
    Kind kind = Kind::Penalized;
    PenaltySpec spec;    // Penalized
    int vfcv_folds = 0;  // VFoldCV

    // Resampling-scheme parameters that depend on n (Efron(n), Rho(n/2))
    // are resolved when the sample size is known.
    static Procedure parse(const std::string& token, int n);
};

struct CollectionRule {
    // s1: regular with 1..floor(n/ln n) cells
    // s2: constant + two-block pairs up to floor(n/(2 ln n))
    // hsd1: dyadic regular, 2^k cells, 0 <= k <= log2(n)-1
    // hsd2: constant + dyadic two-block pairs, 0 <= k <= log2(n)-2
    // regular: regular with 1..max_dim cells
    std::string kind = "s1";
    int max_dim = 0;  // "regular" only
};

ModelCollection model_collection(const std::string& name, int n);
ModelCollection make_collection(const CollectionRule& rule, int n);

struct ExperimentConfig {
    std::string name = "custom";
    int n = 200;
    TruthSpec truth;
    CollectionRule collection;
    std::vector<std::string> procedures;
    int replications = 1000;
    std::uint64_t base_seed = 1;
    bool paired = true;    // same datasets for every procedure
    int threads = 1;
    bool keep_samples = false;  // retain per-replication losses
};

// Presets pinning (n, truth, collection) for the four named experiments.
ExperimentConfig experiment_preset(const std::string& name);

// X_i iid uniform on [0,1], Y_i = s(X_i) + sigma(X_i) * eps_i with standard
// normal eps, all driven by the given substream seed.
Dataset gen_dataset(const RegressionTruth& truth, int n, std::uint64_t seed);
Dataset gen_dataset(const ExperimentConfig& config, int replication);

struct OracleLosses {
    std::vector<double> loss;  // +infinity where some cell is empty
    int oracle_index = -1;
    double oracle_loss = 0;
};

OracleLosses oracle_losses(const RegressionTruth& truth,
                           const ModelCollection& collection,
                           const Dataset& dataset);

// bias + estimation split of the excess loss of a fitted model.
struct LossDecomposition {
    double bias = 0;  // ell(s, s_m)
    double p1 = 0;    // sum p_cell (beta - beta_hat)^2
    double p2 = 0;    // sum p_hat_cell (beta - beta_hat)^2
};

LossDecomposition loss_decomposition(const TruthCellMoments& moments,
                                     const CellStats& stats);

struct ProcedureResult {
    std::string procedure;
    double c_or = 0;
    double c_or_se = 0;       // delta-method SE for the ratio of means
    double c_path_or = 0;
    double c_path_or_se = 0;  // plain SE of the per-replication ratios
    double mean_dim = 0;
    int n_dropped = 0;
};

struct BenchmarkResult {
    std::vector<ProcedureResult> rows;
    int replications = 0;
    int dropped = 0;
    // filled when config.keep_samples: [procedure][replication]
    std::vector<std::vector<double>> loss_samples;
    std::vector<std::vector<double>> oracle_samples;
    std::vector<char> dropped_mask;
};

// Runs the replication loop: per replication, generate data, remove models
// with any cell under three points, run every procedure on the same
// admissible set, and compare each selected loss against the oracle.
// Deterministic in (config, base_seed) regardless of thread count.
BenchmarkResult run_benchmark(const ExperimentConfig& config);

// CSV: procedure,c_or,c_or_se,c_path_or,c_path_or_se,mean_dim,n_dropped
void write_benchmark_csv(std::ostream& out, const BenchmarkResult& result);

// Numerically stable sum (pairwise), used by all aggregations.
double pairwise_sum(std::span<const double> values);

}  // namespace respen

#endif  // RESPEN_SIMBENCH_HPP
