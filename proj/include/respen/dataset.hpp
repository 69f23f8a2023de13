#ifndef RESPEN_DATASET_HPP
#define RESPEN_DATASET_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace respen {

// Sample (x_i, y_i), i = 1..n, with x_i in [0, 1].
struct Dataset {
    std::vector<double> x;
    std::vector<double> y;

    int n() const { return static_cast<int>(x.size()); }
};

// Throws std::invalid_argument if sizes mismatch, n = 0, or some x_i is
// outside [0, 1] (NaN included).
void validate_dataset(const Dataset& dataset);

// Two-column CSV "x,y" with a header row; doubles are written with
// shortest round-trip formatting.
Dataset read_dataset_csv(const std::string& path);
void write_dataset_csv(const std::string& path, const Dataset& dataset);

}  // namespace respen

#endif  // RESPEN_DATASET_HPP
