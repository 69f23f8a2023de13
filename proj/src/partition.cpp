#include "respen/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace respen {

namespace {

void validate_breakpoints(const std::vector<double>& bp) {
    if (bp.size() < 2) {
        throw std::invalid_argument("partition needs at least two breakpoints");
    }
    if (bp.front() != 0.0 || bp.back() != 1.0) {
        throw std::invalid_argument("partition must span [0, 1]");
    }
    for (std::size_t i = 1; i < bp.size(); ++i) {
        if (!(bp[i - 1] < bp[i])) {
            throw std::invalid_argument("breakpoints must be strictly increasing");
        }
    }
}

}  // namespace

Partition::Partition(std::vector<double> breakpoints)
    : bp_(std::move(breakpoints)) {
    validate_breakpoints(bp_);
}

Partition::Partition(std::vector<double> breakpoints, Shape shape, int d1, int d2)
    : bp_(std::move(breakpoints)), shape_(shape), d1_(d1), d2_(d2) {
    validate_breakpoints(bp_);
}

Partition Partition::regular(int cells) {
    if (cells < 1) throw std::invalid_argument("cell count must be >= 1");
    std::vector<double> bp(cells + 1);
    for (int j = 0; j <= cells; ++j) {
        bp[j] = static_cast<double>(j) / cells;
    }
    bp.front() = 0.0;
    bp.back() = 1.0;
    return Partition(std::move(bp), Shape::Regular, cells, 0);
}

Partition Partition::two_block(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("cell counts must be >= 1");
    std::vector<double> bp;
    bp.reserve(d1 + d2 + 1);
    for (int j = 0; j < d1; ++j) {
        bp.push_back(static_cast<double>(j) / (2 * d1));
    }
    for (int j = 0; j < d2; ++j) {
        bp.push_back(0.5 + static_cast<double>(j) / (2 * d2));
    }
    bp.push_back(1.0);
    return Partition(std::move(bp), Shape::TwoBlock, d1, d2);
}

int Partition::locate(double x) const {
    const int d = cells();
    int k;
    switch (shape_) {
        case Shape::Regular:
            k = static_cast<int>(x * d);
            break;
        case Shape::TwoBlock:
            if (x < 0.5) {
                k = static_cast<int>(x * (2 * d1_));
            } else {
                k = d1_ + static_cast<int>((x - 0.5) * (2 * d2_));
            }
            break;
        default:
            k = static_cast<int>(std::upper_bound(bp_.begin(), bp_.end(), x) -
                                 bp_.begin()) -
                1;
            break;
    }
    if (k < 0) k = 0;
    if (k > d - 1) k = d - 1;
    // The arithmetic guess can be off by one at cell boundaries; settle it
    // against the stored breakpoints, which are the source of truth.
    while (k < d - 1 && x >= bp_[k + 1]) ++k;
    while (k > 0 && x < bp_[k]) --k;
    return k;
}

}  // namespace respen
