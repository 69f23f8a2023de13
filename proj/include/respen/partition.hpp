#ifndef RESPEN_PARTITION_HPP
#define RESPEN_PARTITION_HPP

#include <string>
#include <vector>

namespace respen {

// Ordered breakpoints 0 = b_0 < b_1 < ... < b_D = 1 defining histogram cells
// [b_{k-1}, b_k); the last cell is closed so x = 1 belongs to it.
class Partition {
public:
    explicit Partition(std::vector<double> breakpoints);

    // D equal-width cells.
    static Partition regular(int cells);
    // d1 equal-width cells on [0, 1/2), d2 on [1/2, 1].
    static Partition two_block(int d1, int d2);

    int cells() const { return static_cast<int>(bp_.size()) - 1; }
    double width(int k) const { return bp_[k + 1] - bp_[k]; }
    double lower(int k) const { return bp_[k]; }
    double upper(int k) const { return bp_[k + 1]; }
    const std::vector<double>& breakpoints() const { return bp_; }

    // Cell index of x in [0, 1].
    int locate(double x) const;

    bool operator==(const Partition& other) const { return bp_ == other.bp_; }

private:
    enum class Shape { General, Regular, TwoBlock };

    Partition(std::vector<double> breakpoints, Shape shape, int d1, int d2);

    std::vector<double> bp_;
    Shape shape_ = Shape::General;
    int d1_ = 0;  // TwoBlock cell counts
    int d2_ = 0;
};

}  // namespace respen

#endif  // RESPEN_PARTITION_HPP
