#ifndef RESPEN_QUADRATURE_HPP
#define RESPEN_QUADRATURE_HPP

#include <functional>
#include <span>

namespace respen {

// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to the given
// absolute tolerance. Interior points listed in `splits` are treated as
// mandatory subdivision points, so integrands with known jumps are handled
// by integrating smooth pieces only.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, std::span<const double> splits = {});

}  // namespace respen

#endif  // RESPEN_QUADRATURE_HPP
