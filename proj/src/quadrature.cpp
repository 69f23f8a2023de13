#include "respen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace respen {

namespace {

// 15-point Kronrod nodes on [-1, 1] and weights, with the embedded 7-point
// Gauss weights on the odd-indexed nodes.
constexpr double kKronrodNodes[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kKronrodWeights[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kGaussWeights[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct GkResult {
    double value;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(mid + half * kKronrodNodes[i]);
        kronrod += kKronrodWeights[i] * v;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * v;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

double integrate_smooth(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int depth) {
    const GkResult r = gk15(f, a, b);
    if (r.error <= abs_tol || depth >= 48 || b - a < 1e-14) {
        return r.value;
    }
    const double mid = 0.5 * (a + b);
    return integrate_smooth(f, a, mid, abs_tol / 2, depth + 1) +
           integrate_smooth(f, mid, b, abs_tol / 2, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, std::span<const double> splits) {
    if (!(a < b)) return 0.0;
    std::vector<double> pts;
    pts.push_back(a);
    for (double s : splits) {
        if (s > a && s < b) pts.push_back(s);
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double share =
            abs_tol * std::max((pts[i + 1] - pts[i]) / (b - a), 1e-3);
        total += integrate_smooth(f, pts[i], pts[i + 1], share, 0);
    }
    return total;
}

}  // namespace respen
