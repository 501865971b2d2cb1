#include "qdeph/rootfind.hpp"
#include "qdeph/errors.hpp"

#include <cmath>

namespace qdeph::rootfind {

double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double tol_x) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa < 0.0) == (fb < 0.0))
        throw domain_error("bisect_root: no sign change in bracket");
    while (b - a > tol_x) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b)
            break; // bracket exhausted by rounding
        const double fm = f(m);
        if (fm == 0.0)
            return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol_x) {
    constexpr double invphi = 0.6180339887498949;  // 1/phi
    constexpr double invphi2 = 0.3819660112501051; // 1/phi^2
    double x1 = a + invphi2 * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol_x) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + invphi2 * (b - a);
            if (x1 >= x2)
                break;
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            if (x2 <= x1)
                break;
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace qdeph::rootfind
