#include "fpp/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace fpp {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa,
                double b, double fb, double m, double fm, double whole,
                double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double zeta_tail(double tau, std::int64_t k) {
    if (tau <= 1.0) throw std::invalid_argument("zeta_tail: need tau > 1");
    if (k < 1) throw std::invalid_argument("zeta_tail: need k >= 1");
    const std::int64_t pivot = k < 64 ? 64 : k;
    KahanSum head;
    for (std::int64_t j = k; j < pivot; ++j)
        head.add(std::pow(static_cast<double>(j), -tau));
    // Euler-Maclaurin from the pivot (B2=1/6, B4=-1/30, B6=1/42):
    // sum_{j>=p} j^-t = p^(1-t)/(t-1) + p^-t/2 + t p^-(t+1)/12
    //                   - t(t+1)(t+2) p^-(t+3)/720
    //                   + t(t+1)(t+2)(t+3)(t+4) p^-(t+5)/30240
    const double p = static_cast<double>(pivot);
    const double pt = std::pow(p, -tau);
    double tail = std::pow(p, 1.0 - tau) / (tau - 1.0) + 0.5 * pt;
    tail += tau * pt / (12.0 * p);
    tail -= tau * (tau + 1.0) * (tau + 2.0) * pt / (720.0 * p * p * p);
    tail += tau * (tau + 1.0) * (tau + 2.0) * (tau + 3.0) * (tau + 4.0) * pt /
            (30240.0 * p * p * p * p * p);
    return head.value() + tail;
}

}  // namespace fpp
