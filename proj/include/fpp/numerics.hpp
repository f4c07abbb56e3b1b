#pragma once

#include <cstdint>
#include <functional>

namespace fpp {

// Adaptive Simpson quadrature on [a,b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

// Sum_{j>=k} j^(-tau) for tau > 1, k >= 1. Exact partial summation up to a
// small pivot, Euler-Maclaurin beyond it; relative error ~1e-14.
double zeta_tail(double tau, std::int64_t k);

// Kahan-compensated accumulator for long sums.
struct KahanSum {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace fpp
