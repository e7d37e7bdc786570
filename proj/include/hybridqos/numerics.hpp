#ifndef HYBRIDQOS_NUMERICS_HPP
#define HYBRIDQOS_NUMERICS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace hybridqos {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kBoltzmann = 1.380649e-23; // J/K

inline double degToRad(double deg) { return deg * kPi / 180.0; }

// log(1 + e^t) without overflow for large |t|.
inline double log1pExp(double t) {
    if (t > 36.0) return t + std::exp(-t);
    if (t < -36.0) return std::exp(t);
    return std::log1p(std::exp(t));
}

double logSumExp(std::span<const double> terms);
inline double logSumExp2(double a, double b) {
    if (a < b) std::swap(a, b);
    if (std::isinf(a) && a < 0) return a;
    return a + log1pExp(b - a);
}

// Bracketed bisection for a continuous f with f(lo), f(hi) of opposite sign.
// Iterates until the interval width drops below xtol (absolute).
double bisectRoot(const std::function<double(double)>& f, double lo, double hi,
                  double xtol, int maxIter = 400);

// Golden-section maximization of a unimodal f on [lo, hi] to xtol in x.
std::pair<double, double> goldenSectionMax(const std::function<double(double)>& f,
                                           double lo, double hi, double xtol);

// Gauss-Legendre nodes/weights on [-1, 1]. Cached per order; thread-safe.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreRule& gaussLegendre(int order);

// Exponentially scaled modified Bessel function I0(x) * exp(-x), x >= 0.
double besselI0Scaled(double x);

// Regularized lower incomplete gamma P(a, x).
double regularizedGammaP(double a, double x);

// 2x2 matrix with a tracked log-scale so that repeated products of
// exponentially large entries stay representable.
struct ScaledMat2 {
    double m[4]{0, 0, 0, 0}; // row-major
    double logScale{0};

    static ScaledMat2 identity() {
        ScaledMat2 r;
        r.m[0] = r.m[3] = 1.0;
        return r;
    }
    void normalize();
    friend ScaledMat2 operator*(const ScaledMat2& a, const ScaledMat2& b);
    // Raise to an integer power >= 0 by repeated squaring.
    ScaledMat2 pow(long long k) const;
};

// log of the spectral radius of a dense nonnegative square matrix.
// Power iteration with growth averaged over a trailing window, so periodic
// chains (pure cycles) converge as well. tol is relative on the eigenvalue.
double logSpectralRadius(const std::vector<double>& matrix, int n,
                         double tol = 1e-12, int maxIter = 200000);

// Geometric grid helper.
std::vector<double> logSpacedGrid(double lo, double hi, int points);
std::vector<double> linSpacedGrid(double lo, double hi, int points);

} // namespace hybridqos

#endif
