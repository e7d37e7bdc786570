#include "hybridqos/numerics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hybridqos/errors.hpp"

namespace hybridqos {

double logSumExp(std::span<const double> terms) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double t : terms) mx = std::max(mx, t);
    if (std::isinf(mx) && mx < 0) return mx;
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - mx);
    return mx + std::log(acc);
}

double bisectRoot(const std::function<double(double)>& f, double lo, double hi,
                  double xtol, int maxIter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw NoBracketError("bisectRoot: endpoints do not bracket a sign change");
    for (int i = 0; i < maxIter && (hi - lo) > xtol; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> goldenSectionMax(const std::function<double(double)>& f,
                                           double lo, double hi, double xtol) {
    constexpr double invPhi = 0.6180339887498948482;
    double a = lo, b = hi;
    double x1 = b - invPhi * (b - a);
    double x2 = a + invPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invPhi * (b - a);
            f1 = f(x1);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

namespace {

GaussLegendreRule computeGaussLegendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, Newton on the Legendre recurrence.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gaussLegendre(int order) {
    static std::mutex mu;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, computeGaussLegendre(order)).first;
    return it->second;
}

double besselI0Scaled(double x) {
    if (x < 0) x = -x;
    if (x < 600.0) {
        // Power series of I0; all terms positive, then scale by exp(-x).
        double term = 1.0, sum = 1.0;
        double q = 0.25 * x * x;
        for (int k = 1; k < 2000; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < sum * 1e-18) break;
        }
        return sum * std::exp(-x);
    }
    // Hankel asymptotic expansion; relative error ~1e-12 at x >= 600.
    double r = 1.0 / (8.0 * x);
    double s = 1.0 + r * (1.0 + r * (4.5 + r * 37.5));
    return s / std::sqrt(2.0 * kPi * x);
}

double regularizedGammaP(double a, double x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("regularizedGammaP: bad arguments");
    if (x == 0) return 0.0;
    if (x < a + 1.0) {
        // Series representation.
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 10000; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-17) break;
        }
        return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    // Continued fraction for Q, P = 1 - Q.
    const double fpmin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-17) break;
    }
    double q = std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    return 1.0 - q;
}

void ScaledMat2::normalize() {
    double mx = std::max(std::max(std::abs(m[0]), std::abs(m[1])),
                         std::max(std::abs(m[2]), std::abs(m[3])));
    if (mx > 0 && std::isfinite(mx)) {
        for (double& v : m) v /= mx;
        logScale += std::log(mx);
    }
}

ScaledMat2 operator*(const ScaledMat2& a, const ScaledMat2& b) {
    ScaledMat2 r;
    r.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
    r.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
    r.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
    r.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
    r.logScale = a.logScale + b.logScale;
    r.normalize();
    return r;
}

ScaledMat2 ScaledMat2::pow(long long k) const {
    ScaledMat2 result = identity();
    ScaledMat2 base = *this;
    base.normalize();
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

double logSpectralRadius(const std::vector<double>& matrix, int n, double tol,
                         int maxIter) {
    if (static_cast<int>(matrix.size()) != n * n)
        throw std::invalid_argument("logSpectralRadius: size mismatch");
    double mx = 0.0;
    for (double v : matrix) {
        if (v < 0) throw std::invalid_argument("logSpectralRadius: negative entry");
        mx = std::max(mx, v);
    }
    if (mx == 0.0) return -std::numeric_limits<double>::infinity();
    const double logM = std::log(mx);

    std::vector<double> scaled(matrix);
    for (double& v : scaled) v /= mx;

    std::vector<double> x(n, 1.0), y(n, 0.0);
    const int window = std::max(8, 2 * n + 2);
    std::vector<double> growth;
    growth.reserve(window);
    double prevEst = 0.0;
    bool havePrev = false;
    int stable = 0;
    for (int it = 0; it < maxIter; ++it) {
        double gmax = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            const double* row = scaled.data() + static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) s += row[j] * x[j];
            y[i] = s;
            gmax = std::max(gmax, s);
        }
        if (gmax <= 0.0) return -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) x[i] = y[i] / gmax;
        if (static_cast<int>(growth.size()) == window) growth.erase(growth.begin());
        growth.push_back(std::log(gmax));
        if (static_cast<int>(growth.size()) == window) {
            double est = 0.0;
            for (double g : growth) est += g;
            est /= window;
            if (havePrev && std::abs(est - prevEst) <= tol * (std::abs(est) + 1e-30)) {
                if (++stable >= 3) return logM + est;
            } else {
                stable = 0;
            }
            prevEst = est;
            havePrev = true;
        }
    }
    if (!havePrev) throw NumericalError("logSpectralRadius: no convergence estimate");
    return logM + prevEst;
}

std::vector<double> logSpacedGrid(double lo, double hi, int points) {
    if (lo <= 0 || hi <= lo || points < 2)
        throw std::invalid_argument("logSpacedGrid: bad range");
    std::vector<double> g(points);
    const double l0 = std::log(lo), l1 = std::log(hi);
    for (int i = 0; i < points; ++i)
        g[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> linSpacedGrid(double lo, double hi, int points) {
    if (hi < lo || points < 1) throw std::invalid_argument("linSpacedGrid: bad range");
    if (points == 1) return {lo};
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
    return g;
}

} // namespace hybridqos
