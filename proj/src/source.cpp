#include "hybridqos/source.hpp"

#include <cmath>
#include <random>

#include "hybridqos/errors.hpp"
#include "hybridqos/numerics.hpp"

namespace hybridqos {

void SourceSpec::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("source.alpha must be in [0, 1]");
    if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("source.beta must be in [0, 1]");
    if (!(alpha + beta > 0.0)) throw ConfigError("source: alpha + beta must be > 0");
    if (!(lambdaBitsPerFrame >= 0.0)) throw ConfigError("source.lambda must be >= 0");
}

double lmgfArrivalAsymptotic(const SourceSpec& spec, double theta) {
    spec.validate();
    const double a = spec.alpha, b = spec.beta;
    const double u = theta * spec.lambdaBitsPerFrame;
    if (u == 0.0) return 0.0;
    // Perron root of [[(1-a)e^u, a e^u], [b, 1-b]]. Factor out e^u when it
    // is large so the quadratic stays in range.
    if (u > 1.0) {
        const double e = std::exp(-u);
        const double tr = (1.0 - a) + (1.0 - b) * e;
        const double disc = tr * tr - 4.0 * (1.0 - a - b) * e;
        return u + std::log(0.5 * (tr + std::sqrt(std::max(disc, 0.0))));
    }
    const double e = std::exp(u);
    const double tr = (1.0 - b) + (1.0 - a) * e;
    const double disc = tr * tr - 4.0 * (1.0 - a - b) * e;
    return std::log(0.5 * (tr + std::sqrt(std::max(disc, 0.0))));
}

double lmgfArrivalFinite(const SourceSpec& spec, double theta, long long t) {
    spec.validate();
    if (t < 1) throw ConfigError("lmgfArrivalFinite: t must be >= 1");
    const double a = spec.alpha, b = spec.beta;
    const double u = theta * spec.lambdaBitsPerFrame;

    // M = diag(e^u, 1) J, carried with a log scale: store e^u as
    // exp(u - shift) with the shift folded into logScale.
    ScaledMat2 m;
    const double shift = std::max(u, 0.0);
    const double eu = std::exp(u - shift);
    const double one = std::exp(-shift);
    m.m[0] = eu * (1.0 - a);
    m.m[1] = eu * a;
    m.m[2] = one * b;
    m.m[3] = one * (1.0 - b);
    m.logScale = shift;
    m.normalize();

    const ScaledMat2 p = m.pow(t - 1);
    // v (M^{t-1}) Phi [1; 1] with v the steady state.
    const double pOn = spec.pOn(), pOff = spec.pOff();
    const double r0 = pOn * p.m[0] + pOff * p.m[2];
    const double r1 = pOn * p.m[1] + pOff * p.m[3];
    const double val = r0 * eu + r1 * one;
    return (std::log(val) + p.logScale + shift) / static_cast<double>(t);
}

ArrivalTrace generateArrivals(const SourceSpec& spec, std::size_t frames,
                              std::uint64_t seed) {
    spec.validate();
    if (frames < 1) throw ConfigError("generateArrivals: frames must be >= 1");
    ArrivalTrace trace;
    trace.seed = seed;
    trace.perFrameArrivals.resize(frames);
    trace.states.resize(frames);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    bool on = unit(rng) < spec.pOn(); // initial state from the steady state
    for (std::size_t i = 0; i < frames; ++i) {
        trace.states[i] = on ? 1 : 0;
        trace.perFrameArrivals[i] = on ? spec.lambdaBitsPerFrame : 0.0;
        const double r = unit(rng);
        on = on ? (r >= spec.alpha) : (r < spec.beta);
    }
    return trace;
}

} // namespace hybridqos
