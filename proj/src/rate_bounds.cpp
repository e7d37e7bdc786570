#include "hybridqos/rate_bounds.hpp"

#include <cmath>
#include <sstream>

#include "hybridqos/errors.hpp"
#include "hybridqos/numerics.hpp"

namespace hybridqos {

void PowerBudget::validate() const {
    if (!(avgPowerW > 0.0)) throw ConfigError("budget.avg_power must be > 0");
    if (!(avgToPeakRatio > 0.0 && avgToPeakRatio <= 1.0))
        throw ConfigError("budget.avg_to_peak_ratio must be in (0, 1]");
}

void FrameSpec::validate() const {
    if (!(durationS > 0.0)) throw ConfigError("frame.duration_s must be > 0");
    if (!(symbolsRf >= 1.0)) throw ConfigError("frame: T*B_r must be >= 1 symbol");
    if (!(symbolsVlc >= 1.0)) throw ConfigError("frame: T*B_v must be >= 1 symbol");
}

FrameSpec makeFrameSpec(double durationS, double rfBandwidthHz, double vlcBandwidthHz) {
    FrameSpec f{durationS, durationS * rfBandwidthHz, durationS * vlcBandwidthHz};
    f.validate();
    return f;
}

namespace {

// Average-power equation after eliminating a via the normalization
// equation, in the dimensionless variable x = b * P_peak:
//   g(x) = 2 [1 - e^{-x/2}(1 + x/2)] / (x (1 - e^{-x/2}))
// g decreases from 1 (x -> -inf) through 1/2 (x = 0) to 0 (x -> +inf).
double ratioEquation(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-2) {
        // Series around x = 0: numerator x^2/8 - x^3/24 + x^4/128 - x^5/960.
        const double num =
            x * x * (1.0 / 8.0 + x * (-1.0 / 24.0 + x * (1.0 / 128.0 - x / 960.0)));
        const double den = x * (-std::expm1(-0.5 * x));
        return 2.0 * num / den;
    }
    if (x < -500.0) {
        // exp(-x/2) dominates every term; exact to double precision.
        return 1.0 + 2.0 / x;
    }
    const double e = std::exp(-0.5 * x);
    const double num = 1.0 - e * (1.0 + 0.5 * x);
    const double den = x * (1.0 - e);
    return 2.0 * num / den;
}

} // namespace

TruncatedGaussianConstants solveAB(double pAvgW, double pPeakW) {
    if (!(pAvgW > 0.0 && pAvgW <= pPeakW))
        throw ConfigError("solveAB: requires 0 < pAvg <= pPeak");
    const double nu = pAvgW / pPeakW;

    // Bracket in x = b * P_peak, spanning both signs. The negative end is
    // limited by exp overflow in the residual evaluation.
    const double xLo = -1340.0;
    const double xHi = 1e6;
    const double gLo = ratioEquation(xLo); // ~ 1 - 2/1340
    const double gHi = ratioEquation(xHi);
    if (nu >= gLo || nu <= gHi) {
        std::ostringstream msg;
        msg << "solveAB: average-to-peak ratio " << nu
            << " outside the bracketable range (" << gHi << ", " << gLo << ")";
        throw NoBracketError(msg.str());
    }
    const double x = bisectRoot([nu](double t) { return ratioEquation(t) - nu; }, xLo,
                                xHi, 1e-12, 500);

    TruncatedGaussianConstants c;
    c.b = x / pPeakW;
    // From normalization: a = b / (1 - e^{-x/2}); expm1 keeps the ratio
    // accurate through x -> 0, where a -> 2/P_peak.
    if (x == 0.0) {
        c.a = 2.0 / pPeakW;
        c.logA = std::log(c.a);
        c.residualNormalization = 0.0;
    } else {
        const double oneMinusE = -std::expm1(-0.5 * x);
        c.a = c.b / oneMinusE;
        c.logA = std::log(std::abs(c.b)) - std::log(std::abs(oneMinusE));
        c.residualNormalization = (c.a / c.b) * (-std::expm1(-0.5 * c.b * pPeakW)) - 1.0;
    }
    c.residualAvgPower = ratioEquation(x) - nu;
    return c;
}

double rfLogSnrFactor(const TruncatedGaussianConstants& c, double pAvgRW,
                      double sigmaR2W) {
    return std::log(2.0) - c.logA - std::log(sigmaR2W) + 0.5 * c.b * pAvgRW - 1.0;
}

double rfRateFromLogFactor(double h2, double logSnrFactor, double symbolsRf) {
    if (h2 <= 0.0) return 0.0;
    const double t = logSnrFactor + std::log(h2);
    return symbolsRf * log1pExp(t) / std::log(2.0);
}

double rfRate(double h2, const TruncatedGaussianConstants& c, const FrameSpec& frame,
              double pAvgRW, double sigmaR2W) {
    if (h2 < 0.0) throw ConfigError("rfRate: negative fading power");
    return rfRateFromLogFactor(h2, rfLogSnrFactor(c, pAvgRW, sigmaR2W), frame.symbolsRf);
}

double solveMuStar(double nu) {
    if (!(nu > 0.0)) throw ConfigError("solveMuStar: ratio must be > 0");
    if (nu >= 0.5)
        throw OutOfRegimeError("solveMuStar: ratio >= 1/2, use the high-ratio rate");
    // RHS 1/mu - 1/expm1(mu) decreases from 1/2 (mu -> 0) to 0 (mu -> inf).
    auto rhs = [](double mu) {
        return 1.0 / mu - (mu > 700.0 ? 0.0 : 1.0 / std::expm1(mu));
    };
    const double lo = 1e-9;
    double hi = std::max(700.0, 4.0 / nu);
    if (rhs(lo) <= nu) return lo; // nu within 1e-10 of 1/2; residual still tiny
    return bisectRoot([&](double mu) { return rhs(mu) - nu; }, lo, hi, 1e-14, 500);
}

VlcRateConstants vlcRate(double opticalGain, double responsivityAPerW, double sigmaV2A2,
                         const FrameSpec& frame, double pAvgVW, double pPeakVW) {
    if (opticalGain < 0.0) throw ConfigError("vlcRate: negative optical gain");
    if (!(pAvgVW >= 0.0 && pPeakVW > 0.0 && pAvgVW <= pPeakVW))
        throw ConfigError("vlcRate: requires 0 <= pAvgV <= pPeakV");
    VlcRateConstants out;
    const double nu = pAvgVW / pPeakVW;
    double inputFactor; // multiplies P_peak^2 Omega^2 g^2 / (2 pi sigma^2)
    if (nu < 0.5) {
        out.regime = VlcRateConstants::Regime::LowRatio;
        out.muStar = solveMuStar(nu);
        const double mu = out.muStar;
        out.residualMu = (1.0 / mu - 1.0 / std::expm1(mu)) - nu;
        const double shaping = -std::expm1(-mu) / mu; // (1 - e^-mu)/mu
        inputFactor = std::exp(2.0 * nu * mu - 1.0) * shaping * shaping;
    } else {
        out.regime = VlcRateConstants::Regime::HighRatio;
        out.muStar = std::numeric_limits<double>::quiet_NaN();
        inputFactor = std::exp(-1.0);
    }
    const double og = responsivityAPerW * opticalGain;
    const double snr = pPeakVW * pPeakVW * og * og / (2.0 * kPi * sigmaV2A2) * inputFactor;
    out.vBitsPerFrame = 0.5 * frame.symbolsVlc * std::log2(1.0 + snr);
    return out;
}

} // namespace hybridqos
