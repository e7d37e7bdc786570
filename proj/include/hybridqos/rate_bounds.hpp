#ifndef HYBRIDQOS_RATE_BOUNDS_HPP
#define HYBRIDQOS_RATE_BOUNDS_HPP

namespace hybridqos {

// Shared average power budget with a common average-to-peak ratio for
// both links. Peaks are fixed by the ratio; per-link averages equal the
// budget in single-link strategies and are split by gamma in Hybrid-II.
struct PowerBudget {
    double avgPowerW{1.0};
    double avgToPeakRatio{0.7}; // nu

    void validate() const;
    double peakPowerW() const { return avgPowerW / avgToPeakRatio; }
};

struct FrameSpec {
    double durationS{1e-4};
    double symbolsRf{1000.0};  // T * B_r
    double symbolsVlc{1000.0}; // T * B_v

    void validate() const;
};

FrameSpec makeFrameSpec(double durationS, double rfBandwidthHz, double vlcBandwidthHz);

// Constants of the circularly truncated Gaussian input that attains the
// radio-rate lower bound. a and b jointly solve the normalization and
// average-power equations; logA keeps the rate evaluable when a underflows
// toward the high-ratio end.
struct TruncatedGaussianConstants {
    double a{0};
    double b{0};
    double logA{0};
    double residualNormalization{0}; // normalization equation residual
    double residualAvgPower{0};      // average-power equation residual
};

// Solvable ratio range of the average-power equation in double precision.
// The equation approaches ratio 1 only as b -> -infinity.
inline constexpr double kMinSolvableRatio = 2.1e-6;
inline constexpr double kMaxSolvableRatio = 0.9985;

TruncatedGaussianConstants solveAB(double pAvgW, double pPeakW);

// Reliable per-frame radio rate in bits for a fading power realization h2.
double rfRate(double h2, const TruncatedGaussianConstants& c, const FrameSpec& frame,
              double pAvgRW, double sigmaR2W);

// log of the SNR scale factor: rate = symbolsRf * log2(1 + exp(logFactor) * h2).
double rfLogSnrFactor(const TruncatedGaussianConstants& c, double pAvgRW, double sigmaR2W);
double rfRateFromLogFactor(double h2, double logSnrFactor, double symbolsRf);

struct VlcRateConstants {
    enum class Regime { LowRatio, HighRatio };
    Regime regime{Regime::HighRatio};
    double muStar{0};       // only meaningful in the low-ratio regime
    double vBitsPerFrame{0};
    double residualMu{0};
};

// Unique solution of the exponential-input moment equation; valid for
// average-to-peak ratios strictly below 1/2.
double solveMuStar(double nu);

// Constant optical rate per frame; regime chosen by pAvgV/pPeakV against 1/2.
VlcRateConstants vlcRate(double opticalGain, double responsivityAPerW, double sigmaV2A2,
                         const FrameSpec& frame, double pAvgVW, double pPeakVW);

} // namespace hybridqos

#endif
