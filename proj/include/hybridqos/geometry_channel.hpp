#ifndef HYBRIDQOS_GEOMETRY_CHANNEL_HPP
#define HYBRIDQOS_GEOMETRY_CHANNEL_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace hybridqos {

struct Vec3 {
    double x{0}, y{0}, z{0};
};

inline double distance(const Vec3& a, const Vec3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// The path-loss text prints a natural log on a dB quantity and folds
// exp(-L/10) into the fading moments. AsPrinted follows that literally;
// Base10 uses log10 and 10^(-L/10) instead.
enum class DbConvention { AsPrinted, Base10 };

enum class ShadowingMode { FixedZero, DrawnOnce };

// LED/photo-diode geometry and front-end parameters of the optical link.
// Transmitter plane normal points down, receiver normal up, planes parallel.
struct VlcChannelSpec {
    double halfIntensityAngleDeg{60.0}; // phi_1/2
    double fieldOfViewDeg{90.0};        // psi_C
    double pdAreaM2{1e-4};
    double concentratorGain{1.0};
    double bandwidthHz{10e6};
    double responsivityAPerW{0.53};
    double noisePsdA2PerHz{1e-21};
    Vec3 txPositionM{0.0, 0.0, 0.0};
    Vec3 rxPositionM{1.6583123951777, 0.0, -2.5};
    double verticalDistanceM{2.5};

    void validate() const; // throws ConfigError on violated invariants
    double lambertianIndex() const; // s = -1 / log2(cos phi_1/2)
    double linkDistanceM() const;   // d_1
    double incidenceAngleDeg() const;
};

// Large-scale and fading parameters of the radio link.
struct RfChannelSpec {
    double bandwidthHz{10e6};
    double ricianFactorDb{10.0};
    double pathLossExponent{1.8}; // the path-loss model exponent
    double shadowingStdDevDb{3.6};
    double referenceLossDb{40.0};
    double referenceDistanceM{1.0};
    double ambientTempK{280.0};
    double distanceM{15.0};
    ShadowingMode shadowingMode{ShadowingMode::FixedZero};
    std::uint64_t shadowingSeed{0};
    DbConvention dbConvention{DbConvention::AsPrinted};

    void validate() const;
    double ricianKLinear() const;
};

// Deterministic line-of-sight optical gain. Zero outside the field of view.
double vlcGain(const VlcChannelSpec& spec);

// Large-scale path loss in dB, shadowing realization per spec.shadowingMode.
double rfPathLoss(const RfChannelSpec& spec);

// dB -> linear power scale under the selected convention.
double pathLossToLinear(double lossDb, DbConvention convention);

struct NoisePowers {
    double sigmaR2W{0};  // thermal noise power at the RF front-end
    double sigmaV2A2{0}; // shot/thermal noise variance at the photo-diode
};
NoisePowers noisePowers(const RfChannelSpec& rf, const VlcChannelSpec& vlc);

// Rician fading power distribution: |h|^2 where h is circularly symmetric
// complex Gaussian with real mean mu = sqrt(gbar K/(K+1)) and variance
// sigma_h^2 = gbar/(K+1). |h|^2 is a scaled noncentral chi-square (2 dof).
// Above a K threshold the line of sight dominates and the distribution is
// treated as a point mass at gbar.
class FadingDistribution {
public:
    FadingDistribution(double meanPower, double kLinear);

    double meanPower() const { return gbar_; }
    double kLinear() const { return k_; }
    bool deterministic() const { return deterministic_; }

    double pdf(double z) const;
    double cdf(double z) const;
    // Smallest z with 1 - cdf(z) <= tailProb.
    double upperQuantile(double tailProb) const;

    static constexpr double kDeterministicThreshold = 1e6;

private:
    double gbar_;
    double k_;
    bool deterministic_;
};

// Streaming sampler for |h|^2; value-owned and cloneable, one per thread.
class FadingSampler {
public:
    FadingSampler(double mean, double variance, std::uint64_t seed);
    static FadingSampler fromSpec(const RfChannelSpec& spec, std::uint64_t seed);

    double sample();
    double meanComponent() const { return mean_; }
    double variance() const { return variance_; }
    std::uint64_t seed() const { return seed_; }

private:
    double mean_;     // mu (real part of the complex mean)
    double variance_; // sigma_h^2 (total complex variance)
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> gauss_;
};

std::vector<double> sampleFadingPower(FadingSampler& sampler, std::size_t count);

// Distribution parameterized from the channel spec (shadowing folded into
// the mean power via the configured dB convention).
FadingDistribution fadingDistributionFromSpec(const RfChannelSpec& spec);

} // namespace hybridqos

#endif
