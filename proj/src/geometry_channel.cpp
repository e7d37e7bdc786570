#include "hybridqos/geometry_channel.hpp"

#include <algorithm>
#include <cmath>

#include "hybridqos/errors.hpp"
#include "hybridqos/numerics.hpp"

namespace hybridqos {

void VlcChannelSpec::validate() const {
    if (!(halfIntensityAngleDeg > 0.0 && halfIntensityAngleDeg < 90.0))
        throw ConfigError("vlc.half_intensity_angle_deg must be in (0, 90)");
    if (!(fieldOfViewDeg > 0.0 && fieldOfViewDeg <= 90.0))
        throw ConfigError("vlc.field_of_view_deg must be in (0, 90]");
    if (!(pdAreaM2 > 0.0)) throw ConfigError("vlc.pd_area_m2 must be > 0");
    if (!(concentratorGain > 0.0)) throw ConfigError("vlc.concentrator_gain must be > 0");
    if (!(bandwidthHz > 0.0)) throw ConfigError("vlc.bandwidth_hz must be > 0");
    if (!(responsivityAPerW > 0.0)) throw ConfigError("vlc.responsivity_a_per_w must be > 0");
    if (!(noisePsdA2PerHz > 0.0)) throw ConfigError("vlc.noise_psd_a2_per_hz must be > 0");
    if (!(verticalDistanceM > 0.0)) throw ConfigError("vlc.vertical_distance_m must be > 0");
    if (!(lambertianIndex() > 0.0))
        throw ConfigError("vlc.half_intensity_angle_deg yields nonpositive Lambertian index");
}

double VlcChannelSpec::lambertianIndex() const {
    return -1.0 / std::log2(std::cos(degToRad(halfIntensityAngleDeg)));
}

double VlcChannelSpec::linkDistanceM() const { return distance(txPositionM, rxPositionM); }

double VlcChannelSpec::incidenceAngleDeg() const {
    const double d1 = linkDistanceM();
    if (d1 <= 0.0) throw ConfigError("vlc geometry: coincident transmitter and receiver");
    double c = verticalDistanceM / d1;
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c) * 180.0 / kPi;
}

void RfChannelSpec::validate() const {
    if (!(bandwidthHz > 0.0)) throw ConfigError("rf.bandwidth_hz must be > 0");
    if (!(pathLossExponent > 0.0)) throw ConfigError("rf.path_loss_exponent must be > 0");
    if (!(shadowingStdDevDb >= 0.0)) throw ConfigError("rf.shadowing_std_db must be >= 0");
    if (!(referenceDistanceM > 0.0)) throw ConfigError("rf.reference_distance_m must be > 0");
    if (!(ambientTempK > 0.0)) throw ConfigError("rf.ambient_temp_k must be > 0");
    if (!(distanceM >= referenceDistanceM))
        throw ConfigError("rf.distance_m must be >= rf.reference_distance_m");
}

double RfChannelSpec::ricianKLinear() const { return std::pow(10.0, ricianFactorDb / 10.0); }

double vlcGain(const VlcChannelSpec& spec) {
    const double d1 = spec.linkDistanceM();
    if (d1 <= 0.0) throw ConfigError("vlcGain: link distance is zero");
    const double psi = spec.incidenceAngleDeg();
    if (psi > spec.fieldOfViewDeg) return 0.0; // rect(psi/psi_C) = 0
    const double s = spec.lambertianIndex();
    const double dv = spec.verticalDistanceM;
    return (s + 1.0) * spec.pdAreaM2 * spec.concentratorGain *
           std::pow(dv, s + 1.0) / (2.0 * kPi * std::pow(d1, s + 3.0));
}

double rfPathLoss(const RfChannelSpec& spec) {
    const double ratio = spec.distanceM / spec.referenceDistanceM;
    const double logTerm = spec.dbConvention == DbConvention::AsPrinted
                               ? std::log(ratio)
                               : std::log10(ratio);
    double shadow = 0.0;
    if (spec.shadowingMode == ShadowingMode::DrawnOnce) {
        std::mt19937_64 rng(spec.shadowingSeed);
        std::normal_distribution<double> gauss(0.0, spec.shadowingStdDevDb);
        shadow = gauss(rng);
    }
    return spec.referenceLossDb + 10.0 * spec.pathLossExponent * logTerm + shadow;
}

double pathLossToLinear(double lossDb, DbConvention convention) {
    return convention == DbConvention::AsPrinted ? std::exp(-lossDb / 10.0)
                                                 : std::pow(10.0, -lossDb / 10.0);
}

NoisePowers noisePowers(const RfChannelSpec& rf, const VlcChannelSpec& vlc) {
    rf.validate();
    vlc.validate();
    return {kBoltzmann * rf.ambientTempK * rf.bandwidthHz,
            vlc.noisePsdA2PerHz * vlc.bandwidthHz};
}

FadingDistribution::FadingDistribution(double meanPower, double kLinear)
    : gbar_(meanPower), k_(kLinear), deterministic_(kLinear >= kDeterministicThreshold) {
    if (!(meanPower > 0.0)) throw ConfigError("fading mean power must be > 0");
    if (!(kLinear >= 0.0)) throw ConfigError("Rician K must be >= 0");
}

double FadingDistribution::pdf(double z) const {
    if (deterministic_) return 0.0; // point mass; density undefined
    if (z < 0.0) return 0.0;
    const double y = (k_ + 1.0) * z / gbar_;
    const double s = 2.0 * std::sqrt(k_ * y);
    const double d = std::sqrt(y) - std::sqrt(k_);
    return (k_ + 1.0) / gbar_ * std::exp(-d * d) * besselI0Scaled(s);
}

double FadingDistribution::cdf(double z) const {
    if (z <= 0.0) return 0.0;
    if (deterministic_) return z >= gbar_ ? 1.0 : 0.0;
    const double y = (k_ + 1.0) * z / gbar_;
    if (k_ == 0.0) return -std::expm1(-y);
    // Poisson(K)-weighted Erlang mixture, summed outward from the mode.
    const long long jc = static_cast<long long>(k_);
    const double halfWidth = 10.0 * std::sqrt(k_ + 1.0) + 40.0;
    const long long jLo = std::max<long long>(0, jc - static_cast<long long>(halfWidth));
    const long long jHi = jc + static_cast<long long>(halfWidth) + 1;
    double acc = 0.0;
    for (long long j = jLo; j <= jHi; ++j) {
        const double logPois = -k_ + j * std::log(k_) - std::lgamma(j + 1.0);
        if (logPois < -45.0 && j > jc) break;
        if (logPois < -45.0) continue;
        acc += std::exp(logPois) * regularizedGammaP(static_cast<double>(j + 1), y);
    }
    return std::min(acc, 1.0);
}

double FadingDistribution::upperQuantile(double tailProb) const {
    if (deterministic_) return gbar_;
    if (!(tailProb > 0.0 && tailProb < 1.0))
        throw ConfigError("upperQuantile: tail probability must be in (0,1)");
    // Bracket: tail of the noncentral chi-square decays at least like
    // exp(-(sqrt(y)-sqrt(K))^2) beyond the mode.
    double hi = gbar_ * (1.0 + (std::sqrt(k_) + std::sqrt(-std::log(tailProb)) + 4.0) *
                                   (std::sqrt(k_) + std::sqrt(-std::log(tailProb)) + 4.0) /
                                   (k_ + 1.0));
    while (1.0 - cdf(hi) > tailProb) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-12 * (1.0 + hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (1.0 - cdf(mid) > tailProb)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

FadingSampler::FadingSampler(double mean, double variance, std::uint64_t seed)
    : mean_(mean), variance_(variance), seed_(seed), rng_(seed), gauss_(0.0, 1.0) {
    if (!(variance >= 0.0)) throw ConfigError("fading variance must be >= 0");
}

FadingSampler FadingSampler::fromSpec(const RfChannelSpec& spec, std::uint64_t seed) {
    spec.validate();
    const double lin = pathLossToLinear(rfPathLoss(spec), spec.dbConvention);
    const double k = spec.ricianKLinear();
    return FadingSampler(std::sqrt(lin * k / (k + 1.0)), lin / (k + 1.0), seed);
}

double FadingSampler::sample() {
    const double s = std::sqrt(variance_ / 2.0);
    const double re = mean_ + s * gauss_(rng_);
    const double im = s * gauss_(rng_);
    return re * re + im * im;
}

std::vector<double> sampleFadingPower(FadingSampler& sampler, std::size_t count) {
    if (count < 1) throw ConfigError("sampleFadingPower: count must be >= 1");
    std::vector<double> out(count);
    for (auto& v : out) v = sampler.sample();
    return out;
}

FadingDistribution fadingDistributionFromSpec(const RfChannelSpec& spec) {
    spec.validate();
    const double lin = pathLossToLinear(rfPathLoss(spec), spec.dbConvention);
    return FadingDistribution(lin, spec.ricianKLinear());
}

} // namespace hybridqos
