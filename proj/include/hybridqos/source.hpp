#ifndef HYBRIDQOS_SOURCE_HPP
#define HYBRIDQOS_SOURCE_HPP

#include <cstdint>
#include <vector>

namespace hybridqos {

// Two-state ON-OFF Markov arrival process: lambda bits per frame in ON,
// zero in OFF. alpha = Pr{ON -> OFF}, beta = Pr{OFF -> ON}.
struct SourceSpec {
    double alpha{0.3};
    double beta{0.7};
    double lambdaBitsPerFrame{1000.0};

    void validate() const;
    double pOn() const { return beta / (alpha + beta); }
    double pOff() const { return alpha / (alpha + beta); }
    double meanRate() const { return pOn() * lambdaBitsPerFrame; }
};

// Asymptotic log-MGF of cumulative arrivals: log of the Perron root of
// diag(e^{theta lambda}, 1) J. Safe for theta*lambda far beyond the double
// exponent range.
double lmgfArrivalAsymptotic(const SourceSpec& spec, double theta);

// Finite-horizon log-MGF over t frames with the steady state as the
// initial distribution; matrix powers by scaled repeated squaring.
double lmgfArrivalFinite(const SourceSpec& spec, double theta, long long t);

struct ArrivalTrace {
    std::vector<double> perFrameArrivals;
    std::vector<std::uint8_t> states; // 1 = ON
    std::uint64_t seed{0};
};

ArrivalTrace generateArrivals(const SourceSpec& spec, std::size_t frames,
                              std::uint64_t seed);

} // namespace hybridqos

#endif
