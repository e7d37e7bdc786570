#ifndef HYBRIDQOS_ERRORS_HPP
#define HYBRIDQOS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hybridqos {

// Scenario / input validation failure. The message names the offending key.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Root bracket for the truncated-Gaussian constants could not be established
// (degenerate power configuration, e.g. average-to-peak ratio at or beyond
// the representable solution range).
class NoBracketError : public std::runtime_error {
public:
    explicit NoBracketError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation called outside its validity regime (e.g. the low-ratio VLC
// constant requested for an average-to-peak ratio >= 1/2).
class OutOfRegimeError : public std::runtime_error {
public:
    explicit OutOfRegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Service process too weak to sustain any positive arrival rate at the
// requested QoS exponent.
class UnstableError : public std::runtime_error {
public:
    explicit UnstableError(const std::string& msg) : std::runtime_error(msg) {}
};

class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& msg) : std::runtime_error(msg) {}
};

// No admissible free parameter at a given candidate (skipped in outer search).
class EmptyDomainError : public std::runtime_error {
public:
    explicit EmptyDomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Every candidate service rate in a bound search was infeasible.
class AllInfeasibleError : public std::runtime_error {
public:
    explicit AllInfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Too few tail exceedances to fit a decay rate.
class InsufficientTailError : public std::runtime_error {
public:
    explicit InsufficientTailError(const std::string& msg) : std::runtime_error(msg) {}
};

// Arrivals exceed handover-penalized capacity; no positive QoS exponent.
class NoPositiveRootError : public std::runtime_error {
public:
    explicit NoPositiveRootError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency check failed (identity residual beyond tolerance).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hybridqos

#endif
