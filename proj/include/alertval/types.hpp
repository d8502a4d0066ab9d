#pragma once

#include <cstdint>
#include <string>

namespace alertval {

using NodeId = std::uint32_t;
using Tick = std::uint64_t;

enum class TrustState : std::uint8_t { Trustworthy, Uncertain, Untrustworthy };

enum class Mode : std::uint8_t { Aggressive, Defensive };

enum class ReliabilityPolicy : std::uint8_t { Low, Medium, High, IntrusionAware };

inline const char* to_string(TrustState s) {
    switch (s) {
        case TrustState::Trustworthy: return "trustworthy";
        case TrustState::Uncertain: return "uncertain";
        case TrustState::Untrustworthy: return "untrustworthy";
    }
    return "?";
}

inline const char* to_string(Mode m) {
    return m == Mode::Aggressive ? "aggressive" : "defensive";
}

inline const char* to_string(ReliabilityPolicy p) {
    switch (p) {
        case ReliabilityPolicy::Low: return "low";
        case ReliabilityPolicy::Medium: return "medium";
        case ReliabilityPolicy::High: return "high";
        case ReliabilityPolicy::IntrusionAware: return "intrusion_aware";
    }
    return "?";
}

// Nearest integer of num/den for non-negative operands, ties rounded up
// (half away from zero). Used everywhere a rounded ratio is needed so all
// call sites share one tie rule.
inline std::uint64_t round_ratio(std::uint64_t num, std::uint64_t den) {
    return (2 * num + den) / (2 * den);
}

} // namespace alertval
