#pragma once

#include "alertval/trust.hpp"
#include "alertval/types.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace alertval::threat {

// Threat band index 1..k. Band k covers the lowest trust values: the lower
// the trust, the higher the threat.
struct ThreatLevel {
    int index = 1;
    int k = 3;

    // Low/Medium/High names apply to the k = 3 instantiation.
    std::string label() const;
};

inline bool operator==(const ThreatLevel& a, const ThreatLevel& b) {
    return a.index == b.index && a.k == b.k;
}

// Four-field claim packet.
struct AlertMessage {
    NodeId sender = 0;
    NodeId accused = 0;
    ThreatLevel level;
    std::string detail; // opaque bytes, no schema
};

// Quantizes the trust of a detected node into one of k threat bands. The
// untrustworthy zone [0, 50-g) is split into k equal sub-bands:
//   band i (1-based) covers [(k-i)*(50-g)/k, (k-i+1)*(50-g)/k)
// with band 1 topmost. Requires t_mal < 50-g: only nodes inside the
// untrustworthy zone carry a threat level.
ThreatLevel assign_threat_level(int t_mal, int g, int k);

// Plain constructor with the self-accusation check.
AlertMessage build_alert(NodeId sender, NodeId accused, ThreatLevel level,
                         std::string detail);

// One alert per record that entered the Untrustworthy state in the table's
// latest window, skipping accused ids in `suppress` (already agreed to via a
// confirmation response, or otherwise spoken for).
std::vector<AlertMessage> detect_and_alert(const trust::TrustTable& table,
                                           const std::set<NodeId>& suppress = {},
                                           int k = 3,
                                           const std::string& detail = "pack-timeout");

} // namespace alertval::threat
