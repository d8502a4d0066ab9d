#include "alertval/threat.hpp"

#include <stdexcept>

namespace alertval::threat {

std::string ThreatLevel::label() const {
    if (k == 3) {
        switch (index) {
            case 1: return "low";
            case 2: return "medium";
            case 3: return "high";
            default: break;
        }
    }
    return "H" + std::to_string(index);
}

ThreatLevel assign_threat_level(int t_mal, int g, int k) {
    if (k < 1) throw std::invalid_argument("threat level count k must be >= 1");
    const int zone = 50 - g; // upper limit of the untrustworthy zone
    if (t_mal < 0 || t_mal >= zone)
        throw std::invalid_argument("node is not in the untrustworthy zone, no threat level defined");

    // Band i has lower edge (k-i)*zone/k; walk from the top band down and
    // take the first band whose lower edge is <= t_mal. Comparisons are done
    // on k*t_mal vs (k-i)*zone to stay exact.
    for (int i = 1; i < k; ++i) {
        if (static_cast<long long>(k) * t_mal >= static_cast<long long>(k - i) * zone)
            return ThreatLevel{i, k};
    }
    return ThreatLevel{k, k};
}

AlertMessage build_alert(NodeId sender, NodeId accused, ThreatLevel level,
                         std::string detail) {
    if (sender == accused) throw std::invalid_argument("self-accusation rejected");
    return AlertMessage{sender, accused, level, std::move(detail)};
}

std::vector<AlertMessage> detect_and_alert(const trust::TrustTable& table,
                                           const std::set<NodeId>& suppress,
                                           int k,
                                           const std::string& detail) {
    std::vector<AlertMessage> alerts;
    for (NodeId accused : table.newly_untrustworthy()) {
        if (suppress.count(accused)) continue;
        const trust::TrustRecord* rec = table.find(accused);
        if (!rec) continue;
        ThreatLevel level = assign_threat_level(rec->trust, table.boundaries().g, k);
        alerts.push_back(build_alert(table.owner(), accused, level, detail));
    }
    return alerts;
}

} // namespace alertval::threat
