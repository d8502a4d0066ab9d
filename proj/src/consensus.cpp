#include "alertval/consensus.hpp"

#include <algorithm>
#include <vector>

namespace alertval::consensus {

Fanout fanout_for_level(const threat::ThreatLevel& level) {
    if (level.index >= level.k) return Fanout::All;
    if (level.index == 1) return Fanout::One;
    return Fanout::Half;
}

Fanout fanout_for_policy(ReliabilityPolicy policy, const threat::ThreatLevel& level) {
    switch (policy) {
        case ReliabilityPolicy::Low: return Fanout::One;
        case ReliabilityPolicy::Medium: return Fanout::Half;
        case ReliabilityPolicy::High: return Fanout::All;
        case ReliabilityPolicy::IntrusionAware: return fanout_for_level(level);
    }
    return Fanout::All;
}

RouteOutcome route_claim(const trust::TrustTable& receiver_table,
                         const threat::AlertMessage& claim) {
    switch (receiver_table.state_of(claim.sender)) {
        case TrustState::Trustworthy: return RouteOutcome::AcceptDirect;
        case TrustState::Untrustworthy: return RouteOutcome::Discard;
        case TrustState::Uncertain: return RouteOutcome::RunConsensus;
    }
    return RouteOutcome::RunConsensus;
}

std::set<NodeId> consensus_targets(const std::set<NodeId>& neighbors_of_sender,
                                   const std::set<NodeId>& neighbors_of_accused,
                                   const std::set<NodeId>& known_malicious,
                                   Fanout fanout, Rng& rng) {
    std::vector<NodeId> pool; // N_t, in canonical (sorted) order
    for (NodeId id : neighbors_of_sender) {
        if (neighbors_of_accused.count(id) && !known_malicious.count(id))
            pool.push_back(id);
    }
    if (pool.empty()) return {};

    std::size_t want = pool.size();
    switch (fanout) {
        case Fanout::One: want = 1; break;
        case Fanout::Half: want = (pool.size() + 1) / 2; break;
        case Fanout::All: want = pool.size(); break;
    }

    // Partial Fisher-Yates: distinct picks, no wasted duplicate requests.
    std::set<NodeId> chosen;
    for (std::size_t i = 0; i < want; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.bounded(pool.size() - i));
        std::swap(pool[i], pool[j]);
        chosen.insert(pool[i]);
    }
    return chosen;
}

std::set<NodeId> consensus_targets(const std::set<NodeId>& neighbors_of_sender,
                                   const std::set<NodeId>& neighbors_of_accused,
                                   const std::set<NodeId>& known_malicious,
                                   const threat::ThreatLevel& level, Rng& rng) {
    return consensus_targets(neighbors_of_sender, neighbors_of_accused, known_malicious,
                             fanout_for_level(level), rng);
}

Tick response_deadline(Tick t_prop, Tick t_proc) {
    return 2 * (2 * t_prop + t_proc);
}

Decision evaluate(const ValidationSession& session) {
    int sum = 0;
    for (const auto& [responder, value] : session.responses) sum += value;

    Decision d;
    d.response_sum = sum;
    if (sum > 0) {
        d.kind = DecisionKind::Validate;
        d.resolved = Resolved::Validated;
    } else if (sum < 0) {
        d.kind = DecisionKind::Invalidate;
        d.resolved = Resolved::Invalidated;
    } else {
        d.kind = DecisionKind::NoConsensus;
        d.resolved = session.mode == Mode::Aggressive ? Resolved::Validated
                                                      : Resolved::Invalidated;
    }
    return d;
}

std::optional<Response> respond_to_confirmation(const trust::TrustTable& responder_table,
                                                const ConfirmationRequest& request) {
    if (responder_table.state_of(request.requester) != TrustState::Trustworthy)
        return std::nullopt;

    int value = 0;
    switch (responder_table.state_of(request.accused)) {
        case TrustState::Untrustworthy: value = 1; break;
        case TrustState::Trustworthy: value = -1; break;
        case TrustState::Uncertain: value = 0; break;
    }
    return Response{responder_table.owner(), value};
}

OutcomeEffect apply_outcome(const Decision& decision, const threat::AlertMessage& claim,
                            ToleranceState& tolerance, ReceiverState& state,
                            bool eviction_eligible) {
    state.resolved_accused.insert(claim.accused);
    if (decision.resolved == Resolved::Validated) {
        state.malicious.insert(claim.accused);
        return OutcomeEffect::AccusedMarked;
    }
    if (!eviction_eligible) return OutcomeEffect::NoEffect;
    if (tolerance.remaining == 0) {
        state.malicious.insert(claim.sender);
        return OutcomeEffect::SenderEvicted;
    }
    --tolerance.remaining;
    return OutcomeEffect::SenderTolerated;
}

DuplicateAction handle_duplicate_alert(const ReceiverState& state,
                                       const std::set<NodeId>& open_accused,
                                       const threat::AlertMessage& claim) {
    if (state.malicious.count(claim.accused)) return DuplicateAction::DirectValidate;
    if (state.resolved_accused.count(claim.accused) || open_accused.count(claim.accused))
        return DuplicateAction::UpdateRecord;
    return DuplicateAction::Fresh;
}

} // namespace alertval::consensus
