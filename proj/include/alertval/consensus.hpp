#pragma once

#include "alertval/rng.hpp"
#include "alertval/threat.hpp"
#include "alertval/trust.hpp"
#include "alertval/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace alertval::consensus {

enum class RouteOutcome : std::uint8_t { AcceptDirect, Discard, RunConsensus };

enum class DuplicateAction : std::uint8_t { Fresh, UpdateRecord, DirectValidate };

enum class DecisionKind : std::uint8_t { Validate, Invalidate, NoConsensus };

enum class Resolved : std::uint8_t { Validated, Invalidated };

// agree = 1, don't know = 0, not agree = -1
struct Response {
    NodeId responder = 0;
    int value = 0;
};

struct Decision {
    DecisionKind kind = DecisionKind::NoConsensus;
    Resolved resolved = Resolved::Invalidated;
    int response_sum = 0;
};

// How many of the filtered trusted common neighbors get a confirmation
// request.
enum class Fanout : std::uint8_t { One, Half, All };

// Intrusion-aware mapping: top band (lowest threat) -> one node, bottom band
// (highest threat) -> all, anything between -> half.
Fanout fanout_for_level(const threat::ThreatLevel& level);

// Fixed reliability policies ignore the claim's level; the intrusion-aware
// policy keys the fanout to it.
Fanout fanout_for_policy(ReliabilityPolicy policy, const threat::ThreatLevel& level);

// Receiver-side state for one claim under validation.
struct ValidationSession {
    threat::AlertMessage claim;
    std::set<NodeId> targets;
    std::size_t requests_sent = 0; // n_req
    std::map<NodeId, int> responses; // responder -> value, keys subset of targets
    Tick deadline = 0;
    Mode mode = Mode::Aggressive;
    std::optional<Decision> outcome;

    bool all_responded() const { return responses.size() == targets.size(); }
};

// Remaining number of invalidated claims a sender may issue before being
// declared malicious. The default configured level is zero.
struct ToleranceState {
    std::uint64_t configured_level = 0;
    std::uint64_t remaining = 0;
};

// Everything a receiver accumulates across claims.
struct ReceiverState {
    std::set<NodeId> malicious;                 // declared malicious nodes
    std::set<NodeId> resolved_accused;          // accused ids with a finished session
    std::map<NodeId, ToleranceState> tolerance; // per-sender allowance

    ToleranceState& tolerance_for(NodeId sender, std::uint64_t configured_level) {
        auto [it, inserted] = tolerance.try_emplace(
            sender, ToleranceState{configured_level, configured_level});
        return it->second;
    }
};

// Claim routing by the sender's trust state at the receiver:
// Trustworthy -> accept straightaway, Untrustworthy -> discard,
// Uncertain -> run the consensus phase.
RouteOutcome route_claim(const trust::TrustTable& receiver_table,
                         const threat::AlertMessage& claim);

// Consensus phase target selection:
//   N_sm = neighbors_of_sender ∩ neighbors_of_accused
//   N_t  = N_sm \ known_malicious
// then One -> a single uniformly random member, Half -> ceil(|N_t|/2)
// distinct random members, All -> every member. Empty N_t yields an empty
// set; the caller resolves such sessions by mode.
std::set<NodeId> consensus_targets(const std::set<NodeId>& neighbors_of_sender,
                                   const std::set<NodeId>& neighbors_of_accused,
                                   const std::set<NodeId>& known_malicious,
                                   Fanout fanout, Rng& rng);

std::set<NodeId> consensus_targets(const std::set<NodeId>& neighbors_of_sender,
                                   const std::set<NodeId>& neighbors_of_accused,
                                   const std::set<NodeId>& known_malicious,
                                   const threat::ThreatLevel& level, Rng& rng);

// Response wait bound: 2 * (2*t_prop + t_proc), with t_prop the propagation
// time to the farthest selected responder.
Tick response_deadline(Tick t_prop, Tick t_proc);

// Decision phase over the collected responses: positive sum validates,
// negative invalidates, zero is no-consensus and falls to the session's mode
// (aggressive validates, defensive invalidates).
Decision evaluate(const ValidationSession& session);

struct ConfirmationRequest {
    NodeId requester = 0;
    NodeId accused = 0;
    threat::ThreatLevel level;
    std::string detail;
};

// Responder behavior: requests from requesters the responder does not hold
// Trustworthy are dropped. Otherwise the responder answers from its own
// record of the accused: Untrustworthy -> 1, Trustworthy -> -1, else 0.
// The caller applies the agreement side effects (malicious list update and
// own-alert suppression).
std::optional<Response> respond_to_confirmation(const trust::TrustTable& responder_table,
                                                const ConfirmationRequest& request);

enum class OutcomeEffect : std::uint8_t {
    AccusedMarked,
    SenderEvicted,
    SenderTolerated,
    NoEffect,
};

// Applies a resolved decision. Validated marks the accused; Invalidated
// charges the sender's tolerance allowance and evicts it once the allowance
// is spent. Sessions that never sent a request (empty N_t) are not
// eviction-eligible.
OutcomeEffect apply_outcome(const Decision& decision, const threat::AlertMessage& claim,
                            ToleranceState& tolerance, ReceiverState& state,
                            bool eviction_eligible = true);

// Repeated-claim handling ahead of route_claim: accused already declared
// malicious -> validate directly with zero new requests; accused already
// seen (open or resolved session) -> just update the record; otherwise the
// claim is fresh.
DuplicateAction handle_duplicate_alert(const ReceiverState& state,
                                       const std::set<NodeId>& open_accused,
                                       const threat::AlertMessage& claim);

} // namespace alertval::consensus
