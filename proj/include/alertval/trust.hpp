#pragma once

#include "alertval/types.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace alertval::trust {

constexpr int kInitialTrust = 50;
constexpr int kInitialF = 25;
constexpr int kInitialG = 17;

enum class InteractionOutcome : std::uint8_t { Successful, Unsuccessful };

// Per observer->subject ledger. Trust and state are only refreshed at window
// boundaries; between boundaries the counters accumulate.
struct TrustRecord {
    NodeId subject = 0;
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    int trust = kInitialTrust;
    TrustState state = TrustState::Uncertain;
};

// Adaptive classification boundaries. f bounds the trustworthy zone from
// below at 100-f, g bounds the untrustworthy zone from above at 50-g.
// Invariant: f - g >= 1, so the uncertain zone never collapses.
struct BoundaryPair {
    int f = kInitialF;
    int g = kInitialG;
    std::uint64_t window_index = 0;
};

// Trust value from interaction counters:
//   round(100 * (S / (S+U)) * (1 - 1/(S+1)))
// computed exactly as round(100*S*S / ((S+U)*(S+1))) in integer arithmetic,
// ties rounded half away from zero. S+U == 0 yields the initial value 50.
int trust_value(std::uint64_t successes, std::uint64_t failures);

// Three-state quantization of a trust value under the given boundaries:
//   trustworthy    100-f <= T <= 100
//   uncertain      50-g  <= T <  100-f
//   untrustworthy  0     <= T <  50-g
TrustState classify(int trust, const BoundaryPair& boundaries);

class TrustTable {
public:
    TrustTable() = default;
    TrustTable(NodeId owner, std::uint64_t population, std::uint64_t window_length = 0);

    NodeId owner() const { return owner_; }

    // Window length in interaction ticks; defaults to population-1.
    std::uint64_t window_length() const { return window_length_; }
    std::uint64_t interactions_this_window() const { return interactions_this_window_; }
    bool window_elapsed() const { return interactions_this_window_ >= window_length_; }

    const BoundaryPair& boundaries() const { return boundaries_; }
    void set_boundaries(const BoundaryPair& b);

    const std::map<NodeId, TrustRecord>& records() const { return records_; }
    const TrustRecord* find(NodeId subject) const;
    TrustState state_of(NodeId subject) const; // Uncertain when no record exists

    // Seeds a record with a ready-made interaction history and refreshes its
    // trust/state immediately. Scenario warm starts use this to model a
    // steady-state network without simulating the lead-in traffic.
    void seed_record(NodeId subject, std::uint64_t successes, std::uint64_t failures);

    // Counts one observed interaction with `subject`. Trust and state are not
    // recomputed here; that happens at the window boundary. Self-observation
    // is rejected.
    void record_interaction(NodeId subject, InteractionOutcome outcome);

    std::set<NodeId> trusted_set() const;   // R_x
    std::set<NodeId> untrusted_set() const; // M_x

    // Subjects whose state switched to Untrustworthy during the most recent
    // advance_window() call.
    const std::vector<NodeId>& newly_untrustworthy() const { return newly_untrustworthy_; }

    friend TrustTable advance_window(TrustTable table);
    friend BoundaryPair update_boundaries(const TrustTable& table);

private:
    NodeId owner_ = 0;
    std::uint64_t population_ = 0;
    std::uint64_t window_length_ = 1;
    std::uint64_t interactions_this_window_ = 0;
    BoundaryPair boundaries_;
    std::map<NodeId, TrustRecord> records_;
    std::vector<NodeId> newly_untrustworthy_;
};

// Boundary recomputation from the table's current trusts and states:
//   f' = round(mean(trust over R_x) / 2)   if R_x non-empty, else f
//   g' = round(mean(trust over M_x) / 3)   if M_x non-empty, else g
// then g is clamped down to f-1 if the pair would violate f - g >= 1.
BoundaryPair update_boundaries(const TrustTable& table);

// Window roll-over: recompute every record's trust from its counters,
// recompute boundaries from the resulting trustworthy/untrustworthy sets,
// reclassify everything under the new boundaries, note fresh Untrustworthy
// transitions, and reset the counters for the next window.
TrustTable advance_window(TrustTable table);

} // namespace alertval::trust
