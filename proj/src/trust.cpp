#include "alertval/trust.hpp"

#include <stdexcept>
#include <utility>

namespace alertval::trust {

int trust_value(std::uint64_t successes, std::uint64_t failures) {
    const std::uint64_t total = successes + failures;
    if (total == 0) return kInitialTrust;
    // 100 * (S/(S+U)) * (1 - 1/(S+1)) == 100*S*S / ((S+U)*(S+1))
    const std::uint64_t num = 100 * successes * successes;
    const std::uint64_t den = total * (successes + 1);
    return static_cast<int>(round_ratio(num, den));
}

TrustState classify(int trust, const BoundaryPair& boundaries) {
    if (trust >= 100 - boundaries.f) return TrustState::Trustworthy;
    if (trust >= 50 - boundaries.g) return TrustState::Uncertain;
    return TrustState::Untrustworthy;
}

TrustTable::TrustTable(NodeId owner, std::uint64_t population, std::uint64_t window_length)
    : owner_(owner),
      population_(population),
      window_length_(window_length > 0 ? window_length
                                       : (population > 1 ? population - 1 : 1)) {}

void TrustTable::set_boundaries(const BoundaryPair& b) {
    if (b.f - b.g < 1) throw std::invalid_argument("boundaries must satisfy f - g >= 1");
    boundaries_ = b;
}

const TrustRecord* TrustTable::find(NodeId subject) const {
    auto it = records_.find(subject);
    return it == records_.end() ? nullptr : &it->second;
}

TrustState TrustTable::state_of(NodeId subject) const {
    const TrustRecord* rec = find(subject);
    return rec ? rec->state : TrustState::Uncertain;
}

void TrustTable::seed_record(NodeId subject, std::uint64_t successes, std::uint64_t failures) {
    if (subject == owner_) throw std::invalid_argument("cannot seed a record for the owner");
    TrustRecord rec;
    rec.subject = subject;
    rec.successes = successes;
    rec.failures = failures;
    rec.trust = trust_value(successes, failures);
    rec.state = classify(rec.trust, boundaries_);
    records_[subject] = rec;
}

void TrustTable::record_interaction(NodeId subject, InteractionOutcome outcome) {
    if (subject == owner_) throw std::invalid_argument("self-observation rejected");
    TrustRecord& rec = records_[subject];
    rec.subject = subject;
    if (outcome == InteractionOutcome::Successful) {
        ++rec.successes;
    } else {
        ++rec.failures;
    }
    ++interactions_this_window_;
}

std::set<NodeId> TrustTable::trusted_set() const {
    std::set<NodeId> out;
    for (const auto& [id, rec] : records_)
        if (rec.state == TrustState::Trustworthy) out.insert(id);
    return out;
}

std::set<NodeId> TrustTable::untrusted_set() const {
    std::set<NodeId> out;
    for (const auto& [id, rec] : records_)
        if (rec.state == TrustState::Untrustworthy) out.insert(id);
    return out;
}

BoundaryPair update_boundaries(const TrustTable& table) {
    std::uint64_t sum_trusted = 0, n_trusted = 0;
    std::uint64_t sum_untrusted = 0, n_untrusted = 0;
    for (const auto& [id, rec] : table.records_) {
        if (rec.state == TrustState::Trustworthy) {
            sum_trusted += static_cast<std::uint64_t>(rec.trust);
            ++n_trusted;
        } else if (rec.state == TrustState::Untrustworthy) {
            sum_untrusted += static_cast<std::uint64_t>(rec.trust);
            ++n_untrusted;
        }
    }

    BoundaryPair next = table.boundaries_;
    // Empty sets hold the previous value.
    if (n_trusted > 0) next.f = static_cast<int>(round_ratio(sum_trusted, 2 * n_trusted));
    if (n_untrusted > 0) next.g = static_cast<int>(round_ratio(sum_untrusted, 3 * n_untrusted));

    // Keep the uncertain zone open.
    if (next.f - next.g < 1) next.g = next.f - 1;
    return next;
}

TrustTable advance_window(TrustTable table) {
    table.newly_untrustworthy_.clear();

    // New trusts, classified under the outgoing boundaries; these states are
    // the R_x / M_x memberships that feed the boundary update.
    std::map<NodeId, TrustState> previous_state;
    for (auto& [id, rec] : table.records_) {
        previous_state[id] = rec.state;
        rec.trust = trust_value(rec.successes, rec.failures);
        rec.state = classify(rec.trust, table.boundaries_);
    }

    BoundaryPair next = update_boundaries(table);
    next.window_index = table.boundaries_.window_index + 1;
    table.boundaries_ = next;

    for (auto& [id, rec] : table.records_) {
        rec.state = classify(rec.trust, table.boundaries_);
        if (rec.state == TrustState::Untrustworthy &&
            previous_state[id] != TrustState::Untrustworthy) {
            table.newly_untrustworthy_.push_back(id);
        }
        rec.successes = 0;
        rec.failures = 0;
    }

    table.interactions_this_window_ = 0;
    return table;
}

} // namespace alertval::trust
