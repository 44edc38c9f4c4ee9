#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minenum/property.hpp"

namespace minenum {

/// Cross-check of one enumeration run against the brute-force oracle.
struct AuditReport {
    bool complete = false;       // emitted contains every minimal (Pi,k)-set
    bool all_minimal = false;    // every emission is a minimal Pi-set
    bool no_duplicates = false;  // canonical keys all distinct
    bool factor_ok = false;      // max |emitted| <= ceil(factor_claim * k)
    int max_emitted_size = 0;
    std::vector<ElementSet> missing;    // oracle sets the run failed to emit
    std::vector<ElementSet> offenders;  // non-minimal or oversized emissions

    bool all_green() const { return complete && all_minimal && no_duplicates && factor_ok; }
    std::string describe(int id_offset = 0) const;
};

/// Exhaustive enumeration of minimal Pi-sets by increasing cardinality, then
/// lexicographic order within a cardinality. Guarded at |U| <= 20. With a
/// size cap, subsets above the cap are not visited (every smaller minimal set
/// has been seen already, so minimality stays decidable).
std::vector<ElementSet> brute_minimal_sets(const PropertyInstance& p,
                                           std::optional<int> size_cap = std::nullopt);

/// Generic variant over an explicit universe and predicate; used for the
/// negative controls whose ground set is a restricted sub-universe.
std::vector<ElementSet> brute_minimal_sets_over(
    const std::vector<int>& universe, GroundKind kind,
    const std::function<bool(const ElementSet&)>& member,
    std::optional<int> size_cap = std::nullopt);

AuditReport audit_run(const PropertyInstance& p, int k, double factor_claim,
                      const std::vector<ElementSet>& emitted);

}  // namespace minenum
