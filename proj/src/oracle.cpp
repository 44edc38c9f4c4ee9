#include "minenum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace minenum {

namespace {

// Visits index subsets of `universe` in cardinality-then-lexicographic order.
template <typename Fn>
void for_each_subset_by_cardinality(int universe, int max_card, Fn&& visit) {
    for (int card = 0; card <= max_card; ++card) {
        std::vector<int> idx(card);
        for (int i = 0; i < card; ++i) idx[i] = i;
        while (true) {
            visit(idx);
            if (card == 0) break;
            int i = card - 1;
            while (i >= 0 && idx[i] == universe - card + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

std::vector<ElementSet> brute_minimal_sets_over(
    const std::vector<int>& universe, GroundKind kind,
    const std::function<bool(const ElementSet&)>& member,
    std::optional<int> size_cap) {
    int n = static_cast<int>(universe.size());
    if (n > 20) throw Error("oracle guard: ground set larger than 20");
    int cap = std::min(n, size_cap.value_or(n));
    std::vector<ElementSet> kept;
    for_each_subset_by_cardinality(n, cap, [&](const std::vector<int>& idx) {
        std::vector<int> elems;
        elems.reserve(idx.size());
        for (int i : idx) elems.push_back(universe[i]);
        ElementSet x = canonicalize(std::move(elems), kind);
        if (!member(x)) return;
        for (const auto& smaller : kept) {
            if (smaller.size() < x.size() && smaller.subset_of(x)) return;
        }
        kept.push_back(std::move(x));
    });
    return kept;
}

std::vector<ElementSet> brute_minimal_sets(const PropertyInstance& p,
                                           std::optional<int> size_cap) {
    std::vector<int> universe(p.ground_size);
    for (int i = 0; i < p.ground_size; ++i) universe[i] = i;
    return brute_minimal_sets_over(
        universe, p.kind, [&](const ElementSet& x) { return p.is_pi_set(x); }, size_cap);
}

AuditReport audit_run(const PropertyInstance& p, int k, double factor_claim,
                      const std::vector<ElementSet>& emitted) {
    AuditReport report;
    std::unordered_set<ElementSet, ElementSetHash> keys;
    report.no_duplicates = true;
    for (const auto& s : emitted) {
        if (!keys.insert(s).second) report.no_duplicates = false;
        report.max_emitted_size = std::max(report.max_emitted_size, s.size());
    }

    report.complete = true;
    for (const auto& want : brute_minimal_sets(p, k)) {
        if (!keys.count(want)) {
            report.complete = false;
            report.missing.push_back(want);
        }
    }

    report.all_minimal = true;
    // Ceiling-inclusive factor cap, sidestepping rational rounding disputes.
    long long allowed = static_cast<long long>(std::ceil(factor_claim * k - 1e-9));
    report.factor_ok = true;
    for (const auto& s : emitted) {
        bool bad = false;
        if (!is_minimal_pi_set(p, s)) {
            report.all_minimal = false;
            bad = true;
        }
        if (s.size() > allowed) {
            report.factor_ok = false;
            bad = true;
        }
        if (bad) report.offenders.push_back(s);
    }
    return report;
}

std::string AuditReport::describe(int id_offset) const {
    std::ostringstream out;
    out << (all_green() ? "ok" : "FAIL")
        << " complete=" << complete << " all_minimal=" << all_minimal
        << " no_duplicates=" << no_duplicates << " factor_ok=" << factor_ok
        << " max_size=" << max_emitted_size;
    if (!missing.empty()) {
        out << " missing=[";
        for (std::size_t i = 0; i < missing.size() && i < 4; ++i) {
            out << (i ? " " : "") << to_string(missing[i], id_offset);
        }
        if (missing.size() > 4) out << " ...";
        out << "]";
    }
    if (!offenders.empty()) {
        out << " offenders=[";
        for (std::size_t i = 0; i < offenders.size() && i < 4; ++i) {
            out << (i ? " " : "") << to_string(offenders[i], id_offset);
        }
        if (offenders.size() > 4) out << " ...";
        out << "]";
    }
    return out.str();
}

}  // namespace minenum
