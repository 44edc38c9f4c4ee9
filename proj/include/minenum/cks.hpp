#pragma once

#include "minenum/property.hpp"

namespace minenum {

/// Complete answer to the input-restricted problem for one (X, x): every
/// member Y excludes x, has |Y| <= k, makes (X \ {x}) ∪ Y a Pi-set and is
/// minimal with that property. Members are pairwise distinct and sorted
/// lexicographically.
struct RestrictedFamily {
    std::vector<ElementSet> members;
    ElementSet source_x_set;
    int source_x = -1;
};

/// Vertex cover: the uncovered edges after removing X \ {x} are exactly
/// {x, w} with w outside X, so the family is a single forced set (or empty
/// when it exceeds k).
RestrictedFamily restricted_vc(const Graph& g, int k, const ElementSet& x_set, int x);

/// Bounded degree-d deletion: choose which <= d neighbors of x survive, then
/// one extra deletion per surviving neighbor left at degree d+1; filtered to
/// minimal, distinct members within budget.
RestrictedFamily restricted_bdd(const Graph& g, int degree_bound, int k,
                                const ElementSet& x_set, int x);

/// Star forest edge deletion: at most one component of G - (X \ {x}) is not a
/// star; the candidates come from the leaf/center role assignments of the two
/// endpoints of x within that component. At most 4 members.
RestrictedFamily restricted_sfed(const Graph& g, int k, const ElementSet& x_set, int x);

/// Dominating set with the concrete max degree as the constant: the vertices
/// dominated only by x each pick a replacement dominator from their closed
/// neighborhood; enumerated as minimal transversals of those choice sets.
/// Throws when the branching exceeds work_limit.
RestrictedFamily restricted_ds(const Graph& g, int k, const ElementSet& x_set, int x,
                               long long work_limit = 1'000'000);

}  // namespace minenum
