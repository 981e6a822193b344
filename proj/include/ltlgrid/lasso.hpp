#pragma once

#include <vector>

#include "ltlgrid/formula.hpp"
#include "ltlgrid/predicate.hpp"

namespace ltlgrid {

// Ultimately periodic infinite word: prefix followed by cycle repeated
// forever. The cycle must be nonempty.
struct LassoWord {
    std::vector<Symbol> prefix;
    std::vector<Symbol> cycle;

    std::size_t fold_length() const { return prefix.size() + cycle.size(); }
};

// Direct LTL semantics on the folded lasso positions. Suffixes at position
// p and p + |cycle| coincide for p >= |prefix|, so each subformula has a
// well-defined truth vector over prefix+cycle positions; until/eventually
// are least fixpoints, always a greatest fixpoint, both reached within
// |positions| sweeps.
bool eval_lasso(const FormulaPtr& f, const LassoWord& w);

}  // namespace ltlgrid
