#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltlgrid/formula.hpp"
#include "ltlgrid/lasso.hpp"
#include "ltlgrid/predicate.hpp"

namespace ltlgrid {

struct NbaTransition {
    int src = -1;
    int dst = -1;
    FormulaPtr guard;  // propositional, over atomic predicates
};

// Nondeterministic Buchi automaton with guard formulas on transitions.
// There is at most one transition record per (src, dst) pair; parallel
// edges are merged by disjunction of their guards.
struct Nba {
    std::vector<std::string> state_names;
    std::vector<int> initial;       // sorted
    std::vector<int> final_states;  // sorted
    std::vector<NbaTransition> transitions;  // sorted by (src, dst)

    // Auxiliary pre-initial state used by the task decomposition. Its
    // outgoing guards are satisfied exactly by the initial configuration
    // label stored alongside.
    std::optional<int> aux_state;
    Symbol initial_label;

    int num_states() const { return static_cast<int>(state_names.size()); }
    bool is_final(int q) const;
    bool is_aux(int q) const { return aux_state && *aux_state == q; }

    // nullptr when there is no (src, dst) transition.
    FormulaPtr guard(int src, int dst) const;
    std::vector<const NbaTransition*> out_edges(int src) const;

    void add_transition(int src, int dst, FormulaPtr guard);  // merges with |
    void sort_transitions();
};

// Tableau translation of an LTL formula (normalized internally). The result
// is trimmed to reachable states and reduced by forward bisimulation, so
// state count stays close to hand-built automata; language equality is the
// contract, checked against eval_lasso in the tests.
Nba translate(const FormulaPtr& f);

// Symbols over the guard's own atom set that satisfy the guard and are
// feasible. Order follows ascending subset masks of the sorted atom list.
struct SymbolSet {
    std::vector<AtomicPredicate> atoms;  // sorted
    std::vector<Symbol> symbols;

    bool empty() const { return symbols.empty(); }
    std::size_t size() const { return symbols.size(); }
};

inline constexpr int kMaxGuardAtoms = 20;

// Throws GuardTooWide when the guard mentions more than kMaxGuardAtoms atoms.
struct GuardTooWide : std::runtime_error {
    explicit GuardTooWide(const std::string& msg) : std::runtime_error(msg) {}
};

SymbolSet enumerate_feasible_symbols(const FormulaPtr& guard);

// Copy of the automaton with every transition whose feasible symbol set is
// empty removed. States are untouched. Runs transition checks in parallel
// when OpenMP is enabled; the result does not depend on thread count.
Nba prune(const Nba& a);

// First feasible symbol containing a positive obstacle predicate among the
// automaton's transition guards, if any. Missions must avoid obstacles, so
// compilation rejects automata that require stepping on one.
std::optional<std::pair<std::string, Symbol>> find_positive_obstacle_symbol(const Nba& a);

// Whether some run over prefix.cycle^w visits a final state infinitely
// often. Decided on the product of the automaton with the folded lasso.
bool accepts_lasso(const Nba& a, const LassoWord& w);

// Deterministic Graphviz output; final states are double-circled.
std::string export_dot(const Nba& a);

struct HoaError : std::runtime_error {
    explicit HoaError(const std::string& msg) : std::runtime_error(msg) {}
};

// HOA v1 import restricted to state-based Buchi acceptance with explicit
// edge labels. `atom_map` translates HOA AP names to predicate names; AP
// names that already look like pi_<robot>_<region> need no entry.
Nba import_hoa(const std::string& text,
               const std::map<std::string, std::string>& atom_map = {});

std::map<std::string, std::string> parse_atom_map(const std::string& text);

}  // namespace ltlgrid
