#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ltlgrid/predicate.hpp"

namespace ltlgrid {

enum class Op : std::uint8_t {
    True,
    Atom,
    Not,
    And,
    Or,
    Until,
    Always,
    Eventually,
    Implies,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable syntax tree. Unary operators use `left`; `atom` is meaningful
// only when op == Op::Atom. The `next` operator is not representable.
class Formula {
  public:
    Op op;
    AtomicPredicate atom;
    FormulaPtr left;
    FormulaPtr right;

    Formula(Op o, AtomicPredicate a, FormulaPtr l, FormulaPtr r)
        : op(o), atom(std::move(a)), left(std::move(l)), right(std::move(r)) {}
};

FormulaPtr f_true();
FormulaPtr f_atom(AtomicPredicate p);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_until(FormulaPtr a, FormulaPtr b);
FormulaPtr f_always(FormulaPtr f);
FormulaPtr f_eventually(FormulaPtr f);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);

// Conjunction/disjunction over a list; empty conjunction is true.
FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs);
FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs);

// Guard made of a literal set, in canonical literal order.
FormulaPtr f_literal_conjunction(std::vector<Literal> lits);

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Canonical printable form that parse_ltl accepts back.
std::string print_formula(const FormulaPtr& f);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Concrete syntax: atoms pi_<robot>_<region> and pi_<robot>_O, operators
// & | ! -> U F G, parentheses, keyword true. Precedence, tightest first:
// unary, U (right-assoc), &, |, -> (right-assoc). The next operator X is
// rejected.
FormulaPtr parse_ltl(std::string_view text);

// Negation normal form: implications expanded, negations pushed to atoms.
// Always/eventually stay first-class since the grammar has no release.
FormulaPtr to_nnf(const FormulaPtr& f);

bool is_propositional(const FormulaPtr& f);

// Sorted unique atoms occurring in the formula.
std::vector<AtomicPredicate> collect_atoms(const FormulaPtr& f);

// Propositional evaluation; atoms absent from the symbol read false.
// Throws std::invalid_argument on temporal operators.
bool evaluate(const FormulaPtr& f, const Symbol& sym);

// A CNF clause: disjunction of literals, sorted, no duplicates.
using Clause = std::vector<Literal>;

// Distribution-based CNF of a propositional formula. Tautological clauses
// are dropped, clauses deduplicated, clause order deterministic. The empty
// clause list means "true"; a clause list containing an empty clause means
// "false". Throws std::invalid_argument on temporal operators.
std::vector<Clause> to_cnf(const FormulaPtr& f);

std::string to_string(const Clause& c);

}  // namespace ltlgrid
