#include "ltlgrid/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ltlgrid {

namespace {

FormulaPtr make(Op op, AtomicPredicate atom, FormulaPtr l, FormulaPtr r) {
    return std::make_shared<const Formula>(op, std::move(atom), std::move(l),
                                           std::move(r));
}

}  // namespace

FormulaPtr f_true() {
    static const FormulaPtr t = make(Op::True, {}, nullptr, nullptr);
    return t;
}

FormulaPtr f_atom(AtomicPredicate p) { return make(Op::Atom, std::move(p), nullptr, nullptr); }
FormulaPtr f_not(FormulaPtr f) { return make(Op::Not, {}, std::move(f), nullptr); }
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return make(Op::And, {}, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return make(Op::Or, {}, std::move(a), std::move(b)); }
FormulaPtr f_until(FormulaPtr a, FormulaPtr b) { return make(Op::Until, {}, std::move(a), std::move(b)); }
FormulaPtr f_always(FormulaPtr f) { return make(Op::Always, {}, std::move(f), nullptr); }
FormulaPtr f_eventually(FormulaPtr f) { return make(Op::Eventually, {}, std::move(f), nullptr); }
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) { return make(Op::Implies, {}, std::move(a), std::move(b)); }

FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) return f_true();
    FormulaPtr acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = f_and(acc, fs[i]);
    return acc;
}

FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) return f_not(f_true());
    FormulaPtr acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = f_or(acc, fs[i]);
    return acc;
}

FormulaPtr f_literal_conjunction(std::vector<Literal> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<FormulaPtr> parts;
    parts.reserve(lits.size());
    for (const auto& l : lits) {
        FormulaPtr a = f_atom(l.atom);
        parts.push_back(l.negated ? f_not(a) : a);
    }
    return f_and_all(parts);
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op) return false;
    if (a->op == Op::Atom) return a->atom == b->atom;
    return structurally_equal(a->left, b->left) && structurally_equal(a->right, b->right);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Op op) {
    switch (op) {
        case Op::Implies: return 1;
        case Op::Or: return 2;
        case Op::And: return 3;
        case Op::Until: return 4;
        case Op::Not:
        case Op::Always:
        case Op::Eventually: return 5;
        case Op::True:
        case Op::Atom: return 6;
    }
    return 6;
}

void print_rec(const FormulaPtr& f, int min_prec, std::string& out) {
    const int prec = precedence(f->op);
    const bool parens = prec < min_prec;
    if (parens) out += "(";
    switch (f->op) {
        case Op::True: out += "true"; break;
        case Op::Atom: out += to_string(f->atom); break;
        case Op::Not:
            out += "!";
            print_rec(f->left, 5, out);
            break;
        case Op::Always:
            out += "G ";
            print_rec(f->left, 5, out);
            break;
        case Op::Eventually:
            out += "F ";
            print_rec(f->left, 5, out);
            break;
        case Op::Until:
            // right-associative
            print_rec(f->left, 5, out);
            out += " U ";
            print_rec(f->right, 4, out);
            break;
        case Op::And:
            print_rec(f->left, 3, out);
            out += " & ";
            print_rec(f->right, 4, out);
            break;
        case Op::Or:
            print_rec(f->left, 2, out);
            out += " | ";
            print_rec(f->right, 3, out);
            break;
        case Op::Implies:
            print_rec(f->left, 2, out);
            out += " -> ";
            print_rec(f->right, 1, out);
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
    std::string out;
    print_rec(f, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum Kind { True, Atom, LParen, RParen, Not, And, Or, Implies, Until, Fin, Glob, End } kind;
    AtomicPredicate atom;
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_.kind = Token::End;
            return;
        }
        const char c = text_[i_];
        switch (c) {
            case '(': tok_.kind = Token::LParen; ++i_; return;
            case ')': tok_.kind = Token::RParen; ++i_; return;
            case '!': tok_.kind = Token::Not; ++i_; return;
            case '&': tok_.kind = Token::And; ++i_; return;
            case '|': tok_.kind = Token::Or; ++i_; return;
            case '-':
                if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
                    tok_.kind = Token::Implies;
                    i_ += 2;
                    return;
                }
                throw ParseError("stray '-'", i_);
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            std::string word(text_.substr(i_, j - i_));
            const std::size_t start = i_;
            i_ = j;
            if (word == "U") { tok_.kind = Token::Until; return; }
            if (word == "F") { tok_.kind = Token::Fin; return; }
            if (word == "G") { tok_.kind = Token::Glob; return; }
            if (word == "X")
                throw ParseError("the next operator X is not supported", start);
            if (word == "true") { tok_.kind = Token::True; return; }
            if (word.rfind("pi_", 0) == 0) {
                tok_.kind = Token::Atom;
                tok_.atom = parse_atom(word, start);
                return;
            }
            throw ParseError("unknown predicate name '" + word + "'", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    static AtomicPredicate parse_atom(const std::string& word, std::size_t pos) {
        // word starts with "pi_"
        std::size_t k = 3;
        std::size_t digits = k;
        while (digits < word.size() && std::isdigit(static_cast<unsigned char>(word[digits])))
            ++digits;
        if (digits == k || digits >= word.size() || word[digits] != '_')
            throw ParseError("malformed predicate '" + word + "'", pos);
        const int robot = std::stoi(word.substr(k, digits - k));
        std::string target = word.substr(digits + 1);
        if (target.empty() || target.find('_') != std::string::npos)
            throw ParseError("malformed predicate '" + word + "'", pos);
        if (robot < 1) throw ParseError("robot index must be positive in '" + word + "'", pos);
        return AtomicPredicate{robot, target};
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    FormulaPtr parse() {
        FormulaPtr f = parse_implies();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input", lex_.peek().pos);
        return f;
    }

  private:
    FormulaPtr parse_implies() {
        FormulaPtr lhs = parse_or();
        if (lex_.peek().kind == Token::Implies) {
            lex_.take();
            return f_implies(lhs, parse_implies());
        }
        return lhs;
    }

    FormulaPtr parse_or() {
        FormulaPtr lhs = parse_and();
        while (lex_.peek().kind == Token::Or) {
            lex_.take();
            lhs = f_or(lhs, parse_and());
        }
        return lhs;
    }

    FormulaPtr parse_and() {
        FormulaPtr lhs = parse_until();
        while (lex_.peek().kind == Token::And) {
            lex_.take();
            lhs = f_and(lhs, parse_until());
        }
        return lhs;
    }

    FormulaPtr parse_until() {
        FormulaPtr lhs = parse_unary();
        if (lex_.peek().kind == Token::Until) {
            lex_.take();
            return f_until(lhs, parse_until());
        }
        return lhs;
    }

    FormulaPtr parse_unary() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Token::Not: lex_.take(); return f_not(parse_unary());
            case Token::Fin: lex_.take(); return f_eventually(parse_unary());
            case Token::Glob: lex_.take(); return f_always(parse_unary());
            case Token::True: lex_.take(); return f_true();
            case Token::Atom: lex_.take(); return f_atom(t.atom);
            case Token::LParen: {
                lex_.take();
                FormulaPtr f = parse_implies();
                if (lex_.peek().kind != Token::RParen)
                    throw ParseError("expected ')'", lex_.peek().pos);
                lex_.take();
                return f;
            }
            default: throw ParseError("expected a formula", t.pos);
        }
    }

    Lexer lex_;
};

}  // namespace

FormulaPtr parse_ltl(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Negation normal form

namespace {

FormulaPtr nnf_pos(const FormulaPtr& f);

FormulaPtr nnf_neg(const FormulaPtr& f) {
    switch (f->op) {
        case Op::True: return f_not(f_true());
        case Op::Atom: return f_not(f);
        case Op::Not: return nnf_pos(f->left);
        case Op::And: return f_or(nnf_neg(f->left), nnf_neg(f->right));
        case Op::Or: return f_and(nnf_neg(f->left), nnf_neg(f->right));
        case Op::Implies: return f_and(nnf_pos(f->left), nnf_neg(f->right));
        case Op::Eventually: return f_always(nnf_neg(f->left));
        case Op::Always: return f_eventually(nnf_neg(f->left));
        case Op::Until: {
            // !(a U b) == G !b | (!b U (!a & !b)); release-free encoding.
            FormulaPtr na = nnf_neg(f->left);
            FormulaPtr nb = nnf_neg(f->right);
            return f_or(f_always(nb), f_until(nb, f_and(na, nb)));
        }
    }
    return f;
}

FormulaPtr nnf_pos(const FormulaPtr& f) {
    switch (f->op) {
        case Op::True:
        case Op::Atom: return f;
        case Op::Not: return nnf_neg(f->left);
        case Op::And: return f_and(nnf_pos(f->left), nnf_pos(f->right));
        case Op::Or: return f_or(nnf_pos(f->left), nnf_pos(f->right));
        case Op::Implies: return f_or(nnf_neg(f->left), nnf_pos(f->right));
        case Op::Eventually: return f_eventually(nnf_pos(f->left));
        case Op::Always: return f_always(nnf_pos(f->left));
        case Op::Until: return f_until(nnf_pos(f->left), nnf_pos(f->right));
    }
    return f;
}

}  // namespace

FormulaPtr to_nnf(const FormulaPtr& f) { return nnf_pos(f); }

bool is_propositional(const FormulaPtr& f) {
    switch (f->op) {
        case Op::True:
        case Op::Atom: return true;
        case Op::Not:
        case Op::Always:
        case Op::Eventually:
            return f->op == Op::Not && is_propositional(f->left);
        case Op::And:
        case Op::Or:
        case Op::Implies:
            return is_propositional(f->left) && is_propositional(f->right);
        case Op::Until: return false;
    }
    return false;
}

std::vector<AtomicPredicate> collect_atoms(const FormulaPtr& f) {
    std::set<AtomicPredicate> acc;
    std::vector<const Formula*> stack{f.get()};
    while (!stack.empty()) {
        const Formula* cur = stack.back();
        stack.pop_back();
        if (cur->op == Op::Atom) acc.insert(cur->atom);
        if (cur->left) stack.push_back(cur->left.get());
        if (cur->right) stack.push_back(cur->right.get());
    }
    return {acc.begin(), acc.end()};
}

bool evaluate(const FormulaPtr& f, const Symbol& sym) {
    switch (f->op) {
        case Op::True: return true;
        case Op::Atom: return sym.contains(f->atom);
        case Op::Not: return !evaluate(f->left, sym);
        case Op::And: return evaluate(f->left, sym) && evaluate(f->right, sym);
        case Op::Or: return evaluate(f->left, sym) || evaluate(f->right, sym);
        case Op::Implies: return !evaluate(f->left, sym) || evaluate(f->right, sym);
        case Op::Until:
        case Op::Always:
        case Op::Eventually:
            throw std::invalid_argument("evaluate: formula contains temporal operators");
    }
    return false;
}

// ---------------------------------------------------------------------------
// CNF by distribution

namespace {

Clause normalize_clause(Clause c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

bool tautological(const Clause& c) {
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i].atom == c[i - 1].atom && c[i].negated != c[i - 1].negated) return true;
    }
    return false;
}

// prop NNF over literals with And/Or only; true -> nullptr-marker handled by
// caller via empty clause sets.
std::vector<Clause> cnf_rec(const FormulaPtr& f, bool negated) {
    switch (f->op) {
        case Op::True:
            if (!negated) return {};       // true: no clauses
            return {Clause{}};             // false: one empty clause
        case Op::Atom:
            return {Clause{Literal{f->atom, negated}}};
        case Op::Not:
            return cnf_rec(f->left, !negated);
        case Op::Implies:
            return negated
                       ? cnf_rec(f_and(f->left, f_not(f->right)), false)
                       : cnf_rec(f_or(f_not(f->left), f->right), false);
        case Op::And:
        case Op::Or: {
            const bool conjunctive = (f->op == Op::And) != negated;
            auto lhs = cnf_rec(f->left, negated);
            auto rhs = cnf_rec(f->right, negated);
            if (conjunctive) {
                lhs.insert(lhs.end(), rhs.begin(), rhs.end());
                return lhs;
            }
            // distribute: (A1&A2)|(B1&B2) -> (A1|B1)&(A1|B2)&...
            if (lhs.empty() || rhs.empty()) return {};  // one side is true
            std::vector<Clause> out;
            out.reserve(lhs.size() * rhs.size());
            for (const auto& a : lhs) {
                for (const auto& b : rhs) {
                    Clause c = a;
                    c.insert(c.end(), b.begin(), b.end());
                    out.push_back(std::move(c));
                }
            }
            return out;
        }
        case Op::Until:
        case Op::Always:
        case Op::Eventually:
            throw std::invalid_argument("to_cnf: formula contains temporal operators");
    }
    return {};
}

}  // namespace

std::vector<Clause> to_cnf(const FormulaPtr& f) {
    std::vector<Clause> raw = cnf_rec(f, false);
    std::vector<Clause> out;
    for (auto& c : raw) {
        Clause n = normalize_clause(std::move(c));
        if (!tautological(n)) out.push_back(std::move(n));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const Clause& c) {
    if (c.empty()) return "(false)";
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += " | ";
        out += to_string(c[i]);
    }
    return out + ")";
}

}  // namespace ltlgrid
