#include "ltlgrid/buchi.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ltlgrid {

bool Nba::is_final(int q) const {
    return std::binary_search(final_states.begin(), final_states.end(), q);
}

FormulaPtr Nba::guard(int src, int dst) const {
    for (const auto& t : transitions) {
        if (t.src == src && t.dst == dst) return t.guard;
    }
    return nullptr;
}

std::vector<const NbaTransition*> Nba::out_edges(int src) const {
    std::vector<const NbaTransition*> out;
    for (const auto& t : transitions) {
        if (t.src == src) out.push_back(&t);
    }
    return out;
}

void Nba::add_transition(int src, int dst, FormulaPtr g) {
    for (auto& t : transitions) {
        if (t.src == src && t.dst == dst) {
            if (!structurally_equal(t.guard, g)) t.guard = f_or(t.guard, g);
            return;
        }
    }
    transitions.push_back({src, dst, std::move(g)});
}

void Nba::sort_transitions() {
    std::sort(transitions.begin(), transitions.end(),
              [](const NbaTransition& a, const NbaTransition& b) {
                  return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
              });
}

// ---------------------------------------------------------------------------
// Feasible symbol enumeration

SymbolSet enumerate_feasible_symbols(const FormulaPtr& guard) {
    SymbolSet out;
    out.atoms = collect_atoms(guard);
    const std::size_t n = out.atoms.size();
    if (n > kMaxGuardAtoms)
        throw GuardTooWide("guard mentions " + std::to_string(n) + " atoms, limit is " +
                           std::to_string(kMaxGuardAtoms) + ": " + print_formula(guard));

    // Bit masks of same-robot region predicates; a feasible subset holds at
    // most one bit of each.
    std::vector<std::uint32_t> robot_region_masks;
    {
        std::map<int, std::uint32_t> by_robot;
        for (std::size_t i = 0; i < n; ++i) {
            if (!out.atoms[i].is_obstacle())
                by_robot[out.atoms[i].robot] |= (1u << i);
        }
        for (const auto& [robot, mask] : by_robot) robot_region_masks.push_back(mask);
    }

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool feasible = true;
        for (std::uint32_t rm : robot_region_masks) {
            if (std::popcount(mask & rm) > 1) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        std::vector<AtomicPredicate> preds;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) preds.push_back(out.atoms[i]);
        }
        Symbol sym(std::move(preds));
        if (evaluate(guard, sym)) out.symbols.push_back(std::move(sym));
    }
    return out;
}

Nba prune(const Nba& a) {
    const std::size_t n = a.transitions.size();
    std::vector<char> keep(n, 0);
    std::exception_ptr failure;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < n; ++i) {
        try {
            keep[i] = !enumerate_feasible_symbols(a.transitions[i].guard).empty();
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    Nba out = a;
    out.transitions.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) out.transitions.push_back(a.transitions[i]);
    }
    return out;
}

std::optional<std::pair<std::string, Symbol>> find_positive_obstacle_symbol(const Nba& a) {
    for (const auto& t : a.transitions) {
        SymbolSet syms = enumerate_feasible_symbols(t.guard);
        for (const auto& s : syms.symbols) {
            for (const auto& p : s.predicates()) {
                if (p.is_obstacle()) {
                    std::string where = a.state_names[t.src] + " -> " + a.state_names[t.dst];
                    return std::make_pair(where, s);
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lasso acceptance on the product with the folded word

namespace {

struct ProductGraph {
    const Nba& a;
    const LassoWord& w;
    std::size_t len;

    std::size_t next(std::size_t i) const {
        return i + 1 < len ? i + 1 : w.prefix.size();
    }

    const Symbol& at(std::size_t i) const {
        return i < w.prefix.size() ? w.prefix[i] : w.cycle[i - w.prefix.size()];
    }

    int node(int q, std::size_t pos) const { return static_cast<int>(pos) * a.num_states() + q; }
};

}  // namespace

bool accepts_lasso(const Nba& a, const LassoWord& w) {
    if (w.cycle.empty()) throw std::invalid_argument("accepts_lasso: cycle must be nonempty");
    ProductGraph pg{a, w, w.fold_length()};
    const int total = static_cast<int>(pg.len) * a.num_states();

    // Adjacency of reachable product nodes.
    std::vector<std::vector<int>> adj(total);
    std::vector<char> seen(total, 0);
    std::vector<int> stack;
    for (int q0 : a.initial) {
        const int v = pg.node(q0, 0);
        if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        const int q = v % a.num_states();
        const std::size_t pos = static_cast<std::size_t>(v / a.num_states());
        const Symbol& sym = pg.at(pos);
        for (const auto* t : a.out_edges(q)) {
            if (!evaluate(t->guard, sym)) continue;
            const int u = pg.node(t->dst, pg.next(pos));
            adj[v].push_back(u);
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }

    // Tarjan SCC over the reachable subgraph; accept when some SCC with an
    // internal edge contains a final automaton state.
    std::vector<int> index(total, -1), low(total, 0), comp(total, -1);
    std::vector<char> on_stack(total, 0);
    std::vector<int> scc_stack;
    int next_index = 0, next_comp = 0;

    struct Frame {
        int v;
        std::size_t edge = 0;
    };
    for (int root = 0; root < total; ++root) {
        if (!seen[root] || index[root] != -1) continue;
        std::vector<Frame> frames{{root}};
        index[root] = low[root] = next_index++;
        scc_stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& fr = frames.back();
            if (fr.edge < adj[fr.v].size()) {
                const int u = adj[fr.v][fr.edge++];
                if (index[u] == -1) {
                    index[u] = low[u] = next_index++;
                    scc_stack.push_back(u);
                    on_stack[u] = 1;
                    frames.push_back({u});
                } else if (on_stack[u]) {
                    low[fr.v] = std::min(low[fr.v], index[u]);
                }
            } else {
                if (low[fr.v] == index[fr.v]) {
                    while (true) {
                        const int u = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[u] = 0;
                        comp[u] = next_comp;
                        if (u == fr.v) break;
                    }
                    ++next_comp;
                }
                const int v = fr.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    // SCC has an internal edge iff some edge stays within it.
    std::vector<char> scc_cyclic(next_comp, 0), scc_final(next_comp, 0);
    for (int v = 0; v < total; ++v) {
        if (!seen[v]) continue;
        const int q = v % a.num_states();
        if (a.is_final(q)) scc_final[comp[v]] = 1;
        for (int u : adj[v]) {
            if (comp[u] == comp[v]) scc_cyclic[comp[v]] = 1;
        }
    }
    for (int v = 0; v < total; ++v) {
        if (!seen[v]) continue;
        const int q = v % a.num_states();
        if (a.is_final(q) && scc_cyclic[comp[v]]) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// DOT export

std::string export_dot(const Nba& a) {
    std::ostringstream out;
    out << "digraph nba {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=point, style=invis];\n";
    for (int q = 0; q < a.num_states(); ++q) {
        out << "  " << q << " [label=\"" << a.state_names[q] << "\", shape="
            << (a.is_final(q) ? "doublecircle" : "circle") << "];\n";
    }
    for (int q0 : a.initial) out << "  __start -> " << q0 << ";\n";
    for (const auto& t : a.transitions) {
        out << "  " << t.src << " -> " << t.dst << " [label=\"" << print_formula(t.guard)
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ltlgrid
