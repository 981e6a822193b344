#include "ltlgrid/predicate.hpp"

#include <algorithm>

namespace ltlgrid {

std::string to_string(const AtomicPredicate& p) {
    return "pi_" + std::to_string(p.robot) + "_" + p.target;
}

Symbol::Symbol(std::vector<AtomicPredicate> preds) : preds_(std::move(preds)) {
    std::sort(preds_.begin(), preds_.end());
    preds_.erase(std::unique(preds_.begin(), preds_.end()), preds_.end());
}

bool Symbol::contains(const AtomicPredicate& p) const {
    return std::binary_search(preds_.begin(), preds_.end(), p);
}

Symbol Symbol::with(const AtomicPredicate& p) const {
    auto preds = preds_;
    preds.push_back(p);
    return Symbol(std::move(preds));
}

Symbol Symbol::restricted_to(const std::vector<AtomicPredicate>& universe) const {
    std::vector<AtomicPredicate> kept;
    for (const auto& p : preds_) {
        if (std::find(universe.begin(), universe.end(), p) != universe.end())
            kept.push_back(p);
    }
    return Symbol(std::move(kept));
}

Symbol Symbol::united_with(const Symbol& other) const {
    auto preds = preds_;
    preds.insert(preds.end(), other.preds_.begin(), other.preds_.end());
    return Symbol(std::move(preds));
}

bool is_feasible(const Symbol& s) {
    // Predicates are sorted by robot first, so region predicates of the same
    // robot are adjacent.
    const auto& preds = s.predicates();
    for (std::size_t i = 1; i < preds.size(); ++i) {
        if (preds[i].robot == preds[i - 1].robot && !preds[i].is_obstacle() &&
            !preds[i - 1].is_obstacle())
            return false;
    }
    return true;
}

std::vector<int> involved_robots(const Symbol& s) {
    std::vector<int> robots;
    for (const auto& p : s.predicates()) {
        if (robots.empty() || robots.back() != p.robot) robots.push_back(p.robot);
    }
    return robots;
}

std::string to_string(const Symbol& s) {
    if (s.is_empty()) return "empty";
    std::string out;
    for (const auto& p : s.predicates()) {
        if (!out.empty()) out += "+";
        out += to_string(p);
    }
    return out;
}

std::string to_string(const Literal& l) {
    return l.negated ? "!" + to_string(l.atom) : to_string(l.atom);
}

}  // namespace ltlgrid
