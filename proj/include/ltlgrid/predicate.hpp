#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ltlgrid {

// Region id reserved for "robot sits on an obstacle cell".
inline constexpr const char* kObstacleMarker = "O";

// One atomic predicate: robot <robot> is inside region <target>, or on an
// obstacle when target == kObstacleMarker. Robots are numbered from 1.
struct AtomicPredicate {
    int robot = 0;
    std::string target;

    bool is_obstacle() const { return target == kObstacleMarker; }
    auto operator<=>(const AtomicPredicate&) const = default;
};

// Canonical text form: pi_<robot>_<target>.
std::string to_string(const AtomicPredicate& p);

// A symbol is the set of atomic predicates that hold at one instant.
// Stored sorted and deduplicated so symbols compare and print canonically.
class Symbol {
  public:
    Symbol() = default;
    explicit Symbol(std::vector<AtomicPredicate> preds);

    static Symbol empty() { return Symbol(); }

    bool contains(const AtomicPredicate& p) const;
    bool is_empty() const { return preds_.empty(); }
    std::size_t size() const { return preds_.size(); }
    const std::vector<AtomicPredicate>& predicates() const { return preds_; }

    Symbol with(const AtomicPredicate& p) const;
    Symbol restricted_to(const std::vector<AtomicPredicate>& universe) const;
    Symbol united_with(const Symbol& other) const;

    auto operator<=>(const Symbol&) const = default;

  private:
    std::vector<AtomicPredicate> preds_;
};

// A symbol is feasible when no robot is required to occupy two distinct
// regions at once. Obstacle predicates do not affect feasibility.
bool is_feasible(const Symbol& s);

// Robots contributing a positive predicate to the symbol, sorted unique.
std::vector<int> involved_robots(const Symbol& s);

// "pi_1_l1+pi_2_l2", or "empty" for the empty symbol.
std::string to_string(const Symbol& s);

struct Literal {
    AtomicPredicate atom;
    bool negated = false;
    auto operator<=>(const Literal&) const = default;
};

std::string to_string(const Literal& l);

}  // namespace ltlgrid
