#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dominion/errors.hpp"
#include "dominion/graph.hpp"
#include "dominion/params.hpp"
#include "dominion/witness.hpp"

namespace dominion {

class Value {
public:
    static Value finite_value(long long v) { return Value(v); }
    static Value infinite() { return Value(); }

    bool finite() const { return v_.has_value(); }
    long long get() const;
    std::string str() const { return finite() ? std::to_string(*v_) : "infinity"; }
    bool operator==(const Value&) const = default;

private:
    Value() = default;
    explicit Value(long long v) : v_(v) {}
    std::optional<long long> v_;
};

struct Solution {
    Value value = Value::infinite();
    std::optional<Witness> witness;
    bool operator==(const Solution&) const = default;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

class BudgetExhausted : public Error {
public:
    BudgetExhausted(std::uint64_t nodes, std::optional<Witness> incumbent)
        : Error(ErrorCode::BudgetExhausted,
                "node budget exhausted after " + std::to_string(nodes) + " nodes"),
          incumbent(std::move(incumbent)) {}
    std::optional<Witness> incumbent;
};

// Optimum of a vertex parameter with the lexicographically least optimal witness.
Solution solve(Param p, const Graph& g, std::uint64_t budget = kDefaultBudget);
// rho, rho_2 and tau_2; edge witnesses follow the MultiGraph edge order.
Solution solve_cover(Param p, const MultiGraph& g, std::uint64_t budget = kDefaultBudget);
Solution solve_cover(Param p, const Graph& g, std::uint64_t budget = kDefaultBudget);
// Disjoint (total) dominating pairs; the witness labels A with a and B with b.
Solution solve_disjoint(Param p, const Graph& g);

}  // namespace dominion
