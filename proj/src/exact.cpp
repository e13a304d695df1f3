#include "dominion/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

namespace dominion {

long long Value::get() const {
    if (!v_) throw Error(ErrorCode::UndefinedParameter, "value is infinite");
    return *v_;
}

namespace {

using Mask = std::uint64_t;

inline int pc(Mask m) { return std::popcount(m); }
inline Mask bit(int v) { return Mask{1} << v; }

struct Status {
    int cost;  // -1 when the vertex can no longer be satisfied
    Mask suppliers;
};

// Branch and bound over one connected component (at most 64 vertices).
class VertexSearch {
public:
    VertexSearch(Param p, const Graph& h, std::uint64_t& nodes, std::uint64_t budget)
        : p_(p), pi_(info(p)), n_(h.n()), nodes_(nodes), budget_(budget) {
        open_.resize(n_);
        closed_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            open_[v] = h.open_mask(v);
            closed_[v] = h.closed_mask(v);
        }
        full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        unit_ = max_unit(p);
        rainbow_ = pi_.rule == Rule::Union;
        single_ = pi_.codomain == Codomain::RainbowSingle;
        values_.resize(codomain_size(p));
        for (int i = 0; i < codomain_size(p); ++i) values_[i] = static_cast<std::uint8_t>(i);
        reset();
    }

    // Minimum weight, or nullopt when no feasible witness exists.
    std::optional<int> optimum() {
        reset();
        best_ = std::numeric_limits<int>::max();
        found_.reset();
        search_value();
        if (!found_) return std::nullopt;
        return best_;
    }

    // Lexicographically least witness of weight exactly target.
    std::optional<std::vector<std::uint8_t>> least_witness(int target) {
        reset();
        target_ = target;
        found_.reset();
        search_least(0);
        return found_;
    }

    const std::optional<std::vector<std::uint8_t>>& incumbent() const { return found_; }

private:
    void reset() {
        val_.assign(n_, -1);
        unassigned_ = full_;
        one_ = two_ = 0;
        weight_ = 0;
    }

    int weight_of(std::uint8_t x) const { return rainbow_ ? std::popcount(x) : x; }

    void assign(int v, std::uint8_t x) {
        val_[v] = x;
        unassigned_ &= ~bit(v);
        if (x & 1) one_ |= bit(v);
        if (x & 2) two_ |= bit(v);
        weight_ += weight_of(x);
    }

    void unassign(int v) {
        weight_ -= weight_of(static_cast<std::uint8_t>(val_[v]));
        val_[v] = -1;
        unassigned_ |= bit(v);
        one_ &= ~bit(v);
        two_ &= ~bit(v);
    }

    Status status(int v) const {
        const bool assigned = val_[v] >= 0;
        const Mask hood = pi_.hood == Hood::Closed ? closed_[v] : open_[v];
        const Mask sup = (pi_.hood == Hood::Open ? open_[v] : closed_[v]) & unassigned_;
        if (pi_.hood == Hood::Outer && assigned && val_[v] != 0) return {0, 0};
        if (pi_.rule == Rule::Roman) {
            if (open_[v] & two_) return {0, 0};
            if (!assigned) return {1, sup};
            return {(open_[v] & unassigned_) ? 2 : -1, sup};
        }
        int missing;
        if (rainbow_) {
            int have = ((hood & one_) ? 1 : 0) | ((hood & two_) ? 2 : 0);
            missing = std::popcount(static_cast<unsigned>(3 & ~have));
        } else {
            missing = std::max(0, pi_.demand - pc(hood & one_) - 2 * pc(hood & two_));
        }
        if (missing == 0) return {0, 0};
        if (pi_.hood == Hood::Outer && !assigned) return {1, sup};
        int free = pc(hood & unassigned_);
        bool possible = rainbow_ ? (single_ ? free >= missing : free >= 1) : free * unit_ >= missing;
        return {possible ? missing : -1, sup};
    }

    struct Eval {
        bool violated = false;
        int bound = 0;
        int pick = -1;       // unsatisfied vertex with fewest suppliers
        Mask pick_sup = 0;
        std::array<int, 64> supply{};
    };

    void evaluate(Eval& e) const {
        int total = 0, packed = 0;
        Mask used = 0;
        std::array<std::pair<int, int>, 64> order;
        std::array<Status, 64> st;
        int k = 0;
        for (int v = 0; v < n_; ++v) {
            st[v] = status(v);
            if (st[v].cost < 0) {
                e.violated = true;
                return;
            }
            if (st[v].cost == 0) continue;
            total += st[v].cost;
            order[k++] = {pc(st[v].suppliers) * 4 - st[v].cost, v};
            for (Mask s = st[v].suppliers; s; s &= s - 1) ++e.supply[std::countr_zero(s)];
        }
        if (k == 0) return;
        std::sort(order.begin(), order.begin() + k);
        for (int i = 0; i < k; ++i) {
            int v = order[i].second;
            if ((st[v].suppliers & used) == 0) {
                used |= st[v].suppliers;
                packed += st[v].cost;
            }
        }
        int most = 1;
        for (int u = 0; u < n_; ++u) most = std::max(most, e.supply[u]);
        e.bound = std::max(packed, (total + most - 1) / most);
        e.pick = order[0].second;
        e.pick_sup = st[e.pick].suppliers;
    }

    void tick() {
        if (++nodes_ <= budget_) return;
        std::optional<Witness> inc;
        if (found_) inc = Witness{kind_for(p_), *found_};
        throw BudgetExhausted(nodes_, inc);
    }

    std::vector<std::uint8_t> completed() const {
        std::vector<std::uint8_t> w(n_, 0);
        for (int v = 0; v < n_; ++v)
            if (val_[v] > 0) w[v] = static_cast<std::uint8_t>(val_[v]);
        return w;
    }

    void search_value() {
        tick();
        Eval e;
        evaluate(e);
        if (e.violated || weight_ + e.bound >= best_) return;
        if (e.pick < 0) {
            best_ = weight_;
            found_ = completed();
            return;
        }
        int u = -1;
        for (Mask s = e.pick_sup; s; s &= s - 1) {
            int c = std::countr_zero(s);
            if (u < 0 || e.supply[c] > e.supply[u]) u = c;
        }
        bool fresh = rainbow_ && one_ == 0 && two_ == 0;
        for (int i = static_cast<int>(values_.size()) - 1; i >= 0; --i) {
            std::uint8_t x = values_[i];
            if (fresh && x == kB) continue;  // a and b are interchangeable
            assign(u, x);
            search_value();
            unassign(u);
        }
    }

    bool search_least(int v) {
        tick();
        Eval e;
        evaluate(e);
        if (e.violated || weight_ + e.bound > target_) return false;
        if (e.pick < 0) {
            found_ = completed();
            return true;
        }
        if (v >= n_) return false;
        for (std::uint8_t x : values_) {
            if (weight_ + weight_of(x) > target_) break;
            assign(v, x);
            bool ok = search_least(v + 1);
            unassign(v);
            if (ok) return true;
        }
        return false;
    }

    Param p_;
    const ParamInfo& pi_;
    int n_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::vector<Mask> open_, closed_;
    Mask full_ = 0;
    int unit_ = 1;
    bool rainbow_ = false, single_ = false;
    std::vector<std::uint8_t> values_;

    std::vector<int> val_;
    Mask unassigned_ = 0, one_ = 0, two_ = 0;
    int weight_ = 0;
    int best_ = 0, target_ = 0;
    std::optional<std::vector<std::uint8_t>> found_;
};

Solution solve_components(Param p, const Graph& g, std::uint64_t budget) {
    std::uint64_t nodes = 0;
    std::vector<std::uint8_t> witness(g.n(), 0);
    long long total = 0;
    for (const auto& comp : components(g)) {
        if (comp.size() > 64)
            throw Error(ErrorCode::GraphTooLarge, "exact search handles components of at most 64 vertices");
        Graph h = induced(g, comp);
        VertexSearch search(p, h, nodes, budget);
        std::optional<int> opt;
        try {
            opt = search.optimum();
        } catch (BudgetExhausted& ex) {
            if (g.n() == h.n()) throw;
            throw BudgetExhausted(nodes, std::nullopt);
        }
        if (!opt) return Solution{};
        auto least = search.least_witness(*opt);
        if (!least) throw Error(ErrorCode::InvalidInstance, "internal: optimum without witness");
        for (std::size_t i = 0; i < comp.size(); ++i) witness[comp[i]] = (*least)[i];
        total += *opt;
    }
    return Solution{Value::finite_value(total), Witness{kind_for(p), witness}};
}

Solution doubled(Param base, const Graph& g, std::uint64_t budget) {
    Solution s = solve(base, g, budget);
    if (!s.value.finite()) return s;
    std::vector<std::uint8_t> labels(g.n(), kEmpty);
    for (int v = 0; v < g.n(); ++v)
        if (s.witness->values[v]) labels[v] = kAB;
    return Solution{Value::finite_value(2 * s.value.get()), make_rainbow(labels)};
}

// Iterative deepening over the target weight; items are taken in index order
// with ascending values, so the first hit is the least optimum.
class CoverSearch {
public:
    CoverSearch(std::vector<std::vector<int>> constraint_items, int items, int demand, int top,
                std::uint64_t& nodes, std::uint64_t budget)
        : cons_(std::move(constraint_items)), items_(items), demand_(demand), top_(top),
          nodes_(nodes), budget_(budget) {
        of_item_.resize(items_);
        for (int c = 0; c < static_cast<int>(cons_.size()); ++c)
            for (int i : cons_[c]) of_item_[i].push_back(c);
        for (const auto& oc : of_item_) spread_ = std::max<int>(spread_, oc.size());
        spread_ = std::max(spread_, 1);
    }

    std::optional<std::vector<std::uint8_t>> run() {
        int start = lower_bound_at_root();
        int ceiling = top_ * items_;
        for (int target = start; target <= ceiling; ++target) {
            sum_.assign(cons_.size(), 0);
            free_.assign(cons_.size(), 0);
            for (int c = 0; c < static_cast<int>(cons_.size()); ++c) free_[c] = cons_[c].size();
            val_.assign(items_, 0);
            weight_ = 0;
            target_ = target;
            if (dfs(0)) return val_;
        }
        return std::nullopt;
    }

private:
    int lower_bound_at_root() {
        sum_.assign(cons_.size(), 0);
        free_.assign(cons_.size(), 0);
        for (int c = 0; c < static_cast<int>(cons_.size()); ++c) free_[c] = cons_[c].size();
        return bound();
    }

    int bound() const {
        int total = 0;
        for (std::size_t c = 0; c < cons_.size(); ++c) total += std::max(0, demand_ - sum_[c]);
        return (total + spread_ - 1) / spread_;
    }

    bool dfs(int i) {
        if (++nodes_ > budget_) throw BudgetExhausted(nodes_, std::nullopt);
        for (std::size_t c = 0; c < cons_.size(); ++c)
            if (sum_[c] + free_[c] * top_ < demand_) return false;
        if (weight_ + bound() > target_) return false;
        if (i == items_) return weight_ == target_;
        for (int x = 0; x <= top_; ++x) {
            if (weight_ + x > target_) break;
            val_[i] = static_cast<std::uint8_t>(x);
            weight_ += x;
            for (int c : of_item_[i]) {
                sum_[c] += x;
                --free_[c];
            }
            bool ok = dfs(i + 1);
            for (int c : of_item_[i]) {
                sum_[c] -= x;
                ++free_[c];
            }
            weight_ -= x;
            if (ok) return true;
            val_[i] = 0;
        }
        return false;
    }

    std::vector<std::vector<int>> cons_;
    std::vector<std::vector<int>> of_item_;
    int items_, demand_, top_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    int spread_ = 1;
    std::vector<int> sum_, free_;
    std::vector<std::uint8_t> val_;
    int weight_ = 0, target_ = 0;
};

}  // namespace

Solution solve(Param p, const Graph& g, std::uint64_t budget) {
    switch (p) {
        case Param::Rho:
        case Param::Rho2:
        case Param::Tau2:
            return solve_cover(p, g, budget);
        case Param::GammaGamma:
        case Param::GammaTGammaT:
            return solve_disjoint(p, g);
        case Param::RGammaSet2:
            return doubled(Param::Gamma, g, budget);
        case Param::RGammaTSet2:
            if (!defined_on(p, g)) return Solution{};
            return doubled(Param::GammaT, g, budget);
        case Param::RGammaTX2:
            if (g.n() > 0 && g.min_degree() < 2) return Solution{};
            for (const auto& comp : components(g))
                if (comp.size() <= 20 && !splits_into_two_total_dominating_sets(induced(g, comp)))
                    return Solution{};
            return solve_components(p, g, budget);
        default:
            if (!defined_on(p, g)) return Solution{};
            return solve_components(p, g, budget);
    }
}

Solution solve_cover(Param p, const MultiGraph& g, std::uint64_t budget) {
    if (!is_cover(p))
        throw Error(ErrorCode::UndefinedParameter, std::string(info(p).name) + " is not a cover parameter");
    std::uint64_t nodes = 0;
    const auto& es = g.edges();
    std::vector<std::vector<int>> cons;
    int items;
    if (p == Param::Tau2) {
        items = g.n();
        for (auto [u, v] : es) cons.push_back({u, v});
    } else {
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) == 0)
                throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
        items = static_cast<int>(es.size());
        cons.assign(g.n(), {});
        for (int i = 0; i < items; ++i) {
            cons[es[i].first].push_back(i);
            cons[es[i].second].push_back(i);
        }
    }
    CoverSearch search(cons, items, info(p).demand, max_unit(p), nodes, budget);
    auto w = search.run();
    if (!w) return Solution{};
    Witness out{kind_for(p), *w};
    return Solution{Value::finite_value(witness_weight(out)), out};
}

Solution solve_cover(Param p, const Graph& g, std::uint64_t budget) {
    return solve_cover(p, as_multigraph(g), budget);
}

Solution solve_disjoint(Param p, const Graph& g) {
    if (p != Param::GammaGamma && p != Param::GammaTGammaT)
        throw Error(ErrorCode::UndefinedParameter, std::string(info(p).name) + " is not a disjoint-pair parameter");
    const int n = g.n();
    if (n > 20) throw Error(ErrorCode::GraphTooLarge, "disjoint-pair search limited to n <= 20");
    if (n == 0) return Solution{Value::finite_value(0), make_rainbow({})};
    const bool closed = p == Param::GammaGamma;
    std::vector<std::uint32_t> hood(n);
    for (int v = 0; v < n; ++v) {
        hood[v] = closed ? (1u << v) : 0u;
        for (int u : g.neighbors(v)) hood[v] |= 1u << u;
    }
    auto dominates = [&](std::uint32_t s) {
        for (int v = 0; v < n; ++v)
            if (!(hood[v] & s)) return false;
        return true;
    };
    // Ternary counting in lexicographic order: vertex 0 is the most significant digit.
    std::vector<std::uint8_t> label(n, 0), best;
    int best_size = std::numeric_limits<int>::max();
    std::uint32_t a = 0, b = 0;
    auto rec = [&](auto&& self, int v, int size) -> void {
        if (size >= best_size) return;
        if (v == n) {
            if (a && b && std::countr_zero(a) < std::countr_zero(b) && dominates(a) && dominates(b)) {
                best_size = size;
                best = label;
            }
            return;
        }
        for (std::uint8_t x = 0; x < 3; ++x) {
            if (x == 2 && a == 0) continue;  // the least element goes to A
            label[v] = x;
            if (x == 1) a |= 1u << v;
            if (x == 2) b |= 1u << v;
            self(self, v + 1, size + (x != 0));
            a &= ~(1u << v);
            b &= ~(1u << v);
        }
        label[v] = 0;
    };
    rec(rec, 0, 0);
    if (best.empty()) return Solution{};
    return Solution{Value::finite_value(best_size), make_rainbow(best)};
}

}  // namespace dominion
