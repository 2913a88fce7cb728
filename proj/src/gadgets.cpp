#include "ccount/gadgets.hpp"

#include "ccount/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace ccount {

int bits_for(std::uint64_t value) {
    int n = 0;
    while ((n < 64 ? (std::uint64_t{1} << n) : 0) < value)
        ++n;
    return n;
}

namespace {

void check_k_range(int n, std::uint64_t k, const char* who) {
    if (n < 0 || n > 62)
        throw RangeError(std::string(who) + ": width out of supported range");
    if (k > (std::uint64_t{1} << n))
        throw RangeError(std::string(who) + ": k = " + std::to_string(k) +
                         " exceeds 2^" + std::to_string(n));
}

} // namespace

Circuit lt_const(int n, std::uint64_t k) {
    check_k_range(n, k, "lt_const");
    CircuitBuilder b(n);
    if (k == (n < 64 ? (std::uint64_t{1} << n) : 0))
        return std::move(b).build({b.constant(true)});

    // x < k unfolds digit by digit from the LSB:
    //   acc_i = (not x_i) or acc_{i-1}   when bit i of k is 1
    //   acc_i = (not x_i) and acc_{i-1}  when bit i of k is 0
    GateRef acc = b.constant(false);
    for (int i = 0; i < n; ++i) {
        GateRef nx = b.make_not(b.input(i));
        acc = ((k >> i) & 1u) ? b.make_or(nx, acc) : b.make_and(nx, acc);
    }
    return std::move(b).build({acc});
}

Circuit h_gadget(int n, std::uint64_t k) {
    check_k_range(n, k, "h_gadget");
    CircuitBuilder b(n);
    if (k == (n < 64 ? (std::uint64_t{1} << n) : 0))
        return std::move(b).build({b.constant(true)});

    GateRef acc = b.constant(false);
    for (int i = 0; i < n; ++i) {
        GateRef x = b.input(i);
        acc = ((k >> i) & 1u) ? b.make_or(x, acc) : b.make_and(x, acc);
    }
    return std::move(b).build({acc});
}

Circuit interval(int n, std::uint64_t lo, std::uint64_t hi_excl) {
    if (lo > hi_excl)
        throw RangeError("interval: inverted bounds");
    check_k_range(n, hi_excl, "interval");
    // lo <= x < hi  ==  not(x < lo) and (x < hi)
    return and_(not_(lt_const(n, lo)), lt_const(n, hi_excl));
}

Circuit eq_const(int n, std::uint64_t k) {
    if (n > 62 || k >= (std::uint64_t{1} << n))
        throw RangeError("eq_const: k out of range");
    return interval(n, k, k + 1);
}

Circuit scale_count(const Circuit& phi, std::uint64_t k, int n) {
    if (phi.n_outputs() != 1)
        throw ArityError("scale_count: phi must be a 1-output predicate");
    check_k_range(n, k, "scale_count");
    Circuit h = h_gadget(n, k);
    CircuitBuilder b(phi.n_inputs() + n);
    std::vector<GateRef> xs, ys;
    for (int i = 0; i < phi.n_inputs(); ++i)
        xs.push_back(b.input(i));
    for (int i = 0; i < n; ++i)
        ys.push_back(b.input(phi.n_inputs() + i));
    GateRef p = b.splice(phi, xs)[0];
    GateRef hh = b.splice(h, ys)[0];
    return std::move(b).build({b.make_and(p, hh)});
}

ConditionedCoin rational_coin(std::uint64_t k, std::uint64_t m) {
    if (m < 1)
        throw RangeError("rational_coin: denominator must be positive");
    if (k > m)
        throw RangeError("rational_coin: bias " + std::to_string(k) + "/" +
                         std::to_string(m) + " exceeds 1");
    int n = bits_for(m);
    return {lt_const(n, k), lt_const(n, m),
            make_rational(BigInt(static_cast<unsigned long>(k)),
                          BigInt(static_cast<unsigned long>(m)))};
}

OneHotDistribution one_hot_distribution(const std::vector<std::uint64_t>& weights,
                                        std::uint64_t m) {
    if (weights.empty())
        throw RangeError("one_hot_distribution: no outcomes");
    std::uint64_t sum = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
    if (m < 1 || sum != m)
        throw RangeError("one_hot_distribution: weights sum to " + std::to_string(sum) +
                         ", expected " + std::to_string(m));
    int n = bits_for(m);

    CircuitBuilder b(n);
    std::vector<GateRef> xs;
    for (int i = 0; i < n; ++i)
        xs.push_back(b.input(i));
    std::vector<GateRef> outs;
    std::uint64_t base = 0;
    for (std::uint64_t a : weights) {
        outs.push_back(b.splice(interval(n, base, base + a), xs)[0]);
        base += a;
    }
    Circuit f = std::move(b).build(std::move(outs));
    return {std::move(f), lt_const(n, m), weights, m};
}

bool BinaryExpansion::digit(int j) const {
    if (j < 1)
        throw RangeError("expansion digits start at depth 1");
    std::size_t idx = static_cast<std::size_t>(j - 1);
    if (idx < preperiod.size())
        return preperiod[idx];
    if (period.empty())
        return false;
    return period[(idx - preperiod.size()) % period.size()];
}

BinaryExpansion binary_expansion(std::uint64_t a, std::uint64_t m) {
    if (m < 1)
        throw RangeError("binary_expansion: denominator must be positive");
    if (a > m)
        throw RangeError("binary_expansion: fraction exceeds 1");

    BinaryExpansion e;
    std::uint64_t r = a % m;
    std::map<std::uint64_t, std::size_t> seen;  // remainder -> digit position
    std::vector<bool> digits;
    while (r != 0) {
        auto it = seen.find(r);
        if (it != seen.end()) {
            e.preperiod.assign(digits.begin(), digits.begin() + it->second);
            e.period.assign(digits.begin() + it->second, digits.end());
            return e;
        }
        seen.emplace(r, digits.size());
        r *= 2;
        digits.push_back(r >= m);
        if (r >= m)
            r -= m;
    }
    e.preperiod = std::move(digits);
    return e;
}

int ParseTree::n_internal() const {
    int c = 0;
    for (const Node& n : nodes)
        if (!n.is_leaf)
            ++c;
    return c;
}

ParseTree knuth_yao_tree(const std::vector<std::uint64_t>& weights, std::uint64_t m) {
    if (weights.empty())
        throw RangeError("knuth_yao_tree: no outcomes");
    std::uint64_t sum = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
    if (m < 1 || sum != m)
        throw RangeError("knuth_yao_tree: weights sum to " + std::to_string(sum) +
                         ", expected " + std::to_string(m));
    const int ny = static_cast<int>(weights.size());

    ParseTree tree;
    tree.n_outcomes = ny;

    // Probability-1 outcome: the whole tree is one leaf at depth 0.
    for (int i = 0; i < ny; ++i) {
        if (weights[i] == m) {
            tree.nodes.push_back({true, i, -1, -1, 0});
            return tree;
        }
    }

    // The residual distribution below any open node is captured by the
    // long-division remainders r_i = a_i * 2^d mod m together with the
    // node's position j among the depth's open nodes (leaves take the
    // leftmost child slots, in ascending outcome order). Equal (r, j)
    // means an isomorphic subtree, closed with a back edge.
    using State = std::pair<std::vector<std::uint64_t>, int>;
    std::map<State, int> known;

    std::vector<std::uint64_t> r(weights.begin(), weights.end());
    tree.nodes.push_back({false, -1, -1, -1, 0});
    known.emplace(State{r, 0}, 0);
    std::vector<int> open{0};  // node ids, left to right

    int depth = 0;
    while (!open.empty()) {
        ++depth;
        std::vector<std::uint64_t> r_next(r.size());
        std::vector<int> leaf_outcomes;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t d = r[i] * 2;
            if (d >= m) {
                leaf_outcomes.push_back(static_cast<int>(i));
                d -= m;
            }
            r_next[i] = d;
        }
        const int n_leaves = static_cast<int>(leaf_outcomes.size());

        std::vector<int> next_open;
        for (std::size_t j = 0; j < open.size(); ++j) {
            for (int side = 0; side < 2; ++side) {
                int slot = static_cast<int>(2 * j) + side;
                int child;
                if (slot < n_leaves) {
                    child = static_cast<int>(tree.nodes.size());
                    tree.nodes.push_back({true, leaf_outcomes[slot], -1, -1, depth});
                } else {
                    State st{r_next, slot - n_leaves};
                    auto it = known.find(st);
                    if (it != known.end()) {
                        child = it->second;  // back edge
                    } else {
                        child = static_cast<int>(tree.nodes.size());
                        tree.nodes.push_back({false, -1, -1, -1, depth});
                        known.emplace(std::move(st), child);
                        next_open.push_back(child);
                    }
                }
                if (side == 0)
                    tree.nodes[open[j]].left = child;
                else
                    tree.nodes[open[j]].right = child;
            }
        }
        open = std::move(next_open);
        r = std::move(r_next);
    }
    return tree;
}

std::pair<SeqCircuit, SeqCircuit> knuth_yao(const std::vector<std::uint64_t>& weights,
                                            std::uint64_t m) {
    ParseTree tree = knuth_yao_tree(weights, m);
    const int ny = tree.n_outcomes;

    // Walk states = internal nodes; then |Y| absorbing decision flags.
    std::vector<int> state_of(tree.nodes.size(), -1);
    int n_walk = 0;
    for (std::size_t i = 0; i < tree.nodes.size(); ++i)
        if (!tree.nodes[i].is_leaf)
            state_of[i] = n_walk++;
    const int width = n_walk + ny;

    auto build_transition = [&](bool undecided_output) {
        CircuitBuilder b(width + 1);
        std::vector<GateRef> st;
        for (int i = 0; i < width; ++i)
            st.push_back(b.input(i));
        GateRef flip = b.input(width);
        GateRef down = b.make_not(flip);  // flip 0 follows the left branch

        // incoming[v] collects (source state AND branch literal) terms.
        std::vector<std::vector<GateRef>> walk_in(n_walk), decide_in(ny);
        for (std::size_t u = 0; u < tree.nodes.size(); ++u) {
            const auto& node = tree.nodes[u];
            if (node.is_leaf)
                continue;
            GateRef here = st[state_of[u]];
            const int children[2] = {node.left, node.right};
            const GateRef lits[2] = {down, flip};
            for (int sside = 0; sside < 2; ++sside) {
                GateRef move = b.make_and(here, lits[sside]);
                const auto& child = tree.nodes[children[sside]];
                if (child.is_leaf)
                    decide_in[child.outcome].push_back(move);
                else
                    walk_in[state_of[children[sside]]].push_back(move);
            }
        }

        std::vector<GateRef> next(width);
        for (int v = 0; v < n_walk; ++v)
            next[v] = b.make_or(walk_in[v]);
        for (int i = 0; i < ny; ++i) {
            GateRef arrived = b.make_or(decide_in[i]);
            next[n_walk + i] = b.make_or(st[n_walk + i], arrived);
        }

        std::vector<GateRef> outs = next;
        if (undecided_output) {
            std::vector<GateRef> decided(next.begin() + n_walk, next.end());
            outs.push_back(b.make_not(b.make_or(decided)));
        } else {
            outs.insert(outs.end(), next.begin() + n_walk, next.end());
        }
        return std::move(b).build(std::move(outs));
    };

    BitVec s0 = BitVec::zeros(width);
    if (tree.nodes[0].is_leaf)
        s0.set(n_walk + tree.nodes[0].outcome, true);
    else
        s0.set(state_of[0], true);

    SeqCircuit sampler(s0, build_transition(false), ny);
    SeqCircuit undecided(s0, build_transition(true), 1);
    return {std::move(sampler), std::move(undecided)};
}

SeqCircuit binomial_counter(int n_trials) {
    if (n_trials < 1)
        throw RangeError("binomial_counter: need at least one trial");
    const int states = n_trials + 1;
    CircuitBuilder b(states + 1);
    std::vector<GateRef> st;
    for (int i = 0; i < states; ++i)
        st.push_back(b.input(i));
    GateRef trial = b.input(states);
    GateRef failv = b.make_not(trial);

    std::vector<GateRef> next(states);
    next[0] = b.make_and(st[0], failv);
    for (int j = 1; j < n_trials; ++j)
        next[j] = b.make_or(b.make_and(st[j], failv), b.make_and(st[j - 1], trial));
    next[n_trials] = b.make_or(st[n_trials], b.make_and(st[n_trials - 1], trial));

    std::vector<GateRef> outs = next;
    outs.insert(outs.end(), next.begin(), next.end());
    Circuit f = std::move(b).build(std::move(outs));
    return SeqCircuit(BitVec::one_hot(states, 0), std::move(f), states);
}

std::pair<Circuit, Circuit> binomial_rational(int n_trials, std::uint64_t k,
                                              std::uint64_t m) {
    ConditionedCoin coin = rational_coin(k, m);
    const int nc = coin.phi.n_inputs();
    Circuit counter = unroll(binomial_counter(n_trials), n_trials);

    CircuitBuilder b(n_trials * nc);
    std::vector<GateRef> trials, valids;
    for (int t = 0; t < n_trials; ++t) {
        std::vector<GateRef> block;
        for (int i = 0; i < nc; ++i)
            block.push_back(b.input(t * nc + i));
        trials.push_back(b.splice(coin.phi, block)[0]);
        valids.push_back(b.splice(coin.psi, block)[0]);
    }
    auto counts = b.splice(counter, trials);
    GateRef valid = b.make_and(valids);

    std::vector<GateRef> outs = counts;
    outs.push_back(valid);
    Circuit both = std::move(b).build(std::move(outs));

    auto select = [&](int from, int len) {
        CircuitBuilder sb(both.n_inputs());
        std::vector<GateRef> ins;
        for (int i = 0; i < both.n_inputs(); ++i)
            ins.push_back(sb.input(i));
        auto all = sb.splice(both, ins);
        std::vector<GateRef> picked(all.begin() + from, all.begin() + from + len);
        return std::move(sb).build(std::move(picked));
    };
    return {select(0, n_trials + 1), select(n_trials + 1, 1)};
}

} // namespace ccount
