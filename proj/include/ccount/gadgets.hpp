#pragma once

#include "ccount/circuit.hpp"
#include "ccount/rational.hpp"
#include "ccount/seq.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ccount {

/// Smallest n with value <= 2^n.
int bits_for(std::uint64_t value);

/// 1-output circuit over n inputs, true iff unsigned(x) < k. Exactly k
/// models. k = 2^n (tautology) is allowed so conditioning predicates for
/// m = 2^n need no special path.
Circuit lt_const(int n, std::uint64_t k);

/// True iff lo <= unsigned(x) < hi_excl; count = hi_excl - lo.
Circuit interval(int n, std::uint64_t lo, std::uint64_t hi_excl);

/// True iff unsigned(x) == k.
Circuit eq_const(int n, std::uint64_t k);

/// The and/or digit recurrence over the base-2 digits of k; exactly k
/// models. On bitwise-negated inputs it computes lt_const(n, k).
Circuit h_gadget(int n, std::uint64_t k);

/// phi's inputs plus n fresh ones; model count becomes k * #(phi).
Circuit scale_count(const Circuit& phi, std::uint64_t k, int n);

/// A probability realized as a pair of predicates over shared coins:
/// Pr = #(phi) / #(psi), with phi implying psi by construction.
struct ConditionedCoin {
    Circuit phi;
    Circuit psi;
    Rational claimed_prob;
};

/// Coin with exact bias k/m: phi = lt_const(n,k), psi = lt_const(n,m),
/// n minimal with m <= 2^n. Requires 0 <= k <= m, m >= 1.
ConditionedCoin rational_coin(std::uint64_t k, std::uint64_t m);

/// 1-hot encoded distribution over |weights| outcomes with masses a_i/m:
/// output i is the interval [b_i, b_i + a_i), psi = lt_const(n, m).
struct OneHotDistribution {
    Circuit f;    // n inputs, |weights| outputs
    Circuit psi;  // n inputs, 1 output
    std::vector<std::uint64_t> weights;
    std::uint64_t denom = 0;
};

OneHotDistribution one_hot_distribution(const std::vector<std::uint64_t>& weights,
                                        std::uint64_t m);

/// Eventually-periodic binary expansion of (a mod m)/m by long division;
/// first element of `preperiod` is the digit of weight 1/2. The cycle of
/// remainders fixes the period.
struct BinaryExpansion {
    std::vector<bool> preperiod;
    std::vector<bool> period;

    /// Digit at depth j >= 1.
    bool digit(int j) const;
};

BinaryExpansion binary_expansion(std::uint64_t a, std::uint64_t m);

/// Finite parse tree for sampling (a_i/m) with one coin flip per level.
/// Outcome i has a leaf at depth j iff digit j of a_i/m is 1; at each
/// depth leaves take the leftmost child slots in ascending outcome order.
/// A child reference to an earlier node is a back edge closing a
/// self-similar subtree. Flip 0 follows `left`.
struct ParseTree {
    struct Node {
        bool is_leaf = false;
        int outcome = -1;  // leaves only
        int left = -1;     // node ids; < own id on back edges
        int right = -1;
        int depth = 0;
    };

    std::vector<Node> nodes;  // nodes[0] is the root
    int n_outcomes = 0;

    int n_internal() const;
};

ParseTree knuth_yao_tree(const std::vector<std::uint64_t>& weights, std::uint64_t m);

/// Sampler for (a_i/m) consuming one coin bit per step: the depth-first
/// walk of the parse tree as a one-hot state machine. Outputs are the
/// |Y| decision flags (all-zero while undecided, absorbing one-hot after
/// a leaf is reached). The second element is the monitor whose output is
/// 1 while no decision has been reached yet; queries condition on its
/// negation at the chosen unrolling depth.
std::pair<SeqCircuit, SeqCircuit> knuth_yao(const std::vector<std::uint64_t>& weights,
                                            std::uint64_t m);

/// One-hot success counter over n_trials+1 states; s0 = one-hot at 0,
/// one trial bit per step shifts the state left, the top state saturates.
/// Outputs the full state vector.
SeqCircuit binomial_counter(int n_trials);

/// n_trials independent k/m coins on disjoint input blocks feeding the
/// unrolled counter. Returns the success-count circuit (n_trials+1 one-hot
/// outputs) and the validity predicate (conjunction of per-trial psi),
/// both over the same n_trials * n_coin_bits inputs.
std::pair<Circuit, Circuit> binomial_rational(int n_trials, std::uint64_t k,
                                              std::uint64_t m);

} // namespace ccount
