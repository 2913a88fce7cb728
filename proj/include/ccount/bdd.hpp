#pragma once

#include "ccount/circuit.hpp"
#include "ccount/errors.hpp"
#include "ccount/rational.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ccount {

/// Reduced ordered BDD with variable order = circuit input index order
/// (no reordering). Nodes live in one arena; ids 0/1 are the terminals.
class Bdd {
public:
    using Ref = std::uint32_t;
    static constexpr Ref kFalse = 0;
    static constexpr Ref kTrue = 1;

    explicit Bdd(int n_vars, std::size_t node_cap = 10'000'000);

    Ref var(int i);
    Ref apply_and(Ref a, Ref b);
    Ref apply_or(Ref a, Ref b);
    Ref apply_xor(Ref a, Ref b);
    Ref negate(Ref a);

    /// Bottom-up build of a 1-output circuit; throws BackendLimitError at
    /// the node cap.
    Ref build(const Circuit& phi);

    /// Number of models over the full 2^n_vars input space.
    BigInt count_models(Ref r) const;

    bool evaluate(Ref r, const BitVec& x) const;

    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        std::uint32_t level;  // n_vars_ on terminals
        Ref lo, hi;
    };

    Ref make_node(std::uint32_t level, Ref lo, Ref hi);
    Ref apply(int op, Ref a, Ref b);
    std::uint32_t level(Ref r) const { return nodes_[r].level; }

    int n_vars_;
    std::size_t node_cap_;
    std::vector<Node> nodes_;
    std::unordered_map<std::uint64_t, Ref> unique_;
    std::unordered_map<std::uint64_t, Ref> cache_;
};

} // namespace ccount
