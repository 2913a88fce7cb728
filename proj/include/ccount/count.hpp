#pragma once

#include "ccount/circuit.hpp"
#include "ccount/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ccount {

enum class Backend { Auto, Exhaustive, Diagram };

struct CountLimits {
    int max_exhaustive_inputs = 24;
    std::size_t max_diagram_nodes = 10'000'000;
};

struct CountResult {
    BigInt count;
    int n_inputs = 0;
    Backend backend = Backend::Exhaustive;
};

/// Full enumeration, 64 assignments per word. Rejects circuits with more
/// than limits.max_exhaustive_inputs inputs.
CountResult count_exhaustive(const Circuit& phi, const CountLimits& limits = {});

/// Exact count via a reduced ordered BDD built bottom-up over the gate
/// DAG, variable order = input index order.
CountResult count_diagram(const Circuit& phi, const CountLimits& limits = {});

/// Backend dispatch; Auto = exhaustive when it fits, diagram otherwise.
CountResult count_models(const Circuit& phi, Backend backend = Backend::Auto,
                         const CountLimits& limits = {});

/// #(phi) / 2^n as a reduced rational.
Rational probability(const Circuit& phi, Backend backend = Backend::Auto,
                     const CountLimits& limits = {});

/// #(phi and psi) / #(psi); throws ImpossibleConditionError when #(psi)=0.
Rational conditional_probability(const Circuit& phi, const Circuit& psi,
                                 Backend backend = Backend::Auto,
                                 const CountLimits& limits = {});

/// Tseitin clause set with the circuit-input variables as projection set.
struct CnfInstance {
    int n_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<int> projection;  // ascending variable ids
};

/// Full (two-sided) Tseitin transformation: one variable per input and per
/// And/Or/Xor/Const gate, Not folded into literal negation, plus a unit
/// clause asserting the output. Every assignment of the projection
/// variables extends to exactly one full model, so the projected model
/// count equals #(phi).
CnfInstance to_cnf(const Circuit& phi);

/// DIMACS with `c ind ... 0` projection header lines (at most 10
/// variables per line); grammar is byte-exact, see docs/formats.md.
void export_dimacs(const CnfInstance& cnf, std::ostream& sink);

CnfInstance parse_dimacs(std::istream& source);

/// Count-result import: a single decimal integer line.
BigInt read_count_file(std::istream& source);

} // namespace ccount
