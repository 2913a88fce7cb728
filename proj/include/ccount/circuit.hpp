#pragma once

#include "ccount/bitvec.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ccount {

enum class GateOp : std::uint8_t { Input, Const, Not, And, Or, Xor };

/// One node of the gate DAG. Operand meaning depends on op:
///   Input: a = input index        Const: a = 0 or 1
///   Not:   a = operand gate       And/Or/Xor: a, b = operand gates
struct Gate {
    GateOp op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
};

using GateRef = std::uint32_t;

/// Immutable combinational circuit {0,1}^n -> {0,1}^m. Gates are stored in
/// topological order: every operand reference points to an earlier gate,
/// which makes well-formedness checkable in one pass and is the invariant
/// the CCIR text format mirrors. Construction goes through CircuitBuilder,
/// so an invalid Circuit value cannot exist.
class Circuit {
public:
    int n_inputs() const { return n_inputs_; }
    int n_outputs() const { return static_cast<int>(outputs_.size()); }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<GateRef>& outputs() const { return outputs_; }

    /// Pure evaluation; x.width() must equal n_inputs().
    BitVec evaluate(const BitVec& x) const;

private:
    friend class CircuitBuilder;
    Circuit() = default;

    int n_inputs_ = 0;
    std::vector<Gate> gates_;
    std::vector<GateRef> outputs_;
};

/// Append-only netlist under construction. Every factory method validates
/// its operands, so the final build() is structurally sound by construction.
class CircuitBuilder {
public:
    explicit CircuitBuilder(int n_inputs);

    int n_inputs() const { return n_inputs_; }
    std::size_t size() const { return gates_.size(); }

    GateRef input(int i);
    GateRef constant(bool b);
    GateRef make_not(GateRef a);
    GateRef make_and(GateRef a, GateRef b);
    GateRef make_or(GateRef a, GateRef b);
    GateRef make_xor(GateRef a, GateRef b);
    /// a <-> b, i.e. not(xor).
    GateRef make_eq(GateRef a, GateRef b);

    /// Conjunction/disjunction over any number of refs (empty -> const).
    GateRef make_and(std::span<const GateRef> refs);
    GateRef make_or(std::span<const GateRef> refs);

    /// Inlines `sub` with its Input(i) gates rewired to inputs[i];
    /// returns sub's output refs in this builder's id space.
    std::vector<GateRef> splice(const Circuit& sub, std::span<const GateRef> inputs);

    Circuit build(std::vector<GateRef> outputs) &&;

private:
    GateRef push(Gate g);
    void check_ref(GateRef r) const;

    int n_inputs_;
    std::vector<Gate> gates_;
    std::vector<GateRef> input_cache_;
};

// Basic constructions.
Circuit identity_circuit(int n);
Circuit constant_circuit(const BitVec& bits);

// Structural combinators. All are pure; operands are never mutated.

/// Disjoint inputs (a's first), outputs a's then b's.
Circuit concat(const Circuit& a, const Circuit& b);

/// Shared inputs, outputs a's then b's: x -> (a(x), b(x)). This is the
/// correlated-coins product; requires a.n_inputs == b.n_inputs.
Circuit product_shared(const Circuit& a, const Circuit& b);

/// outer(inner(x)); requires inner.n_outputs == outer.n_inputs.
Circuit compose(const Circuit& outer, const Circuit& inner);

/// Keep a single output bit of a multi-output circuit.
Circuit project_output(const Circuit& c, int i);

// Pointwise logic on 1-output predicates over the same input space.
Circuit and_(const Circuit& a, const Circuit& b);
Circuit or_(const Circuit& a, const Circuit& b);
Circuit xor_(const Circuit& a, const Circuit& b);
Circuit not_(const Circuit& a);

} // namespace ccount
