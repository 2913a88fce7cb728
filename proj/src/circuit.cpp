#include "ccount/circuit.hpp"

#include "ccount/errors.hpp"

#include <string>

namespace ccount {

BitVec Circuit::evaluate(const BitVec& x) const {
    if (x.width() != n_inputs_)
        throw ArityError("evaluate: expected " + std::to_string(n_inputs_) +
                         " input bits, got " + std::to_string(x.width()));
    std::vector<std::uint8_t> vals(gates_.size());
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        switch (g.op) {
            case GateOp::Input: vals[i] = x.bit(static_cast<int>(g.a)); break;
            case GateOp::Const: vals[i] = static_cast<std::uint8_t>(g.a); break;
            case GateOp::Not: vals[i] = vals[g.a] ^ 1u; break;
            case GateOp::And: vals[i] = vals[g.a] & vals[g.b]; break;
            case GateOp::Or: vals[i] = vals[g.a] | vals[g.b]; break;
            case GateOp::Xor: vals[i] = vals[g.a] ^ vals[g.b]; break;
        }
    }
    BitVec y = BitVec::zeros(n_outputs());
    for (int i = 0; i < n_outputs(); ++i)
        y.set(i, vals[outputs_[i]] != 0);
    return y;
}

CircuitBuilder::CircuitBuilder(int n_inputs) : n_inputs_(n_inputs) {
    if (n_inputs < 0)
        throw RangeError("negative input count");
    input_cache_.assign(n_inputs, UINT32_MAX);
}

GateRef CircuitBuilder::push(Gate g) {
    gates_.push_back(g);
    return static_cast<GateRef>(gates_.size() - 1);
}

void CircuitBuilder::check_ref(GateRef r) const {
    if (r >= gates_.size())
        throw ArityError("gate reference " + std::to_string(r) + " out of range");
}

GateRef CircuitBuilder::input(int i) {
    if (i < 0 || i >= n_inputs_)
        throw ArityError("input index " + std::to_string(i) + " out of range [0," +
                         std::to_string(n_inputs_) + ")");
    // One Input gate per index is enough; duplicates would be legal but noisy.
    if (input_cache_[i] == UINT32_MAX)
        input_cache_[i] = push({GateOp::Input, static_cast<std::uint32_t>(i), 0});
    return input_cache_[i];
}

GateRef CircuitBuilder::constant(bool b) {
    return push({GateOp::Const, b ? 1u : 0u, 0});
}

GateRef CircuitBuilder::make_not(GateRef a) {
    check_ref(a);
    return push({GateOp::Not, a, 0});
}

GateRef CircuitBuilder::make_and(GateRef a, GateRef b) {
    check_ref(a);
    check_ref(b);
    return push({GateOp::And, a, b});
}

GateRef CircuitBuilder::make_or(GateRef a, GateRef b) {
    check_ref(a);
    check_ref(b);
    return push({GateOp::Or, a, b});
}

GateRef CircuitBuilder::make_xor(GateRef a, GateRef b) {
    check_ref(a);
    check_ref(b);
    return push({GateOp::Xor, a, b});
}

GateRef CircuitBuilder::make_eq(GateRef a, GateRef b) {
    return make_not(make_xor(a, b));
}

GateRef CircuitBuilder::make_and(std::span<const GateRef> refs) {
    if (refs.empty())
        return constant(true);
    GateRef acc = refs[0];
    check_ref(acc);
    for (std::size_t i = 1; i < refs.size(); ++i)
        acc = make_and(acc, refs[i]);
    return acc;
}

GateRef CircuitBuilder::make_or(std::span<const GateRef> refs) {
    if (refs.empty())
        return constant(false);
    GateRef acc = refs[0];
    check_ref(acc);
    for (std::size_t i = 1; i < refs.size(); ++i)
        acc = make_or(acc, refs[i]);
    return acc;
}

std::vector<GateRef> CircuitBuilder::splice(const Circuit& sub,
                                            std::span<const GateRef> inputs) {
    if (static_cast<int>(inputs.size()) != sub.n_inputs())
        throw ArityError("splice: expected " + std::to_string(sub.n_inputs()) +
                         " input refs, got " + std::to_string(inputs.size()));
    for (GateRef r : inputs)
        check_ref(r);

    std::vector<GateRef> map(sub.gates().size());
    for (std::size_t i = 0; i < sub.gates().size(); ++i) {
        const Gate& g = sub.gates()[i];
        switch (g.op) {
            case GateOp::Input: map[i] = inputs[g.a]; break;
            case GateOp::Const: map[i] = constant(g.a != 0); break;
            case GateOp::Not: map[i] = make_not(map[g.a]); break;
            case GateOp::And: map[i] = make_and(map[g.a], map[g.b]); break;
            case GateOp::Or: map[i] = make_or(map[g.a], map[g.b]); break;
            case GateOp::Xor: map[i] = make_xor(map[g.a], map[g.b]); break;
        }
    }
    std::vector<GateRef> outs;
    outs.reserve(sub.outputs().size());
    for (GateRef o : sub.outputs())
        outs.push_back(map[o]);
    return outs;
}

Circuit CircuitBuilder::build(std::vector<GateRef> outputs) && {
    if (outputs.empty())
        throw ArityError("a circuit needs at least one output");
    for (GateRef r : outputs)
        check_ref(r);
    Circuit c;
    c.n_inputs_ = n_inputs_;
    c.gates_ = std::move(gates_);
    c.outputs_ = std::move(outputs);
    return c;
}

Circuit identity_circuit(int n) {
    CircuitBuilder b(n);
    std::vector<GateRef> outs;
    outs.reserve(n);
    for (int i = 0; i < n; ++i)
        outs.push_back(b.input(i));
    if (n == 0)
        throw RangeError("identity circuit needs at least one wire");
    return std::move(b).build(std::move(outs));
}

Circuit constant_circuit(const BitVec& bits) {
    CircuitBuilder b(0);
    std::vector<GateRef> outs;
    outs.reserve(bits.width());
    for (int i = 0; i < bits.width(); ++i)
        outs.push_back(b.constant(bits.bit(i)));
    return std::move(b).build(std::move(outs));
}

namespace {

std::vector<GateRef> input_range(CircuitBuilder& b, int from, int count) {
    std::vector<GateRef> refs;
    refs.reserve(count);
    for (int i = 0; i < count; ++i)
        refs.push_back(b.input(from + i));
    return refs;
}

void require_predicates(const Circuit& a, const Circuit& b, const char* op) {
    if (a.n_inputs() != b.n_inputs())
        throw ArityError(std::string(op) + ": operands read different input spaces (" +
                         std::to_string(a.n_inputs()) + " vs " +
                         std::to_string(b.n_inputs()) + " bits)");
    if (a.n_outputs() != 1 || b.n_outputs() != 1)
        throw ArityError(std::string(op) + ": operands must be 1-output predicates");
}

} // namespace

Circuit concat(const Circuit& a, const Circuit& b) {
    CircuitBuilder bld(a.n_inputs() + b.n_inputs());
    auto outs_a = bld.splice(a, input_range(bld, 0, a.n_inputs()));
    auto outs_b = bld.splice(b, input_range(bld, a.n_inputs(), b.n_inputs()));
    outs_a.insert(outs_a.end(), outs_b.begin(), outs_b.end());
    return std::move(bld).build(std::move(outs_a));
}

Circuit product_shared(const Circuit& a, const Circuit& b) {
    if (a.n_inputs() != b.n_inputs())
        throw ArityError("product_shared: operands read different input spaces");
    CircuitBuilder bld(a.n_inputs());
    auto shared = input_range(bld, 0, a.n_inputs());
    auto outs_a = bld.splice(a, shared);
    auto outs_b = bld.splice(b, shared);
    outs_a.insert(outs_a.end(), outs_b.begin(), outs_b.end());
    return std::move(bld).build(std::move(outs_a));
}

Circuit compose(const Circuit& outer, const Circuit& inner) {
    if (inner.n_outputs() != outer.n_inputs())
        throw ArityError("compose: inner produces " + std::to_string(inner.n_outputs()) +
                         " bits but outer consumes " + std::to_string(outer.n_inputs()));
    CircuitBuilder bld(inner.n_inputs());
    auto mid = bld.splice(inner, input_range(bld, 0, inner.n_inputs()));
    auto outs = bld.splice(outer, mid);
    return std::move(bld).build(std::move(outs));
}

Circuit project_output(const Circuit& c, int i) {
    if (i < 0 || i >= c.n_outputs())
        throw ArityError("project_output: index out of range");
    CircuitBuilder bld(c.n_inputs());
    auto outs = bld.splice(c, input_range(bld, 0, c.n_inputs()));
    return std::move(bld).build({outs[i]});
}

namespace {

Circuit pointwise(const Circuit& a, const Circuit& b, GateOp op, const char* name) {
    require_predicates(a, b, name);
    CircuitBuilder bld(a.n_inputs());
    auto shared = input_range(bld, 0, a.n_inputs());
    GateRef ra = bld.splice(a, shared)[0];
    GateRef rb = bld.splice(b, shared)[0];
    GateRef out = op == GateOp::And   ? bld.make_and(ra, rb)
                  : op == GateOp::Or  ? bld.make_or(ra, rb)
                                      : bld.make_xor(ra, rb);
    return std::move(bld).build({out});
}

} // namespace

Circuit and_(const Circuit& a, const Circuit& b) { return pointwise(a, b, GateOp::And, "and_"); }
Circuit or_(const Circuit& a, const Circuit& b) { return pointwise(a, b, GateOp::Or, "or_"); }
Circuit xor_(const Circuit& a, const Circuit& b) { return pointwise(a, b, GateOp::Xor, "xor_"); }

Circuit not_(const Circuit& a) {
    if (a.n_outputs() != 1)
        throw ArityError("not_: operand must be a 1-output predicate");
    CircuitBuilder bld(a.n_inputs());
    auto outs = bld.splice(a, input_range(bld, 0, a.n_inputs()));
    return std::move(bld).build({bld.make_not(outs[0])});
}

} // namespace ccount
