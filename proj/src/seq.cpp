#include "ccount/seq.hpp"

#include "ccount/errors.hpp"

#include <string>

namespace ccount {

SeqCircuit::SeqCircuit(BitVec s0, Circuit transition, int n_outputs)
    : s0_(std::move(s0)), transition_(std::move(transition)) {
    int p = s0_.width();
    if (n_outputs < 1)
        throw ArityError("sequential circuit needs at least one output");
    if (transition_.n_inputs() < p)
        throw ArityError("transition has fewer inputs than latches");
    if (transition_.n_outputs() != p + n_outputs)
        throw ArityError("transition must produce " + std::to_string(p + n_outputs) +
                         " bits (state + outputs), got " +
                         std::to_string(transition_.n_outputs()));
}

std::pair<BitVec, BitVec> SeqCircuit::step(const BitVec& s, const BitVec& a) const {
    if (s.width() != n_state())
        throw ArityError("step: state width mismatch");
    if (a.width() != n_inputs())
        throw ArityError("step: input width mismatch");
    BitVec both = transition_.evaluate(s.concat(a));
    return {both.slice(0, n_state()), both.slice(n_state(), n_outputs())};
}

std::vector<BitVec> SeqCircuit::simulate(std::span<const BitVec> inputs) const {
    std::vector<BitVec> outputs;
    outputs.reserve(inputs.size());
    BitVec s = s0_;
    for (const BitVec& a : inputs) {
        auto [next, y] = step(s, a);
        s = std::move(next);
        outputs.push_back(std::move(y));
    }
    return outputs;
}

Circuit unroll(const SeqCircuit& c, int tau) {
    if (tau < 1)
        throw RangeError("unroll: tau must be at least 1 (no output exists at tau=0)");
    const int p = c.n_state();
    const int n = c.n_inputs();

    CircuitBuilder b(tau * n);

    // s0 grounded as constants; no simplification beyond that.
    std::vector<GateRef> state;
    state.reserve(p);
    for (int i = 0; i < p; ++i)
        state.push_back(b.constant(c.s0().bit(i)));

    std::vector<GateRef> last_outputs;
    for (int t = 0; t < tau; ++t) {
        std::vector<GateRef> args = state;
        for (int i = 0; i < n; ++i)
            args.push_back(b.input(t * n + i));
        auto outs = b.splice(c.transition(), args);
        state.assign(outs.begin(), outs.begin() + p);
        last_outputs.assign(outs.begin() + p, outs.end());
    }
    return std::move(b).build(std::move(last_outputs));
}

SeqCircuit monitor_always(const Circuit& pred) {
    if (pred.n_outputs() != 1)
        throw ArityError("monitor_always: predicate must have exactly one output");
    const int n = pred.n_inputs();
    CircuitBuilder b(1 + n);
    GateRef prev = b.input(0);
    std::vector<GateRef> step_inputs;
    for (int i = 0; i < n; ++i)
        step_inputs.push_back(b.input(1 + i));
    GateRef holds = b.splice(pred, step_inputs)[0];
    GateRef verdict = b.make_and(prev, holds);
    Circuit f = std::move(b).build({verdict, verdict});
    return SeqCircuit(BitVec::ones(1), std::move(f), 1);
}

SeqCircuit monitor_count_visits(const Circuit& pred, int threshold, bool initial_visit) {
    if (pred.n_outputs() != 1)
        throw ArityError("monitor_count_visits: predicate must have exactly one output");
    if (threshold < 1)
        throw RangeError("monitor_count_visits: threshold 0 is degenerate (always true)");
    const int n = pred.n_inputs();
    const int states = threshold + 1;  // counts 0..threshold, top absorbs

    CircuitBuilder b(states + n);
    std::vector<GateRef> cnt;
    for (int j = 0; j < states; ++j)
        cnt.push_back(b.input(j));
    std::vector<GateRef> step_inputs;
    for (int i = 0; i < n; ++i)
        step_inputs.push_back(b.input(states + i));

    GateRef fire = b.splice(pred, step_inputs)[0];
    GateRef hold = b.make_not(fire);

    std::vector<GateRef> next(states);
    next[0] = b.make_and(cnt[0], hold);
    for (int j = 1; j < threshold; ++j)
        next[j] = b.make_or(b.make_and(cnt[j], hold), b.make_and(cnt[j - 1], fire));
    next[threshold] = b.make_or(cnt[threshold], b.make_and(cnt[threshold - 1], fire));

    std::vector<GateRef> outs = next;
    outs.push_back(next[threshold]);
    Circuit f = std::move(b).build(std::move(outs));

    BitVec s0 = BitVec::one_hot(states, initial_visit ? 1 : 0);
    return SeqCircuit(std::move(s0), std::move(f), 1);
}

std::pair<SeqCircuit, SeqCircuit> cascade(const SeqCircuit& policy,
                                          const SeqCircuit& dynamics,
                                          const SeqCircuit& prop,
                                          const SeqCircuit& valid) {
    if (policy.n_outputs() != dynamics.n_inputs())
        throw ArityError("cascade: policy outputs " + std::to_string(policy.n_outputs()) +
                         " bits but dynamics consumes " + std::to_string(dynamics.n_inputs()));
    if (dynamics.n_outputs() != prop.n_inputs())
        throw ArityError("cascade: dynamics outputs " + std::to_string(dynamics.n_outputs()) +
                         " bits but property monitor consumes " +
                         std::to_string(prop.n_inputs()));
    if (prop.n_outputs() != 1)
        throw ArityError("cascade: property stage must be a monitor");
    if (valid.n_outputs() != 1)
        throw ArityError("cascade: validity stage must be a monitor");
    if (valid.n_inputs() != policy.n_inputs())
        throw ArityError("cascade: validity monitor must read the raw coin inputs (" +
                         std::to_string(policy.n_inputs()) + " bits)");

    const int pp = policy.n_state(), pd = dynamics.n_state(), pr = prop.n_state();
    const int n = policy.n_inputs();

    CircuitBuilder b(pp + pd + pr + n);
    std::vector<GateRef> s_pol, s_dyn, s_prop, coins;
    for (int i = 0; i < pp; ++i) s_pol.push_back(b.input(i));
    for (int i = 0; i < pd; ++i) s_dyn.push_back(b.input(pp + i));
    for (int i = 0; i < pr; ++i) s_prop.push_back(b.input(pp + pd + i));
    for (int i = 0; i < n; ++i) coins.push_back(b.input(pp + pd + pr + i));

    std::vector<GateRef> args = s_pol;
    args.insert(args.end(), coins.begin(), coins.end());
    auto pol = b.splice(policy.transition(), args);

    args.assign(s_dyn.begin(), s_dyn.end());
    args.insert(args.end(), pol.begin() + pp, pol.end());
    auto dyn = b.splice(dynamics.transition(), args);

    args.assign(s_prop.begin(), s_prop.end());
    args.insert(args.end(), dyn.begin() + pd, dyn.end());
    auto prp = b.splice(prop.transition(), args);

    std::vector<GateRef> outs(pol.begin(), pol.begin() + pp);
    outs.insert(outs.end(), dyn.begin(), dyn.begin() + pd);
    outs.insert(outs.end(), prp.begin(), prp.begin() + pr);
    outs.push_back(prp[pr]);

    BitVec s0 = policy.s0().concat(dynamics.s0()).concat(prop.s0());
    SeqCircuit system(std::move(s0), std::move(b).build(std::move(outs)), 1);
    return {std::move(system), valid};
}

} // namespace ccount
