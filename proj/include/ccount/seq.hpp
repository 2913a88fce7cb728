#pragma once

#include "ccount/circuit.hpp"

#include <span>
#include <utility>
#include <vector>

namespace ccount {

/// Sequential circuit (s0, F): p latches, n inputs, m outputs. The
/// transition F has p+n inputs (first p = previous state) and p+m outputs
/// (first p = next state). A monitor is the m == 1 case.
class SeqCircuit {
public:
    SeqCircuit(BitVec s0, Circuit transition, int n_outputs);

    int n_state() const { return s0_.width(); }
    int n_inputs() const { return transition_.n_inputs() - n_state(); }
    int n_outputs() const { return transition_.n_outputs() - n_state(); }
    const BitVec& s0() const { return s0_; }
    const Circuit& transition() const { return transition_; }
    bool is_monitor() const { return n_outputs() == 1; }

    /// One transition: (s, a) -> (next state, output).
    std::pair<BitVec, BitVec> step(const BitVec& s, const BitVec& a) const;

    /// Outputs y_1..y_tau of repeated step from s0.
    std::vector<BitVec> simulate(std::span<const BitVec> inputs) const;

private:
    BitVec s0_;
    Circuit transition_;
};

/// tau copies of the transition inlined with s0 as constants; the result
/// has tau*n inputs and keeps only the final step's m outputs. tau >= 1.
Circuit unroll(const SeqCircuit& c, int tau);

/// Monitor whose output is 1 iff pred held at every step so far
/// (latched conjunction).
SeqCircuit monitor_always(const Circuit& pred);

/// Monitor whose output is 1 iff pred has held on at least `threshold`
/// steps so far, realized as a saturating one-hot counter with
/// threshold+1 states. `initial_visit` starts the count at 1, for streams
/// whose (unseen) initial state should already count. threshold >= 1.
SeqCircuit monitor_count_visits(const Circuit& pred, int threshold, bool initial_visit);

/// Coins -> policy -> dynamics -> property monitor, with a validity
/// monitor reading the same raw coin inputs. Returns the composed system
/// (coin inputs, 1-bit verdict) and the validity monitor; both share the
/// coin input space so conditioning is two counts over one variable set.
std::pair<SeqCircuit, SeqCircuit> cascade(const SeqCircuit& policy,
                                          const SeqCircuit& dynamics,
                                          const SeqCircuit& prop,
                                          const SeqCircuit& valid);

} // namespace ccount
