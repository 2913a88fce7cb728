#pragma once

#include "ccount/count.hpp"
#include "ccount/gadgets.hpp"
#include "ccount/rational.hpp"
#include "ccount/seq.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace ccount {

enum class Boundary { Saturate, Wrap, Sink };

/// 1-d chain of `length` cells, one-hot encoded.
struct ChainSpec {
    int length = 1;
    int start = 0;
    Boundary boundary = Boundary::Saturate;
};

/// Sequential circuit with `length` latches (one-hot position, s0 at
/// `start`) and inputs (enable, direction). enable = 0 holds the position;
/// enable = 1 moves by +1 when direction = 1 ("forward") and -1 otherwise,
/// with the boundary policy applied at the ends. Outputs the full state.
SeqCircuit chain_dynamics(const ChainSpec& spec);

/// Pier walk: 11 planks, start and breakable plank at the center, per-step
/// move distribution forward 2/6, backward 1/6, stay 3/6 realized from
/// 3 coin bits (1 enable bit, 2 direction bits conditioned on x < 3).
/// The walker falls once the center plank has been visited visit_threshold
/// times; positions are counted after each move, plus the starting
/// position iff count_initial_visit is set.
struct SailorQuery {
    ChainSpec chain{11, 5, Boundary::Saturate};
    int horizon = 10;
    int visit_threshold = 3;
    bool count_initial_visit = false;
};

/// The assembled four-stage cascade, exposed so tests and the CLI can
/// count the unrolled predicates directly.
struct SailorAssembly {
    SeqCircuit system;  // 3 coin bits per step -> fall verdict
    SeqCircuit valid;   // same coin bits -> per-step conditioning monitor
};

SailorAssembly sailor_assembly(const SailorQuery& q);

struct SailorResult {
    BigInt joint_count;  // #(fall and valid) over the unrolled coins
    BigInt valid_count;  // #(valid), equals 6^horizon
    Rational probability;
};

/// Answers the query through the circuit pipeline (unroll + count).
SailorResult sailor_query(const SailorQuery& q, Backend backend = Backend::Auto);

/// Independent oracle: exact forward propagation of the joint distribution
/// over (position, saturating visit count) in rational arithmetic. Never
/// touches the circuit pipeline.
Rational oracle_sailor(const SailorQuery& q);

/// Exact binomial pmf with bias k/m via the Pascal recurrence.
std::vector<Rational> oracle_binomial_pmf(int n_trials, std::uint64_t k,
                                          std::uint64_t m);

/// Conditioned face probabilities of the fair three-sided die sampler
/// unrolled for two flips; exactly (1/3, 1/3, 1/3).
std::vector<Rational> three_sided_die_query(Backend backend = Backend::Auto);

enum class Cell { Empty, Lava, Water, Dry, Recharge };

/// Rectangular grid parsed from ASCII art: `.` empty, `L` lava, `W` water,
/// `D` dry, `R` recharge, `S` start (exactly one; the start cell is empty).
struct GridWorld {
    int width = 0;
    int height = 0;
    int start_x = 0;
    int start_y = 0;
    std::vector<Cell> cells;  // row-major, row 0 first

    Cell at(int x, int y) const { return cells.at(y * width + x); }
};

GridWorld parse_gridworld(std::string_view text);

/// Random-policy task query on the grid: reach a recharge cell, never take
/// a lava failure, and after stepping on water visit a dry cell before any
/// recharge. Actions are 2 coin bits (axis, direction); with probability
/// `slip` the move is replaced by 2 fresh uniform bits; entering lava fails
/// with probability `lava_fail`. Both probabilities must be rational with
/// small denominators (they become conditioned coins).
struct GridQuery {
    GridWorld world;
    Rational slip = 0;
    Rational lava_fail = 1;
    int horizon = 1;
};

Rational gridworld_query(const GridQuery& q, Backend backend = Backend::Auto);

/// Explicit-state oracle over (x, y, wet/failed/succeeded).
Rational oracle_gridworld(const GridQuery& q);

} // namespace ccount
