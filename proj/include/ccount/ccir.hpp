#pragma once

#include "ccount/circuit.hpp"
#include "ccount/seq.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace ccount {

/// CCIR v1 netlist text. Combinational form:
///
///   ccir 1
///   in <n>
///   g<id> = input <i> | const <0|1> | not g<a> | and g<a> g<b>
///                     | or g<a> g<b> | xor g<a> g<b>
///   out g<a> g<b> ...
///
/// Sequential form adds `latch <init> g<next>` lines between the gates and
/// the out line; latch i's current value is readable as `input i`, external
/// inputs follow at indices p..p+n-1, and `in <n>` counts externals only.
/// Gate ids are strictly increasing and operands may only reference earlier
/// ids (forward references are rejected).
using ParsedCcir = std::variant<Circuit, SeqCircuit>;

ParsedCcir parse_ccir(std::string_view text);

std::string emit_ccir(const Circuit& c);
std::string emit_ccir(const SeqCircuit& c);

} // namespace ccount
