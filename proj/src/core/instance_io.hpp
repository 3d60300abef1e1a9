#pragma once

#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace cff {

// A problem instance: host graph plus degree requirements.
struct Instance {
    Graph graph;
    DegreeSpec f;
};

// Line-oriented instance format:
//   c <comment>                     anywhere, ignored
//   p ffactor <n> <m> <weighted>    header, weighted is 0 or 1
//   f <v0> <v1> ... <v_{n-1}>       n degree values (may span several f lines)
//   e <u> <v> [w]                   m edge lines; weight required iff weighted
// Rejects self-loops, duplicate edges, out-of-range ids; positions are 1-based.
Instance parse_instance(std::string_view text);  // throws ParseError

std::string serialize_instance(const Instance& inst);

// Odd degree sum: legal input, but no f-factor can exist.
bool parity_warning(const Instance& inst);

Instance read_instance_file(const std::string& path);   // throws ParseError / ValidationError
void write_instance_file(const Instance& inst, const std::string& path);

}  // namespace cff
