// Command-line front end. run_cli is the whole program; tools/ only wires it
// to the process streams so that tests can drive it in-process.
#pragma once

#include "cyclefk/algebra.hpp"

#include <ostream>
#include <string>

namespace cyclefk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConsistency = 3;

/// Largest n the enumerative commands accept without --unsafe-large-n.
inline constexpr int kDefaultCliCap = 20;

inline constexpr const char* kSchemaVersion = "1.0";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "x12*x34", "-x{1,10}*x{2,3}", "x12 * x23" (whitespace ignored) into
/// a signed word over ctx. Throws InvalidArgument on syntax errors and on
/// letters that are not edges of the cycle.
Poly parse_word(const std::string& text, const CycleContext& ctx);

}  // namespace cyclefk
