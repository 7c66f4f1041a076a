#pragma once

#include "qvbench/circuit.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qvb {

/// Writes the circuit as a strict OpenQASM-2-style subset: one statement per
/// line, lowercase mnemonics, decimal radians in shortest round-trip form.
/// Metadata and layer boundaries travel in `// @meta` and `// @layer` comments.
std::string serialize(const Circuit& c);

/// Parses text produced by `serialize` (and the common vendor noise around it).
/// `reset` and `pragma` statements are skipped; a note is appended to
/// `warnings` when provided. Throws ParseError carrying the line number.
Circuit parse_circuit(std::string_view text, std::vector<std::string>* warnings = nullptr);

Circuit read_circuit_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
void write_circuit_file(const std::string& path, const Circuit& c);

}  // namespace qvb
