#include "qvbench/qasm.hpp"

#include "qvbench/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qvb {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  if (s.empty()) return false;
  if constexpr (std::is_floating_point_v<T>) {
    // from_chars rejects a leading '+'.
    if (s.front() == '+') s.remove_prefix(1);
  }
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

struct Register {
  std::string name;
  int size = -1;
};

// Parses "name[idx]" and returns idx.
int parse_indexed(std::string_view s, const Register& reg, std::size_t line) {
  s = trim(s);
  const auto open = s.find('[');
  const auto close = s.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      close != s.size() - 1) {
    throw ParseError(line, "expected indexed operand, got '" + std::string(s) + "'");
  }
  const auto name = trim(s.substr(0, open));
  if (name != reg.name) {
    throw ParseError(line, "unknown register '" + std::string(name) + "'");
  }
  int idx = -1;
  if (!parse_number(s.substr(open + 1, close - open - 1), idx)) {
    throw ParseError(line, "bad index in '" + std::string(s) + "'");
  }
  if (idx < 0 || idx >= reg.size) {
    throw ParseError(line, "index " + std::to_string(idx) + " out of range for " + reg.name + "[" +
                               std::to_string(reg.size) + "]");
  }
  return idx;
}

Register parse_register_decl(std::string_view body, std::size_t line) {
  // body: "name[N]"
  const auto open = body.find('[');
  const auto close = body.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close != body.size() - 1) {
    throw ParseError(line, "malformed register declaration");
  }
  Register reg;
  reg.name = std::string(trim(body.substr(0, open)));
  if (reg.name.empty() || !parse_number(body.substr(open + 1, close - open - 1), reg.size) ||
      reg.size <= 0) {
    throw ParseError(line, "malformed register declaration");
  }
  return reg;
}

void parse_meta(std::string_view rest, CircuitMeta& meta, std::size_t line) {
  std::istringstream in{std::string(rest)};
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(line, "malformed @meta entry '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    std::uint64_t n = 0;
    if (key == "source") {
      if (value == "generated") {
        meta.source = CircuitSource::Generated;
      } else if (value == "compiled") {
        meta.source = CircuitSource::Compiled;
      } else {
        throw ParseError(line, "unknown circuit source '" + value + "'");
      }
    } else if (key == "seed" && parse_number(value, n)) {
      meta.seed = n;
    } else if (key == "index" && parse_number(value, n)) {
      meta.circuit_index = n;
    } else {
      throw ParseError(line, "malformed @meta entry '" + tok + "'");
    }
  }
}

}  // namespace

std::string serialize(const Circuit& c) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "// @meta source=";
  out += source_name(c.meta().source);
  if (c.meta().seed) out += " seed=" + std::to_string(*c.meta().seed);
  if (c.meta().circuit_index) out += " index=" + std::to_string(*c.meta().circuit_index);
  out += '\n';
  out += "qreg q[" + std::to_string(c.width()) + "];\n";
  out += "creg c[" + std::to_string(c.width()) + "];\n";

  const auto& bounds = c.meta().layer_boundaries;
  std::size_t next_bound = 0;
  for (std::size_t i = 0; i <= c.ops().size(); ++i) {
    while (next_bound < bounds.size() && bounds[next_bound] == i) {
      out += "// @layer\n";
      ++next_bound;
    }
    if (i == c.ops().size()) break;
    const auto& op = c.ops()[i];
    out += gate_info(op.gate).mnemonic;
    if (!op.params.empty()) {
      out += '(';
      for (std::size_t p = 0; p < op.params.size(); ++p) {
        if (p) out += ',';
        out += format_double(op.params[p]);
      }
      out += ')';
    }
    out += ' ';
    for (std::size_t q = 0; q < op.qubits.size(); ++q) {
      if (q) out += ',';
      out += "q[" + std::to_string(op.qubits[q]) + "]";
    }
    out += ";\n";
  }
  for (int q = 0; q < c.width(); ++q) {
    if (c.measured()[static_cast<std::size_t>(q)]) {
      out += "measure q[" + std::to_string(q) + "] -> c[" + std::to_string(q) + "];\n";
    }
  }
  return out;
}

Circuit parse_circuit(std::string_view text, std::vector<std::string>* warnings) {
  auto warn = [&](std::size_t line, const std::string& msg) {
    if (warnings) warnings->push_back("line " + std::to_string(line) + ": " + msg);
  };

  bool header_seen = false;
  Register qreg, creg;
  Circuit circuit;
  CircuitMeta meta;
  std::vector<std::size_t> layers;
  std::vector<Operation> ops;
  std::vector<int> measured;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto line = trim(raw);
    if (line.empty()) continue;
    if (starts_with(line, "//")) {
      auto comment = trim(line.substr(2));
      if (starts_with(comment, "@meta")) {
        parse_meta(comment.substr(5), meta, line_no);
      } else if (comment == "@layer") {
        layers.push_back(ops.size());
      }
      continue;
    }
    if (starts_with(line, "#pragma") || starts_with(line, "pragma")) {
      warn(line_no, "ignored pragma '" + std::string(line) + "'");
      continue;
    }
    // Strip trailing comment.
    if (auto cpos = line.find("//"); cpos != std::string_view::npos) line = trim(line.substr(0, cpos));
    if (line.back() != ';') throw ParseError(line_no, "missing ';'");
    line = trim(line.substr(0, line.size() - 1));

    if (!header_seen) {
      if (line != "OPENQASM 2.0") throw ParseError(line_no, "malformed header, expected 'OPENQASM 2.0;'");
      header_seen = true;
      continue;
    }
    if (starts_with(line, "include")) continue;
    if (starts_with(line, "qreg ")) {
      if (qreg.size > 0) throw ParseError(line_no, "only one qreg is supported");
      qreg = parse_register_decl(trim(line.substr(5)), line_no);
      continue;
    }
    if (starts_with(line, "creg ")) {
      creg = parse_register_decl(trim(line.substr(5)), line_no);
      continue;
    }
    if (qreg.size <= 0) throw ParseError(line_no, "statement before qreg declaration");
    if (starts_with(line, "barrier")) continue;
    if (starts_with(line, "reset")) {
      warn(line_no, "ignored reset");
      continue;
    }
    if (starts_with(line, "measure ")) {
      const auto body = line.substr(8);
      const auto arrow = body.find("->");
      if (arrow == std::string_view::npos) throw ParseError(line_no, "malformed measure");
      measured.push_back(parse_indexed(body.substr(0, arrow), qreg, line_no));
      if (creg.size > 0) parse_indexed(body.substr(arrow + 2), creg, line_no);
      continue;
    }

    // Gate statement: mnemonic[(params)] operands
    std::size_t name_end = 0;
    while (name_end < line.size() && line[name_end] != '(' && line[name_end] != ' ' &&
           line[name_end] != '\t') {
      ++name_end;
    }
    const std::string mnemonic(line.substr(0, name_end));
    const auto kind = gate_from_mnemonic(mnemonic);
    if (!kind) throw ParseError(line_no, "unknown gate '" + mnemonic + "'");

    Operation op{*kind, {}, {}};
    auto rest = line.substr(name_end);
    if (!rest.empty() && rest.front() == '(') {
      const auto close = rest.find(')');
      if (close == std::string_view::npos) throw ParseError(line_no, "unterminated parameter list");
      auto plist = rest.substr(1, close - 1);
      while (!plist.empty()) {
        const auto comma = plist.find(',');
        double v = 0;
        if (!parse_number(plist.substr(0, comma), v)) {
          throw ParseError(line_no, "bad parameter in '" + std::string(line) + "'");
        }
        op.params.push_back(v);
        if (comma == std::string_view::npos) break;
        plist.remove_prefix(comma + 1);
      }
      rest = rest.substr(close + 1);
    }
    rest = trim(rest);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      op.qubits.push_back(parse_indexed(rest.substr(0, comma), qreg, line_no));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    const auto& info = gate_info(op.gate);
    if (static_cast<int>(op.params.size()) != info.param_count) {
      throw ParseError(line_no, mnemonic + " expects " + std::to_string(info.param_count) +
                                    " parameter(s)");
    }
    if (static_cast<int>(op.qubits.size()) != info.arity) {
      throw ParseError(line_no, mnemonic + " expects " + std::to_string(info.arity) + " qubit(s)");
    }
    if (op.qubits.size() == 2 && op.qubits[0] == op.qubits[1]) {
      throw ParseError(line_no, mnemonic + " repeats a qubit");
    }
    ops.push_back(std::move(op));
  }
  if (!header_seen) throw ParseError(line_no, "malformed header, expected 'OPENQASM 2.0;'");
  if (qreg.size <= 0) throw ParseError(line_no, "missing qreg declaration");

  circuit = Circuit(qreg.size);
  for (auto& op : ops) circuit.append(std::move(op));
  for (int q : measured) circuit.measure(q);
  meta.layer_boundaries = std::move(layers);
  circuit.meta() = std::move(meta);
  return circuit;
}

Circuit read_circuit_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open circuit file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str(), warnings);
}

void write_circuit_file(const std::string& path, const Circuit& c) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write circuit file " + path);
  out << serialize(c);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace qvb
