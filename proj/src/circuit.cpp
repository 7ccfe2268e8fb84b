#include "qpoly/circuit.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "qpoly/errors.hpp"
#include "qpoly/numerics.hpp"

namespace qpoly {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : line) {
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

int parse_index(const std::string& token, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
  }
  return value;
}

int parse_qubit(const std::string& token, int line, int nqubits,
                const char* what) {
  int q = parse_index(token, line, what);
  if (q < 0 || q >= nqubits) {
    throw ParseError(line, std::string(what) + " " + token +
                               " out of range for " +
                               std::to_string(nqubits) + " qubits");
  }
  return q;
}

void expect_argc(const std::vector<std::string>& tokens, size_t argc,
                 int line) {
  if (tokens.size() != argc + 1) {
    throw ParseError(line, "'" + tokens[0] + "' expects " +
                               std::to_string(argc) + " argument" +
                               (argc == 1 ? "" : "s"));
  }
}

// Qubit q lives at bit position n-1-q: qubit 0 is the leftmost ket symbol
// and the most significant amplitude-index bit.
int bit_of(int nqubits, int q) { return nqubits - 1 - q; }

void apply_single(CVector& amps, int bit,
                  void (*update)(complex_t&, complex_t&)) {
  Eigen::Index size = amps.size();
  Eigen::Index mask = Eigen::Index(1) << bit;
  for (Eigen::Index i = 0; i < size; ++i) {
    if (i & mask) continue;
    update(amps(i), amps(i | mask));
  }
}

void apply_gate(CVector& amps, int nqubits, const Gate& g) {
  int tbit = bit_of(nqubits, g.target);
  switch (g.kind) {
    case GateKind::H:
      apply_single(amps, tbit, [](complex_t& a, complex_t& b) {
        complex_t lo = inv_sqrt2 * (a + b);
        complex_t hi = inv_sqrt2 * (a - b);
        a = lo;
        b = hi;
      });
      break;
    case GateKind::X:
      apply_single(amps, tbit,
                   [](complex_t& a, complex_t& b) { std::swap(a, b); });
      break;
    case GateKind::Z:
      apply_single(amps, tbit, [](complex_t&, complex_t& b) { b = -b; });
      break;
    case GateKind::CX: {
      Eigen::Index cmask = Eigen::Index(1) << bit_of(nqubits, g.control);
      Eigen::Index tmask = Eigen::Index(1) << tbit;
      for (Eigen::Index i = 0; i < amps.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) {
          std::swap(amps(i), amps(i | tmask));
        }
      }
      break;
    }
  }
}

std::string bitstring(Eigen::Index index, int nqubits) {
  std::string s(static_cast<size_t>(nqubits), '0');
  for (int q = 0; q < nqubits; ++q) {
    if ((index >> bit_of(nqubits, q)) & 1) s[static_cast<size_t>(q)] = '1';
  }
  return s;
}

} // namespace

Circuit parse_circuit(std::string_view source) {
  Circuit c;
  bool have_header = false;
  int line_no = 0;

  std::istringstream stream{std::string(source)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_no;
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens[0] != "qubits") {
        throw ParseError(line_no, "expected 'qubits N' header");
      }
      expect_argc(tokens, 1, line_no);
      int n = parse_index(tokens[1], line_no, "qubit count");
      if (n < 1 || n > 12) {
        throw ParseError(line_no, "qubit count must be in 1..12");
      }
      c.nqubits = n;
      have_header = true;
      continue;
    }

    const std::string& op = tokens[0];
    if (op == "h" || op == "x" || op == "z") {
      expect_argc(tokens, 1, line_no);
      GateKind kind = op == "h"   ? GateKind::H
                      : op == "x" ? GateKind::X
                                  : GateKind::Z;
      c.gates.push_back(
          {kind, parse_qubit(tokens[1], line_no, c.nqubits, "qubit"), -1});
    } else if (op == "cx") {
      expect_argc(tokens, 2, line_no);
      int control = parse_qubit(tokens[1], line_no, c.nqubits, "control");
      int target = parse_qubit(tokens[2], line_no, c.nqubits, "target");
      if (control == target) {
        throw ParseError(line_no, "control and target must differ");
      }
      c.gates.push_back({GateKind::CX, target, control});
    } else if (op == "slice") {
      expect_argc(tokens, 0, line_no);
      c.slices.push_back(static_cast<int>(c.gates.size()));
    } else {
      throw ParseError(line_no, "unknown instruction '" + op + "'");
    }
  }

  if (!have_header) {
    throw ParseError(line_no + 1, "expected 'qubits N' header");
  }
  return c;
}

RunResult run_circuit(const Circuit& c, const QubitState& initial) {
  if (initial.n != c.nqubits) {
    throw WrongArity("circuit on " + std::to_string(c.nqubits) +
                     " qubits cannot run on a " + std::to_string(initial.n) +
                     "-qubit state");
  }
  QubitState state = initial;
  RunResult result;

  size_t next_slice = 0;
  for (size_t g = 0; g <= c.gates.size(); ++g) {
    while (next_slice < c.slices.size() &&
           c.slices[next_slice] == static_cast<int>(g)) {
      result.slice_states.push_back(state);
      ++next_slice;
    }
    if (g < c.gates.size()) {
      apply_gate(state.amplitudes, c.nqubits, c.gates[g]);
    }
  }

  result.final_state = state;
  result.slice_states.push_back(std::move(state));
  return result;
}

RunResult run_circuit(const Circuit& c) {
  return run_circuit(c, zero_state(c.nqubits));
}

MeasurementRecord measure(const QubitState& s, std::uint64_t shots,
                          std::uint64_t seed) {
  if (shots < 1) throw Error("shots must be at least 1");

  MeasurementRecord record;
  record.shots = shots;
  record.seed = seed;

  std::mt19937_64 rng(seed);
  Eigen::Index size = s.amplitudes.size();
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    double u = uniform_unit(rng);
    double cumulative = 0.0;
    Eigen::Index picked = size - 1;
    for (Eigen::Index i = 0; i < size; ++i) {
      cumulative += std::norm(s.amplitudes(i));
      if (u <= cumulative) {
        picked = i;
        break;
      }
    }
    ++record.counts[bitstring(picked, s.n)];
  }
  return record;
}

std::vector<TraceEntry> trace_geometry(const Circuit& c) {
  RunResult run = run_circuit(c);
  if (c.gates.empty()) {
    // The final state is the initial one; don't trace it twice.
    run.slice_states.pop_back();
  }

  std::vector<QubitState> states;
  states.reserve(run.slice_states.size() + 1);
  states.push_back(zero_state(c.nqubits));
  for (QubitState& s : run.slice_states) states.push_back(std::move(s));

  std::vector<TraceEntry> trace;
  trace.reserve(states.size());
  for (size_t k = 0; k < states.size(); ++k) {
    TraceEntry entry;
    entry.label = "slice_" + std::to_string(k);
    entry.poly = state_to_poly(states[k]);
    if (c.nqubits == 2 &&
        states[k].amplitudes.imag().cwiseAbs().maxCoeff() <= 1e-12) {
      entry.mesh = sample_mesh(entry.poly, GridSpec{});
    }
    trace.push_back(std::move(entry));
  }
  return trace;
}

} // namespace qpoly
