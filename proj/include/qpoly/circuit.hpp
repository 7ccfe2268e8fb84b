#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpoly/geometry.hpp"
#include "qpoly/mpoly.hpp"
#include "qpoly/qstate.hpp"

namespace qpoly {

enum class GateKind { H, X, Z, CX };

/// control is -1 for single-qubit gates.
struct Gate {
  GateKind kind;
  int target = 0;
  int control = -1;
};

/// Parsed program: gates in order plus slice markers, where slices[j] is the
/// number of gates applied before marker j fires.
struct Circuit {
  int nqubits = 0;
  std::vector<Gate> gates;
  std::vector<int> slices;
};

/// Parses the circuit DSL: a `qubits N` header (1 <= N <= 12) followed by
/// `h q`, `x q`, `z q`, `cx c t` (c != t) and `slice` lines. `#` starts a
/// comment, indices are 0-based. Throws ParseError with a 1-based line.
Circuit parse_circuit(std::string_view source);

struct RunResult {
  QubitState final_state;
  std::vector<QubitState> slice_states;
};

/// Applies the circuit's gates to `initial` in order; throws WrongArity
/// unless the qubit counts agree. slice_states holds one state per marker in
/// program order with the final state appended.
RunResult run_circuit(const Circuit& c, const QubitState& initial);

/// Runs the circuit on |0...0>.
RunResult run_circuit(const Circuit& c);

struct MeasurementRecord {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> counts;
};

/// Samples `shots` computational-basis outcomes (shots >= 1) with a seeded
/// deterministic generator. Keys are bitstrings with qubit 0 leftmost.
MeasurementRecord measure(const QubitState& s, std::uint64_t shots,
                          std::uint64_t seed);

struct TraceEntry {
  std::string label;
  MultilinearPoly poly;
  std::optional<SurfaceMesh> mesh;
};

/// Polynomial trace of a run from |0...0>: the initial state, every marker
/// state, and (when any gate ran) the final state, labeled slice_0, slice_1,
/// ... A mesh on the default grid is attached only for two-qubit states
/// whose amplitudes are real within 1e-12.
std::vector<TraceEntry> trace_geometry(const Circuit& c);

} // namespace qpoly
