#include "qpoly/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "qpoly/circuit.hpp"
#include "qpoly/errors.hpp"
#include "qpoly/geometry.hpp"
#include "qpoly/io.hpp"
#include "qpoly/mpoly.hpp"
#include "qpoly/qstate.hpp"
#include "qpoly/separability.hpp"
#include "qpoly/teleport.hpp"

namespace qpoly::cli {

namespace {

std::string fmt(double v) {
  if (v == 0.0) v = 0.0; // print -0 as 0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt(const complex_t& z) {
  return "(" + fmt(z.real()) + ", " + fmt(z.imag()) + ")";
}

std::string ket_label(Eigen::Index index, int n) {
  std::string s(static_cast<size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((index >> (n - 1 - q)) & 1) s[static_cast<size_t>(q)] = '1';
  }
  return s;
}

std::string fmt_gate(const Mat2& g) {
  return "[" + fmt(g(0, 0)) + " " + fmt(g(0, 1)) + "; " + fmt(g(1, 0)) + " " +
         fmt(g(1, 1)) + "]";
}

void emit_artifact(const std::string& bytes, const std::string& out_path,
                   std::ostream& out) {
  if (out_path.empty()) {
    out << bytes;
  } else {
    io::write_text_file(out_path, bytes);
  }
}

Vec2 parse_gamma(const std::string& text) {
  std::vector<double> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--gamma", "bad number '" + token + "'");
    }
    if (used != token.size()) {
      throw CLI::ValidationError("--gamma", "bad number '" + token + "'");
    }
    parts.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  if (parts.size() != 4) {
    throw CLI::ValidationError("--gamma",
                               "expected two pairs like \"re,im re,im\"");
  }
  Vec2 gamma;
  gamma << complex_t(parts[0], parts[1]), complex_t(parts[2], parts[3]);
  return gamma;
}

struct SeparableArgs {
  std::string state_path;
};

void run_separable(const SeparableArgs& a, std::ostream& out) {
  QubitState s = io::state_from_json(io::read_text_file(a.state_path));
  SeparabilityVerdict verdict = classify(s);
  out << "det = " << fmt(verdict.det) << "\n";
  out << "verdict: " << (verdict.entangled ? "entangled" : "separable")
      << "\n";
  if (verdict.factors) {
    const auto& [left, right] = *verdict.factors;
    out << "left factor:  " << fmt(left.amplitudes(0)) << " "
        << fmt(left.amplitudes(1)) << "\n";
    out << "right factor: " << fmt(right.amplitudes(0)) << " "
        << fmt(right.amplitudes(1)) << "\n";
  }
}

struct BellArgs {
  int index = 1;
  std::string emit = "state";
  std::string format = "obj";
  std::string out_path;
};

void run_bell(const BellArgs& a, std::ostream& out) {
  QubitState s = bell_state(BellIndex(a.index));
  if (a.emit == "state") {
    emit_artifact(io::state_to_json(s), a.out_path, out);
  } else if (a.emit == "poly") {
    emit_artifact(io::poly_to_json(state_to_poly(s)), a.out_path, out);
  } else {
    SurfaceMesh mesh = sample_mesh(state_to_poly(s), GridSpec{});
    MeshFormat format =
        a.format == "csv" ? MeshFormat::Csv : MeshFormat::Obj;
    emit_artifact(export_mesh(mesh, format), a.out_path, out);
  }
}

struct TeleportArgs {
  std::string gamma_text;
  std::string basis_path;
  bool bell = false;
  int resource_index = 1;
};

void run_teleport(const TeleportArgs& a, std::ostream& out) {
  Vec2 gamma = parse_gamma(a.gamma_text);
  double deficit = std::abs(gamma.squaredNorm() - 1.0);
  if (!(deficit <= 1e-6)) throw NotNormalized(deficit);
  gamma /= gamma.norm();

  EntangledBasis basis =
      a.bell ? bell_basis()
             : io::basis_from_json(io::read_text_file(a.basis_path));

  auto branches = teleport_general(gamma, basis, a.resource_index);
  out << "outcome  probability    residual\n";
  for (const TeleportBranch& branch : branches) {
    double probability = branch.residual.squaredNorm();
    out << branch.outcome << "        " << fmt(probability) << "  "
        << fmt(branch.residual(0)) << " " << fmt(branch.residual(1)) << "\n";
    if (branch.correction) {
      out << "         correction " << fmt_gate(*branch.correction) << "\n";
    } else if (probability > 1e-12) {
      out << "         correction singular\n";
    } else {
      out << "         zero probability\n";
    }
  }

  auto pairs = teleport_poly(gamma, basis, a.resource_index);
  double agreement = 0.0;
  for (int k = 0; k < 4; ++k) {
    agreement = std::max(
        agreement, std::abs(pairs[k].first - branches[k].residual(0)));
    agreement = std::max(
        agreement, std::abs(pairs[k].second - branches[k].residual(1)));
  }
  out << "state/polynomial agreement residual = " << fmt(agreement) << "\n";
}

struct CircuitRunArgs {
  std::string file;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string trace_dir;
};

void run_circuit_cmd(const CircuitRunArgs& a, std::ostream& out) {
  Circuit c = parse_circuit(io::read_text_file(a.file));
  RunResult result = run_circuit(c);

  out << "final state (n = " << c.nqubits << "):\n";
  for (Eigen::Index i = 0; i < result.final_state.amplitudes.size(); ++i) {
    out << "  |" << ket_label(i, c.nqubits) << ">  "
        << fmt(result.final_state.amplitudes(i)) << "\n";
  }

  if (a.shots > 0) {
    MeasurementRecord record = measure(result.final_state, a.shots, a.seed);
    out << "counts (shots = " << record.shots << ", seed = " << record.seed
        << "):\n";
    for (const auto& [bits, count] : record.counts) {
      out << "  " << bits << "  " << count << "\n";
    }
  }

  if (!a.trace_dir.empty()) {
    std::filesystem::create_directories(a.trace_dir);
    std::vector<TraceEntry> trace = trace_geometry(c);
    for (const TraceEntry& entry : trace) {
      std::filesystem::path base =
          std::filesystem::path(a.trace_dir) / entry.label;
      io::write_text_file(base.string() + ".poly",
                          io::poly_to_json(entry.poly));
      if (entry.mesh) {
        io::write_text_file(base.string() + ".obj",
                            export_mesh(*entry.mesh, MeshFormat::Obj));
      }
    }
    out << "trace: " << trace.size() << " slices written to " << a.trace_dir
        << "\n";
  }
}

struct MeshArgs {
  std::string poly_path;
  GridSpec grid;
  std::string format = "obj";
  std::string out_path;
};

void run_mesh(const MeshArgs& a, std::ostream& out) {
  if (a.grid.n < 2) {
    throw CLI::ValidationError("--n", "needs at least 2 samples per axis");
  }
  if (!(a.grid.min < a.grid.max)) {
    throw CLI::ValidationError("--min/--max", "needs min < max");
  }
  MultilinearPoly p = io::poly_from_json(io::read_text_file(a.poly_path));
  SurfaceMesh mesh = sample_mesh(p, a.grid);
  MeshFormat format = a.format == "csv" ? MeshFormat::Csv : MeshFormat::Obj;
  emit_artifact(export_mesh(mesh, format), a.out_path, out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Two-qubit states, bilinear polynomials, and teleportation "
               "tables"};
  app.name("qpoly");
  app.require_subcommand(1);

  SeparableArgs separable_args;
  CLI::App* separable =
      app.add_subcommand("separable", "Classify a two-qubit state file");
  separable
      ->add_option("state", separable_args.state_path, "State file (JSON)")
      ->required();
  separable->callback([&] { run_separable(separable_args, out); });

  BellArgs bell_args;
  CLI::App* bell =
      app.add_subcommand("bell", "Emit a Bell state, its polynomial, or its "
                                 "surface mesh");
  bell->add_option("--index", bell_args.index, "Bell state index")
      ->required()
      ->check(CLI::Range(1, 4));
  bell->add_option("--emit", bell_args.emit, "Artifact kind")
      ->check(CLI::IsMember({"state", "poly", "mesh"}));
  bell->add_option("--format", bell_args.format, "Mesh format")
      ->check(CLI::IsMember({"obj", "csv"}));
  bell->add_option("--out", bell_args.out_path,
                   "Output file (stdout when omitted)");
  bell->callback([&] { run_bell(bell_args, out); });

  TeleportArgs teleport_args;
  CLI::App* teleport =
      app.add_subcommand("teleport", "Print the four-branch teleportation "
                                     "table for a resource basis");
  teleport
      ->add_option("--gamma", teleport_args.gamma_text,
                   "Qubit to send, as \"re,im re,im\"")
      ->required();
  CLI::Option* basis_opt = teleport->add_option(
      "--basis", teleport_args.basis_path, "Basis file (JSON, 4x4 T)");
  CLI::Option* bell_opt = teleport->add_flag(
      "--bell", teleport_args.bell, "Use the Bell basis");
  basis_opt->excludes(bell_opt);
  bell_opt->excludes(basis_opt);
  teleport
      ->add_option("--resource-index", teleport_args.resource_index,
                   "Which basis state carries the resource")
      ->check(CLI::Range(1, 4));
  teleport->callback([&] {
    if (!teleport_args.bell && teleport_args.basis_path.empty()) {
      throw CLI::RequiredError("--basis or --bell");
    }
    run_teleport(teleport_args, out);
  });

  CLI::App* circuit =
      app.add_subcommand("circuit", "Parse and simulate circuit programs");
  circuit->require_subcommand(1);
  CircuitRunArgs circuit_args;
  CLI::App* circuit_run = circuit->add_subcommand(
      "run", "Run a circuit file from the all-zeros state");
  circuit_run->add_option("--file", circuit_args.file, "Circuit source file")
      ->required();
  circuit_run->add_option("--shots", circuit_args.shots,
                          "Sample this many measurements");
  circuit_run->add_option("--seed", circuit_args.seed, "Measurement seed");
  circuit_run->add_option("--trace", circuit_args.trace_dir,
                          "Write per-slice polynomials and meshes here");
  circuit_run->callback([&] { run_circuit_cmd(circuit_args, out); });

  MeshArgs mesh_args;
  CLI::App* mesh =
      app.add_subcommand("mesh", "Sample a bilinear polynomial into a mesh");
  mesh->add_option("--poly", mesh_args.poly_path, "Polynomial file (JSON)")
      ->required();
  mesh->add_option("--min", mesh_args.grid.min, "Grid minimum");
  mesh->add_option("--max", mesh_args.grid.max, "Grid maximum");
  mesh->add_option("--n", mesh_args.grid.n, "Samples per axis");
  mesh->add_option("--format", mesh_args.format, "Mesh format")
      ->check(CLI::IsMember({"obj", "csv"}));
  mesh->add_option("--out", mesh_args.out_path,
                   "Output file (stdout when omitted)");
  mesh->callback([&] { run_mesh(mesh_args, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const FileFormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const qpoly::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const qpoly::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace qpoly::cli
