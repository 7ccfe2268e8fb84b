#include "qpoly/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qpoly/errors.hpp"

namespace qpoly::io {

namespace {

using nlohmann::json;

json complex_to_json(const complex_t& z) {
  return json::array({z.real(), z.imag()});
}

complex_t complex_from_json(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw FileFormatError(std::string(where) +
                          ": expected a [re, im] number pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse_document(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw FileFormatError(std::string(what) + ": not a JSON object");
  }
  return j;
}

int get_count_field(const json& j, const char* field, const char* what) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) {
    throw FileFormatError(std::string(what) + ": missing integer '" + field +
                          "'");
  }
  return j.at(field).get<int>();
}

CVector get_complex_array(const json& j, const char* field, int count,
                          const char* what) {
  if (!j.contains(field) || !j.at(field).is_array()) {
    throw FileFormatError(std::string(what) + ": missing array '" + field +
                          "'");
  }
  const json& arr = j.at(field);
  if (static_cast<int>(arr.size()) != count) {
    throw FileFormatError(std::string(what) + ": '" + field + "' must hold " +
                          std::to_string(count) + " entries, got " +
                          std::to_string(arr.size()));
  }
  CVector v(count);
  for (int i = 0; i < count; ++i) {
    v(i) = complex_from_json(arr[i], what);
  }
  return v;
}

} // namespace

std::string state_to_json(const QubitState& s) {
  json j;
  j["n"] = s.n;
  json amps = json::array();
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    amps.push_back(complex_to_json(s.amplitudes(i)));
  }
  j["amplitudes"] = std::move(amps);
  return j.dump(2) + "\n";
}

QubitState state_from_json(const std::string& text) {
  json j = parse_document(text, "state");
  int n = get_count_field(j, "n", "state");
  if (n < 1 || n > 12) {
    throw FileFormatError("state: 'n' must be in 1..12, got " +
                          std::to_string(n));
  }
  CVector amps = get_complex_array(j, "amplitudes", 1 << n, "state");
  return make_state(n, amps);
}

std::string poly_to_json(const MultilinearPoly& p) {
  json j;
  j["nvars"] = p.nvars;
  json coeffs = json::array();
  for (Eigen::Index i = 0; i < p.coeffs.size(); ++i) {
    coeffs.push_back(complex_to_json(p.coeffs(i)));
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

MultilinearPoly poly_from_json(const std::string& text) {
  json j = parse_document(text, "polynomial");
  int nvars = get_count_field(j, "nvars", "polynomial");
  if (nvars < 0 || nvars > 12) {
    throw FileFormatError("polynomial: 'nvars' must be in 0..12, got " +
                          std::to_string(nvars));
  }
  return MultilinearPoly{nvars,
                         get_complex_array(j, "coeffs", 1 << nvars,
                                           "polynomial")};
}

std::string basis_to_json(const EntangledBasis& b) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) {
      row.push_back(complex_to_json(b.T(r, c)));
    }
    rows.push_back(std::move(row));
  }
  json j;
  j["T"] = std::move(rows);
  return j.dump(2) + "\n";
}

EntangledBasis basis_from_json(const std::string& text) {
  json j = parse_document(text, "basis");
  if (!j.contains("T") || !j.at("T").is_array() || j.at("T").size() != 4) {
    throw FileFormatError("basis: 'T' must be a 4x4 array");
  }
  Mat4 t;
  for (int r = 0; r < 4; ++r) {
    const json& row = j.at("T")[r];
    if (!row.is_array() || row.size() != 4) {
      throw FileFormatError("basis: 'T' must be a 4x4 array");
    }
    for (int c = 0; c < 4; ++c) {
      t(r, c) = complex_from_json(row[c], "basis");
    }
  }
  return make_basis(t);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FileFormatError("cannot read file: " + path);
  return std::move(buffer).str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot create file: " + path);
  out << content;
  out.flush();
  if (!out) throw FileFormatError("cannot write file: " + path);
}

} // namespace qpoly::io
