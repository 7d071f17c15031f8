#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monobound/errors.hpp"
#include "monobound/states.hpp"

namespace monobound {

using StateVariant = std::variant<PureState, DensityMatrix>;

// JSON schema:
//   {"dims":[2,2,2], "type":"pure",  "amplitudes":[{"re":..,"im":..}, ...]}
//   {"dims":[2,2,2], "type":"mixed", "matrix":[[{"re":..,"im":..}, ...], ...]}

namespace detail {

inline Complex parse_complex(const nlohmann::json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") ||
      !j["re"].is_number() || !j["im"].is_number())
    throw ParseError("field '" + field + "': expected an object {\"re\":number,\"im\":number}");
  return {j["re"].get<double>(), j["im"].get<double>()};
}

inline nlohmann::json complex_json(const Complex& z) {
  return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace detail

/// Parses a state from JSON text. Structural problems throw ParseError naming
/// the offending field; physically invalid matrices throw the usual state
/// validation errors.
inline StateVariant read_state_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level: expected a JSON object");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty())
    throw ParseError("field 'dims': expected a nonempty array of positive integers");
  std::vector<std::size_t> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() <= 0)
      throw ParseError("field 'dims': entries must be positive integers");
    dims.push_back(d.get<std::size_t>());
  }
  if (!j.contains("type") || !j["type"].is_string())
    throw ParseError("field 'type': expected \"pure\" or \"mixed\"");
  const std::string type = j["type"].get<std::string>();
  const std::size_t total = product_of(dims);

  if (type == "pure") {
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
      throw ParseError("field 'amplitudes': expected an array of complex values");
    if (j["amplitudes"].size() != total)
      throw ParseError("field 'amplitudes': expected " + std::to_string(total) +
                       " entries for the given dims");
    std::vector<Complex> amps;
    amps.reserve(total);
    for (const auto& a : j["amplitudes"]) amps.push_back(detail::parse_complex(a, "amplitudes"));
    return make_pure(std::move(amps), std::move(dims));
  }
  if (type == "mixed") {
    if (!j.contains("matrix") || !j["matrix"].is_array())
      throw ParseError("field 'matrix': expected an array of rows");
    if (j["matrix"].size() != total)
      throw ParseError("field 'matrix': expected " + std::to_string(total) + " rows");
    ComplexMatrix m(total);
    for (std::size_t r = 0; r < total; ++r) {
      const auto& row = j["matrix"][r];
      if (!row.is_array() || row.size() != total)
        throw ParseError("field 'matrix': row " + std::to_string(r) + " must have " +
                         std::to_string(total) + " entries");
      for (std::size_t c = 0; c < total; ++c)
        m(r, c) = detail::parse_complex(row[c], "matrix");
    }
    return make_density(std::move(m), std::move(dims));
  }
  throw ParseError("field 'type': must be \"pure\" or \"mixed\", got \"" + type + "\"");
}

inline StateVariant read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_state_json(buf.str());
}

inline std::string write_state_json(const PureState& psi) {
  nlohmann::json j;
  j["dims"] = psi.subsystem_dims;
  j["type"] = "pure";
  nlohmann::json amps = nlohmann::json::array();
  for (const Complex& z : psi.amplitudes) amps.push_back(detail::complex_json(z));
  j["amplitudes"] = std::move(amps);
  return j.dump(2) + "\n";
}

inline std::string write_state_json(const DensityMatrix& rho) {
  nlohmann::json j;
  j["dims"] = rho.subsystem_dims;
  j["type"] = "mixed";
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < rho.matrix.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < rho.matrix.dim(); ++c)
      row.push_back(detail::complex_json(rho.matrix(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump(2) + "\n";
}

inline std::string write_state_json(const StateVariant& state) {
  return std::visit([](const auto& s) { return write_state_json(s); }, state);
}

}  // namespace monobound
