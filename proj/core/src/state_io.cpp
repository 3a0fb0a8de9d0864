#include "spinor_inv/state_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace spinv {
namespace {

using nlohmann::json;

void line_column(std::string_view text, std::size_t byte, int& line, int& column) {
  line = 1;
  column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

}  // namespace

StateTensor parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    int line = 0;
    int column = 0;
    line_column(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
    throw StateFormatError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                               ": " + e.what(),
                           line, column);
  }
  if (!doc.is_object()) throw StateFormatError("state file must hold a JSON object", 0, 0);
  if (!doc.contains("particles") || !doc["particles"].is_number_integer()) {
    throw StateFormatError("missing integer field \"particles\"", 0, 0);
  }
  const int n = doc["particles"].get<int>();
  if (n < 1 || n > 8) throw StateFormatError("\"particles\" must be in 1..8", 0, 0);
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw StateFormatError("missing array field \"coefficients\"", 0, 0);
  }
  const json& arr = doc["coefficients"];
  if (arr.size() != tensor_size(n)) {
    throw StateFormatError("expected " + std::to_string(tensor_size(n)) + " coefficients for " +
                               std::to_string(n) + " particles, got " + std::to_string(arr.size()),
                           0, 0);
  }
  std::vector<cplx> c;
  c.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const json& z = arr[k];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw StateFormatError("coefficient " + std::to_string(k) + " must be a [re, im] pair", 0, 0);
    }
    c.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  try {
    return StateTensor(n, std::move(c));
  } catch (const std::invalid_argument& e) {
    throw StateFormatError(e.what(), 0, 0);
  }
}

StateTensor read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFormatError("cannot open state file '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_state_json(ss.str());
  } catch (const StateFormatError& e) {
    throw StateFormatError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::string state_to_json(const StateTensor& state, const std::string& name) {
  json doc = json::object();
  if (!name.empty()) doc["name"] = name;
  doc["particles"] = state.particles();
  json arr = json::array();
  for (const cplx& z : state.coefficients()) arr.push_back({z.real(), z.imag()});
  doc["coefficients"] = std::move(arr);
  return doc.dump(1) + "\n";
}

}  // namespace spinv
