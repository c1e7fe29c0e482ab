#include "gersh/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gersh/error.hpp"

namespace gersh {

using nlohmann::json;

ComplexMatrix parse_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix_text(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ComplexMatrix parse_matrix_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C" in the message.
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level must be an object");
  if (!doc.contains("n")) throw InputError("missing field \"n\"");
  const json& jn = doc["n"];
  if (!jn.is_number_integer() || jn.get<long long>() < 1) {
    throw InputError("field \"n\": expected a positive integer");
  }
  const auto n = static_cast<std::size_t>(jn.get<long long>());
  if (!doc.contains("entries")) throw InputError("missing field \"entries\"");
  const json& je = doc["entries"];
  if (!je.is_array()) throw InputError("field \"entries\": expected an array");
  if (je.size() != n * n) throw InputError("expected " + std::to_string(n * n) + " entries");

  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t k = 0; k < je.size(); ++k) {
    const json& pair = je[k];
    const std::string where = "entries[" + std::to_string(k) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      throw InputError(where + ": expected a [re, im] pair");
    }
    for (std::size_t c = 0; c < 2; ++c) {
      if (!pair[c].is_number()) {
        throw InputError(where + "[" + std::to_string(c) + "]: expected a number");
      }
    }
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexMatrix(n, std::move(entries));
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string serialize_matrix(const ComplexMatrix& m) {
  std::string out = "{\"n\":" + std::to_string(m.size()) + ",\"entries\":[";
  bool first = true;
  for (const Complex& e : m.entries()) {
    if (!first) out += ',';
    first = false;
    out += '[' + format_number(e.real()) + ',' + format_number(e.imag()) + ']';
  }
  out += "]}\n";
  return out;
}

}  // namespace gersh
