#include "skoro/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace skoro {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim spaces and a trailing CR
    std::size_t b = field.find_first_not_of(" \t\r");
    std::size_t e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return out;
}

double parse_number(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadInput, where + ": not a number: '" + s + "'");
  }
}

}  // namespace

SampledTrace read_trace_csv(std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::BadInput, source_name + ": empty file");
  const auto header = split_csv_line(line);
  if (header.empty() || header[0] != "t")
    throw Error(ErrorCode::BadInput, source_name + ": line 1: header must start with 't'");
  const std::size_t n = header.size() - 1;
  if (n == 0)
    throw Error(ErrorCode::BadInput, source_name + ": line 1: no value columns");

  std::vector<std::pair<double, std::vector<double>>> raw;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != n + 1)
      throw Error(ErrorCode::BadInput, source_name + ": line " + std::to_string(lineno) +
                                           ": expected " + std::to_string(n + 1) + " fields");
    const std::string where = source_name + ": line " + std::to_string(lineno);
    std::vector<double> coords;
    coords.reserve(n);
    const double t = parse_number(fields[0], where + ": field t");
    for (std::size_t k = 1; k <= n; ++k)
      coords.push_back(parse_number(fields[k], where + ": field " + header[k]));
    raw.emplace_back(t, std::move(coords));
  }
  return validate_trace(raw);
}

SampledTrace read_trace_json(std::istream& in, const std::string& source_name) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, source_name + ": " + e.what());
  }
  if (!doc.contains("samples") || !doc["samples"].is_array())
    throw Error(ErrorCode::BadInput, source_name + ": missing 'samples' array");
  std::vector<std::pair<double, std::vector<double>>> raw;
  std::size_t idx = 0;
  for (const auto& item : doc["samples"]) {
    const std::string where = source_name + ": samples[" + std::to_string(idx++) + "]";
    if (!item.contains("t") || !item["t"].is_number())
      throw Error(ErrorCode::BadInput, where + ": field 't' must be a number");
    if (!item.contains("x") || !item["x"].is_array())
      throw Error(ErrorCode::BadInput, where + ": field 'x' must be an array");
    std::vector<double> coords;
    for (const auto& c : item["x"]) {
      if (!c.is_number())
        throw Error(ErrorCode::BadInput, where + ": field 'x' must hold numbers");
      coords.push_back(c.get<double>());
    }
    raw.emplace_back(item["t"].get<double>(), std::move(coords));
  }
  return validate_trace(raw);
}

SampledTrace read_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, path + ": cannot open");
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return json ? read_trace_json(in, path) : read_trace_csv(in, path);
}

std::string write_trace_json(const SampledTrace& trace) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : trace.samples) {
    nlohmann::json x = nlohmann::json::array();
    for (double v : s.value.coords) x.push_back(v);
    samples.push_back({{"t", s.t}, {"x", x}});
  }
  return nlohmann::json{{"samples", samples}}.dump();
}

std::string write_trace_csv(const SampledTrace& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "t";
  for (std::size_t k = 1; k <= trace.dim(); ++k) out << ",x" << k;
  out << "\n";
  for (const auto& s : trace.samples) {
    out << s.t;
    for (double v : s.value.coords) out << "," << v;
    out << "\n";
  }
  return out.str();
}

SampledTrace apply_scale(const SampledTrace& trace, const std::vector<double>& factors) {
  if (factors.empty()) return trace;
  if (factors.size() != trace.dim() + 1)
    throw Error(ErrorCode::BadInput, "scale needs n value factors plus one time factor");
  for (double fct : factors)
    if (!(fct > 0.0))
      throw Error(ErrorCode::BadInput, "scale factors must be positive");
  SampledTrace out = trace;
  for (auto& s : out.samples) {
    for (std::size_t k = 0; k < s.value.dim(); ++k) s.value[k] *= factors[k];
    s.t *= factors.back();
  }
  return out;
}

}  // namespace skoro
