// Copyright 2026 The unifac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unifac/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace unifac::io {

namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text.begin(), text.end());
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

double number(const json& value, const char* what) {
  if (!value.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite");
  return x;
}

std::size_t dimension(const json& doc) {
  const json& n = field(doc, "n");
  if (!n.is_number_integer()) throw ParseError("\"n\" must be an integer");
  if (n.is_number_unsigned()) return n.get<std::size_t>();
  if (n.get<long long>() < 0) throw ParseError("\"n\" must be nonnegative");
  return static_cast<std::size_t>(n.get<long long>());
}

std::vector<double> number_array(const json& doc, const char* name) {
  const json& arr = field(doc, name);
  if (!arr.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& x : arr) out.push_back(number(x, name));
  return out;
}

void append_array(std::string& out, std::span<const double> xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(xs[i]);
  }
  out += ']';
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_matrix(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  std::string out = "{\n  \"n\": " + std::to_string(n) + ",\n  \"entries\": [";
  for (std::size_t i = 0; i < n; ++i) {
    out += i == 0 ? "\n    [" : ",\n    [";
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out += ", ";
      out += '[' + format_number(m(i, j).real()) + ", " + format_number(m(i, j).imag()) + ']';
    }
    out += ']';
  }
  out += n == 0 ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

ComplexMatrix parse_matrix(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n = dimension(doc);
  const json& rows = field(doc, "entries");
  if (!rows.is_array()) throw ParseError("\"entries\" must be an array");
  if (n == 0) throw DimensionError("matrix dimension must be positive");
  if (rows.size() != n) {
    throw DimensionError("expected " + std::to_string(n) + " rows, got " +
                         std::to_string(rows.size()));
  }
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const json& row : rows) {
    if (!row.is_array()) throw ParseError("each row of \"entries\" must be an array");
    if (row.size() != n) {
      throw DimensionError("expected " + std::to_string(n) + " entries per row, got " +
                           std::to_string(row.size()));
    }
    for (const json& pair : row) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("matrix entries must be [re, im] pairs");
      }
      entries.emplace_back(number(pair[0], "entry"), number(pair[1], "entry"));
    }
  }
  return ComplexMatrix(n, std::move(entries));
}

std::string format_params(const ParamDocument& doc) {
  std::string out = "{\n  \"n\": " + std::to_string(doc.params.n()) + ",\n  \"angles\": ";
  append_array(out, doc.params.angles());
  out += ",\n  \"phases\": ";
  append_array(out, doc.params.phases());
  if (doc.special_unitary) out += ",\n  \"special_unitary\": true";
  out += "\n}\n";
  return out;
}

ParamDocument parse_params(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n = dimension(doc);
  std::vector<double> angles = number_array(doc, "angles");
  std::vector<double> phases = number_array(doc, "phases");
  bool special = false;
  if (auto it = doc.find("special_unitary"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError("\"special_unitary\" must be a boolean");
    special = it->get<bool>();
  }
  return ParamDocument{ParameterSet(n, std::move(angles), std::move(phases)), special};
}

std::string format_givens(std::size_t n, std::span<const GivensChain> levels) {
  std::string out = "{\n  \"n\": " + std::to_string(n) + ",\n  \"levels\": [";
  for (std::size_t k = 0; k < levels.size(); ++k) {
    out += k == 0 ? "\n    " : ",\n    ";
    out += "{\"level\": " + std::to_string(k) + ", \"blocks\": [";
    const auto blocks = levels[k].blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b > 0) out += ", ";
      out += "{\"plane\": " + std::to_string(blocks[b].plane + k) +
             ", \"angle\": " + format_number(blocks[b].angle) + '}';
    }
    out += "]}";
  }
  out += levels.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw ParseError("failed writing " + path);
}

}  // namespace unifac::io
