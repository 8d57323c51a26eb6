// Copyright 2026 The ddlab Authors
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

#include "ddlab/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ddlab/error.hpp"
#include "json.hpp"

namespace ddlab {
namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + msg);
}

// Next non-blank line with any trailing '\r' removed; false at EOF.
bool next_line(std::istream& in, std::string* line, std::size_t* line_no) {
  while (std::getline(in, *line)) {
    ++*line_no;
    if (!line->empty() && line->back() == '\r') line->pop_back();
    if (!line->empty()) return true;
  }
  return false;
}

long long parse_field(std::string_view field, std::string_view name,
                      std::size_t line_no) {
  if (field.substr(0, name.size() + 1) != std::string(name) + "=") {
    parse_error(line_no, "expected '" + std::string(name) + "=<int>'");
  }
  field.remove_prefix(name.size() + 1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    parse_error(line_no, "bad integer in '" + std::string(name) + "='");
  }
  return v;
}

Rational parse_rational(std::string_view s, std::size_t line_no) {
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    parse_error(line_no, e.what());
  }
}

Config parse_config_body(std::istream& in, const std::string& header,
                         std::size_t line_no) {
  auto head = split(header);
  if (head.size() != 2) parse_error(line_no, "expected header 'k=<int>,c=<int>'");
  const long long k = parse_field(head[0], "k", line_no);
  const long long c = parse_field(head[1], "c", line_no);
  if (k < 2 || c < 1) parse_error(line_no, "need k >= 2 and c >= 1");

  std::vector<Rational> p1;
  std::vector<Point> p2;
  std::string line;
  while (next_line(in, &line, &line_no)) {
    auto fields = split(line);
    if (fields[0] == "P1") {
      if (fields.size() != 2) parse_error(line_no, "P1 line needs one value");
      if (!p2.empty()) parse_error(line_no, "P1 line after P2 lines");
      p1.push_back(parse_rational(fields[1], line_no));
    } else if (fields[0] == "P2") {
      if (fields.size() != static_cast<std::size_t>(k) + 1) {
        parse_error(line_no, "P2 line needs " + std::to_string(k) + " values");
      }
      std::vector<Rational> coords;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        coords.push_back(parse_rational(fields[i], line_no));
      }
      p2.emplace_back(std::move(coords));
    } else {
      parse_error(line_no, "expected 'P1' or 'P2' record");
    }
  }
  try {
    return Config(static_cast<int>(k), static_cast<int>(c), std::move(p1),
                  std::move(p2));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

SqDistMatrix parse_matrix_body(std::istream& in, const std::string& header,
                               std::size_t line_no) {
  auto head = split(header);
  if (head.size() != 2) parse_error(line_no, "expected header 'n=<int>,m=<int>'");
  const long long n = parse_field(head[0], "n", line_no);
  const long long m = parse_field(head[1], "m", line_no);
  if (n < 1 || m < 1) parse_error(line_no, "need n, m >= 1");

  SqDistMatrix out;
  out.n = static_cast<std::size_t>(n);
  out.m = static_cast<std::size_t>(m);
  out.provenance = SqDistMatrix::Provenance::kAnalytic;
  out.name = "file";
  std::string line;
  std::size_t rows = 0;
  while (next_line(in, &line, &line_no)) {
    auto fields = split(line);
    if (fields.size() != out.m) {
      parse_error(line_no, "row needs " + std::to_string(out.m) + " values");
    }
    for (auto f : fields) {
      Rational v = parse_rational(f, line_no);
      if (v.sign() < 0) parse_error(line_no, "negative squared distance");
      out.entries.push_back(std::move(v));
    }
    ++rows;
  }
  if (rows != out.n) {
    parse_error(line_no, "expected " + std::to_string(out.n) + " rows, got " +
                             std::to_string(rows));
  }
  return out;
}

}  // namespace

Config read_config(std::istream& in) {
  std::string header;
  std::size_t line_no = 0;
  if (!next_line(in, &header, &line_no)) parse_error(line_no, "empty input");
  return parse_config_body(in, header, line_no);
}

void write_config(std::ostream& out, const Config& cfg) {
  out << "k=" << cfg.k() << ",c=" << cfg.c() << "\n";
  for (const auto& a : cfg.p1()) out << "P1," << a.to_string() << "\n";
  for (const auto& p : cfg.p2()) {
    out << "P2";
    for (const auto& v : p.coords()) out << "," << v.to_string();
    out << "\n";
  }
}

SqDistMatrix read_matrix(std::istream& in) {
  std::string header;
  std::size_t line_no = 0;
  if (!next_line(in, &header, &line_no)) parse_error(line_no, "empty input");
  return parse_matrix_body(in, header, line_no);
}

void write_matrix(std::ostream& out, const SqDistMatrix& matrix) {
  out << "n=" << matrix.n << ",m=" << matrix.m << "\n";
  for (std::size_t i = 0; i < matrix.n; ++i) {
    for (std::size_t j = 0; j < matrix.m; ++j) {
      if (j != 0) out << ",";
      out << matrix.at(i, j).to_string();
    }
    out << "\n";
  }
}

Input read_input(std::istream& in) {
  std::string header;
  std::size_t line_no = 0;
  if (!next_line(in, &header, &line_no)) parse_error(line_no, "empty input");
  if (header.rfind("k=", 0) == 0) return parse_config_body(in, header, line_no);
  if (header.rfind("n=", 0) == 0) return parse_matrix_body(in, header, line_no);
  parse_error(line_no, "unrecognised header '" + header + "'");
}

Input read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  return read_input(in);
}

void write_gamma_csv(std::ostream& out, const GammaSet& gamma) {
  for (const auto& h : gamma.curves) {
    out << h.p << "," << h.q << "," << h.alpha.to_string() << ","
        << h.beta.to_string() << "," << h.gamma.to_string() << "\n";
  }
}

std::string to_json(const EnergyReport& r, int indent) {
  json hist = json::array();
  for (const auto& [size, count] : r.histogram) hist.push_back({size, count});
  json j = {{"n", r.n},   {"m", r.m},   {"x", r.x},         {"Q", r.q},
            {"Q0", r.q0}, {"Q1", r.q1}, {"histogram", hist}};
  return j.dump(indent);
}

std::string to_json(const BoundReport& r, int indent) {
  json j = {{"n", r.n},
            {"m", r.m},
            {"regime", std::string(to_string(r.regime))},
            {"terms",
             {{"m2", r.terms.m2},
              {"n23m23", r.terms.n23m23},
              {"logterm", r.terms.logterm},
              {"n2", r.terms.n2}}},
            {"min", r.min_value},
            {"piecewise", r.piecewise_value}};
  return j.dump(indent);
}

std::string to_json(const IncidenceReport& r, int indent) {
  json j = {{"total", r.total},
            {"per_sign", {{"pos", r.positive}, {"neg", r.negative}}},
            {"per_curve", r.per_curve}};
  return j.dump(indent);
}

}  // namespace ddlab
