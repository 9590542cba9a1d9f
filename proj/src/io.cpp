// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#include "steiner/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace steiner::io {
namespace {

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string circle_json(const Circle<double>& c) {
  return "{\"cx\": " + format_number(c.cx()) + ", \"cy\": " + format_number(c.cy()) +
         ", \"radius\": " + format_number(c.radius) + "}";
}

double number_field(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number())
    throw InputError(std::string("chain JSON: missing numeric field '") + key + "'");
  return obj.at(key).get<double>();
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string chain_to_json(const Chain<double>& chain) {
  std::ostringstream os;
  const auto& g = chain.gauge;
  os << "{\"gauge\": {\"R\": " << format_number(g.R) << ", \"r\": " << format_number(g.r)
     << ", \"d\": " << format_number(g.d) << ", \"n\": " << g.n << "}, \"phase\": "
     << format_number(chain.phase) << ", \"circles\": [";
  for (std::size_t k = 0; k < chain.circles.size(); ++k)
    os << (k ? ", " : "") << circle_json(chain.circles[k]);
  os << "]}\n";
  return os.str();
}

Chain<double> chain_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("chain JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("gauge") || !doc.contains("circles") ||
      !doc.at("circles").is_array())
    throw InputError("chain JSON: expected {\"gauge\", \"phase\", \"circles\"}");
  const auto& g = doc.at("gauge");
  Chain<double> chain;
  chain.gauge.R = number_field(g, "R");
  chain.gauge.r = number_field(g, "r");
  chain.gauge.d = number_field(g, "d");
  if (!g.contains("n") || !g.at("n").is_number_integer())
    throw InputError("chain JSON: gauge.n must be an integer");
  chain.gauge.n = g.at("n").get<int>();
  chain.phase = doc.contains("phase") ? number_field(doc, "phase") : 0.0;
  for (const auto& c : doc.at("circles")) {
    const double radius = number_field(c, "radius");
    if (!(radius > 0.0)) throw InputError("chain JSON: radius must be positive");
    chain.circles.emplace_back(number_field(c, "cx"), number_field(c, "cy"), radius);
  }
  return chain;
}

std::string chain_report_to_json(const ChainReport<double>& report) {
  std::ostringstream os;
  os << "{\"pass\": " << (report.pass ? "true" : "false")
     << ", \"max_residual\": " << format_number(report.max_residual) << ", \"pairs\": [";
  for (std::size_t k = 0; k < report.pairs.size(); ++k) {
    const auto& p = report.pairs[k];
    const char* partner = p.partner == Partner::next          ? "next"
                          : p.partner == Partner::inner_soddy ? "inner"
                                                              : "outer";
    os << (k ? ", " : "") << "{\"index\": " << p.index << ", \"partner\": \"" << partner
       << "\", \"class\": \"" << to_string(p.cls) << "\", \"residual\": "
       << format_number(p.residual) << "}";
  }
  os << "], \"in_range\": [";
  for (std::size_t k = 0; k < report.in_range.size(); ++k)
    os << (k ? ", " : "") << (report.in_range[k] ? "true" : "false");
  os << "]}\n";
  return os.str();
}

std::string feasibility_to_json(const FeasibilityReport<double>& report) {
  std::ostringstream os;
  os << "{\"verdict\": " << (report.verdict ? "true" : "false") << ", \"stages\": [";
  for (std::size_t k = 0; k < report.stages.size(); ++k) {
    const auto& s = report.stages[k];
    os << (k ? ", " : "") << "{\"name\": " << json_string(s.name)
       << ", \"pass\": " << (s.pass ? "true" : "false") << ", \"values\": {";
    for (std::size_t j = 0; j < s.values.size(); ++j)
      os << (j ? ", " : "") << json_string(s.values[j].first) << ": "
         << format_number(s.values[j].second);
    os << "}}";
  }
  os << "], \"candidate\": ";
  if (report.candidate) {
    const auto& c = *report.candidate;
    os << "{\"R\": " << format_number(c.R) << ", \"r\": " << format_number(c.r)
       << ", \"d\": " << format_number(c.d) << "}";
  } else {
    os << "null";
  }
  os << "}\n";
  return os.str();
}

std::string sweep_to_csv(const std::vector<SweepRow<double>>& rows) {
  std::string out = "t,S,L\n";
  for (const auto& row : rows)
    out += format_number(row.t) + "," + format_number(row.S) + "," + format_number(row.L) + "\n";
  return out;
}

std::string emit_chain_svg(const Chain<double>& chain, const Circle<double>& inner,
                           const Circle<double>& outer) {
  const double half = 1.05 * outer.radius;
  // y is flipped so the picture keeps the mathematical orientation.
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << format_fixed6(outer.cx() - half) << " " << format_fixed6(-outer.cy() - half) << " "
     << format_fixed6(2 * half) << " " << format_fixed6(2 * half) << "\">\n";
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\""
     << format_fixed6(outer.radius / 500.0) << "\">\n";
  auto circle = [&](const Circle<double>& c, const char* cls) {
    os << "<circle class=\"" << cls << "\" cx=\"" << format_fixed6(c.cx()) << "\" cy=\""
       << format_fixed6(c.cy()) << "\" r=\"" << format_fixed6(c.radius) << "\"/>\n";
  };
  for (const auto& c : chain.circles) circle(c, "chain");
  circle(inner, "inner");
  circle(outer, "outer");
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace steiner::io
