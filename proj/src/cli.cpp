// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#include "steiner/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "steiner/io.hpp"
#include "steiner/steiner.hpp"

namespace steiner::cli {
namespace {

using io::format_number;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GaugeArgs {
  double R = 0;
  double r = 0;
  int n = 0;
  std::optional<double> d;

  void attach(CLI::App* cmd) {
    cmd->add_option("--R", R, "outer Soddy radius")->required();
    cmd->add_option("--r", r, "inner Soddy radius")->required();
    cmd->add_option("--n", n, "chain length")->required();
    cmd->add_option("--d", d, "center distance (derived from the Pedoe relation if omitted)");
  }

  Gauge<double> resolve() const {
    if (!d) return make_gauge(R, r, n);
    Gauge<double> g{R, r, *d, n};
    require_valid(g);
    return g;
  }
};

std::array<double, 4> parse_radii(const std::string& text) {
  std::array<double, 4> radii{};
  std::stringstream ss(text);
  std::string item;
  std::size_t count = 0;
  while (std::getline(ss, item, ',')) {
    if (count == 4) throw UsageError("--radii takes exactly four values");
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size())
      throw UsageError("--radii: not a number: '" + item + "'");
    radii[count++] = v;
  }
  if (count != 4) throw UsageError("--radii takes exactly four values");
  return radii;
}

std::string json_array(const Eigen::VectorXd& v) {
  std::string s = "[";
  for (Eigen::Index k = 0; k < v.size(); ++k) s += (k ? ", " : "") + format_number(v(k));
  return s + "]";
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (format == f) return;
  throw UsageError("unsupported --format '" + format + "' for this command");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Steiner chain invariants, feasibility and extremal chains", "steiner"};
  app.require_subcommand(1, 1);
  std::string format;

  GaugeArgs gauge_args;
  auto add_gauge_cmd = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    gauge_args.attach(cmd);
    cmd->add_option("--format", format, "json | csv | svg | text");
    return cmd;
  };

  CLI::App* gauge_cmd = app.add_subcommand("gauge", "check or complete a Soddy gauge");
  gauge_cmd->add_option("--R", gauge_args.R)->required();
  gauge_cmd->add_option("--r", gauge_args.r)->required();
  gauge_cmd->add_option("--n", gauge_args.n)->required();
  gauge_cmd->add_option("--d", gauge_args.d);
  gauge_cmd->add_option("--format", format);

  int k_max = 0;
  double phase = 0.0;
  CLI::App* moments_cmd = add_gauge_cmd("moments", "moments of bends");
  moments_cmd->add_option("--k", k_max, "highest moment (default n - 1)");
  moments_cmd->add_option("--phase", phase, "annulus phase of the measured chain");

  CLI::App* range_cmd = add_gauge_cmd("range", "poristic range of radii and bends");

  double u = 0.0;
  CLI::App* neighbors_cmd = add_gauge_cmd("neighbors", "bends of the neighbours of radius u");
  neighbors_cmd->add_option("--u", u, "radius of the circle")->required();

  std::string radii_text;
  double tol = 1e-6;
  CLI::App* feasible_cmd = app.add_subcommand("feasible", "feasibility test for four radii");
  feasible_cmd->add_option("--radii", radii_text, "r1,r2,r3,r4 in cyclic order")->required();
  feasible_cmd->add_option("--tol", tol, "relative tolerance");
  feasible_cmd->add_option("--format", format);

  std::string target;
  CLI::App* extremal_cmd = add_gauge_cmd("extremal", "extremal area or perimeter (n = 4)");
  extremal_cmd->add_option("--target", target, "area | perimeter")
      ->required()
      ->check(CLI::IsMember({"area", "perimeter"}));

  CLI::App* construct_cmd = add_gauge_cmd("construct", "build a chain at a given phase");
  construct_cmd->add_option("--phase", phase, "annulus phase in radians");

  int points = 0;
  CLI::App* sweep_cmd = add_gauge_cmd("sweep", "tabulate S(t) and L(t) (n = 4)");
  sweep_cmd->add_option("--points", points, "grid size")->required();

  std::string input;
  double verify_tol = 1e-9;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a chain JSON document");
  verify_cmd->add_option("--input", input, "file path, or - for standard input")->required();
  verify_cmd->add_option("--tol", verify_tol, "relative tolerance");
  verify_cmd->add_option("--format", format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "steiner: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gauge_cmd->parsed()) {
      require_format(format.empty() ? "json" : format, {"json"});
      const double R = gauge_args.R, r = gauge_args.r;
      const int n = gauge_args.n;
      if (!(r > 0) || !(R > r) || n < 3) throw InputError("gauge requires R > r > 0 and n >= 3");
      const double disc = pedoe_discriminant(R, r, n);
      bool valid = true;
      double d = 0;
      if (gauge_args.d) {
        d = *gauge_args.d;
        valid = validate_gauge(R, r, d, n, 1e-9);
      } else {
        try {
          d = make_gauge(R, r, n).d;
        } catch (const DomainError&) {
          valid = false;
          d = std::nan("");
        }
      }
      out << "{\"R\": " << format_number(R) << ", \"r\": " << format_number(r)
          << ", \"d\": " << format_number(d) << ", \"n\": " << n
          << ", \"q\": " << format_number(porism_q<double>(n))
          << ", \"pedoe_d_squared\": " << format_number(disc)
          << ", \"valid\": " << (valid ? "true" : "false") << "}\n";
      return valid ? 0 : 1;
    }

    if (moments_cmd->parsed()) {
      require_format(format.empty() ? "json" : format, {"json"});
      const Gauge<double> g = gauge_args.resolve();
      const int k = k_max > 0 ? k_max : g.n - 1;
      const auto numeric = moments_numeric(g, k, phase);
      std::string closed = "null";
      if (g.n == 3 || g.n == 4) {
        const auto m = g.n == 3 ? moments3(g) : moments4(g);
        closed = json_array(m.values.head(std::min<Eigen::Index>(k, m.values.size())));
      }
      out << "{\"n\": " << g.n << ", \"k\": " << k << ", \"phase\": " << format_number(phase)
          << ", \"numeric\": " << json_array(numeric.values) << ", \"closed_form\": " << closed
          << "}\n";
      return 0;
    }

    if (range_cmd->parsed()) {
      require_format(format.empty() ? "json" : format, {"json"});
      const auto pr = poristic_range(gauge_args.resolve());
      out << "{\"r_lo\": " << format_number(pr.r_lo) << ", \"r_hi\": " << format_number(pr.r_hi)
          << ", \"b_lo\": " << format_number(pr.b_lo) << ", \"b_hi\": " << format_number(pr.b_hi)
          << "}\n";
      return 0;
    }

    if (neighbors_cmd->parsed()) {
      require_format(format.empty() ? "json" : format, {"json"});
      const Gauge<double> g = gauge_args.resolve();
      const auto y = yiu_quadratic(g, u);
      const auto [v_minus, v_plus] = neighbor_curvatures(g, u);
      out << "{\"u\": " << format_number(u) << ", \"alpha\": " << format_number(y.alpha)
          << ", \"beta\": " << format_number(y.beta) << ", \"gamma\": " << format_number(y.gamma)
          << ", \"v_minus\": " << format_number(v_minus)
          << ", \"v_plus\": " << format_number(v_plus) << "}\n";
      return 0;
    }

    if (feasible_cmd->parsed()) {
      require_format(format.empty() ? "json" : format, {"json"});
      const auto report = feasibility_test(parse_radii(radii_text), tol);
      out << io::feasibility_to_json(report);
      return report.verdict ? 0 : 1;
    }

    if (extremal_cmd->parsed()) {
      const std::string fmt = format.empty() ? "text" : format;
      require_format(fmt, {"text", "json"});
      const Gauge<double> g = gauge_args.resolve();
      const bool area = target == "area";
      const auto res = area ? extremal_area(g) : extremal_perimeter(g);
      const char* key = area ? "A" : "L";
      auto bends_text = [](const std::array<double, 4>& b, const char* sep) {
        std::string s;
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? sep : "") + format_number(b[i]);
        return s;
      };
      if (fmt == "text") {
        out << "target " << target << "\n"
            << "unit " << to_string(res.unit) << "\n"
            << key << "_max " << format_number(res.max_value) << "\n"
            << key << "_min " << format_number(res.min_value) << "\n";
        if (area) {
          const double pi = std::numbers::pi;
          out << "S_max " << format_number(res.max_value / pi) << "\n"
              << "S_min " << format_number(res.min_value / pi) << "\n";
        }
        out << "argmax " << to_string(res.argmax.kind) << " " << bends_text(res.argmax.bends, " ")
            << "\n"
            << "argmin " << to_string(res.argmin.kind) << " " << bends_text(res.argmin.bends, " ")
            << "\n";
      } else {
        out << "{\"target\": \"" << target << "\", \"unit\": \"" << to_string(res.unit)
            << "\", \"max\": " << format_number(res.max_value)
            << ", \"min\": " << format_number(res.min_value) << ", \"argmax\": {\"kind\": \""
            << to_string(res.argmax.kind) << "\", \"bends\": ["
            << bends_text(res.argmax.bends, ", ") << "]}, \"argmin\": {\"kind\": \""
            << to_string(res.argmin.kind) << "\", \"bends\": ["
            << bends_text(res.argmin.bends, ", ") << "]}}\n";
      }
      return 0;
    }

    if (construct_cmd->parsed()) {
      const std::string fmt = format.empty() ? "json" : format;
      require_format(fmt, {"json", "svg"});
      const Gauge<double> g = gauge_args.resolve();
      const auto chain = construct_chain(g, phase);
      if (fmt == "json") {
        out << io::chain_to_json(chain);
      } else {
        const auto [inner, outer] = soddy_circles(g);
        out << io::emit_chain_svg(chain, inner, outer);
      }
      return 0;
    }

    if (sweep_cmd->parsed()) {
      require_format(format.empty() ? "csv" : format, {"csv"});
      out << io::sweep_to_csv(sweep(gauge_args.resolve(), points));
      return 0;
    }

    if (verify_cmd->parsed()) {
      require_format(format.empty() ? "json" : format, {"json"});
      std::string text;
      if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      } else {
        std::ifstream file(input);
        if (!file) throw InputError("cannot open " + input);
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
      }
      const auto report = verify_chain(io::chain_from_json(text), verify_tol);
      out << io::chain_report_to_json(report);
      return report.pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "steiner: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "steiner: " << e.what() << "\n";
    return 2;
  }
  err << "steiner: no command\n";
  return 2;
}

}  // namespace steiner::cli
