// Command-line front end: run the verification suite, scan constants over
// parameter grids, and export operators/symbols/basis tabulations.
//
// Exit codes: 0 success, 1 failed bound, 2 usage/configuration error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxsplines/operators.hpp"
#include "maxsplines/serialize.hpp"
#include "maxsplines/verify.hpp"

namespace {

using namespace maxsplines;
using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_range(const std::string& s) {
  std::vector<int> out;
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    out.push_back(std::stoi(s));
    return out;
  }
  const int lo = std::stoi(s.substr(0, dots));
  const int hi = std::stoi(s.substr(dots + 2));
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto comma = s.find(',', pos);
    const std::string tok =
        s.substr(pos, comma == std::string::npos ? std::string::npos
                                                 : comma - pos);
    if (!tok.empty()) out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

EConvention parse_convention(const std::string& s) {
  if (s == "paper") return EConvention::paper;
  if (s == "matrix") return EConvention::matrix;
  throw UsageError("unknown e-convention: " + s);
}

std::optional<double> tolerance_default(const std::string& flag_value) {
  if (!flag_value.empty()) return std::stod(flag_value);
  if (const char* env = std::getenv("MAXSPLINES_TOL")) {
    return std::stod(env);
  }
  return std::nullopt;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    atomic_write(out_path, content);
  }
}

// ---- verify ----

int cmd_verify(int p_max, const std::string& n_set, const std::string& tol,
               const std::string& out_path, const std::string& format) {
  VerifyOptions opts;
  opts.p_max = p_max;
  if (!n_set.empty()) {
    opts.n_set = parse_int_list(n_set);
    if (opts.n_set.empty()) throw UsageError("empty n-set");
  }
  opts.tol_override = tolerance_default(tol);

  const VerifyResult result = run_verification(opts);

  std::printf("%-72s %14s %14s %7s\n", "quantity (p, n, convention)", "value",
              "bound", "pass");
  for (const auto& crit : result.criteria) {
    for (const auto& r : crit.rows) {
      std::string label = r.quantity + " (p=" + std::to_string(r.p) +
                          ", n=" + std::to_string(r.n);
      if (!r.convention.empty()) label += ", " + r.convention;
      label += ")";
      std::printf("%-72s %14.6e %14.6e %7s\n", label.c_str(), r.value, r.bound,
                  r.pass ? "pass" : "FAIL");
      if (!r.pass) {
        std::printf("  ^ failed: value=%.17g bound=%.17g (p=%d, n=%d)\n",
                    r.value, r.bound, r.p, r.n);
      }
    }
  }
  std::printf("\n");
  for (const auto& crit : result.criteria) {
    std::printf("criterion %2d [%s]: %s\n", crit.index,
                crit.pass ? "PASS" : "FAIL", crit.name.c_str());
  }
  if (!out_path.empty()) {
    const auto rows = result.all_rows();
    emit(out_path, format == "json" ? reports_to_json(rows)
                                    : reports_to_csv(rows));
  }
  return result.all_pass() ? 0 : 1;
}

// ---- scan ----

int cmd_scan(const std::string& quantity, const std::string& p_arg,
             const std::string& n_set_arg, double h_arg,
             const std::string& conv_arg, const std::string& out_path,
             const std::string& format) {
  const std::vector<int> ps = parse_range(p_arg.empty() ? "1..8" : p_arg);
  std::vector<int> ns = parse_int_list(n_set_arg.empty() ? "8,16,32"
                                                         : n_set_arg);
  if (ps.empty() || ns.empty()) throw UsageError("empty p or n range");
  const EConvention conv = parse_convention(conv_arg);

  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  if (quantity == "twogrid") {
    header = {"p", "n", "h", "q"};
    for (int n : ns) {
      for (int p : ps) {
        if (p >= n) continue;
        const TwoGridReport rep = two_grid_constant(p, n, conv);
        rows.push_back({std::to_string(p), std::to_string(n),
                        format_double(2.0 / n), format_double(rep.q)});
      }
    }
  } else if (quantity == "inverse") {
    header = {"p", "n", "h", "h_sqrt_lambda_max", "bound"};
    for (int n : ns) {
      for (int p : ps) {
        if (p >= n) continue;
        const SpaceSpec spec = SpaceSpec::reduced(p, n, 0.0, 1.0);
        const RayleighResult r = rayleigh_max(spec, 1);
        rows.push_back({std::to_string(p), std::to_string(n),
                        format_double(spec.h()),
                        format_double(spec.h() * r.sqrt_lambda_max),
                        format_double(2.0 * std::sqrt(3.0))});
      }
    }
  } else if (quantity == "approx") {
    header = {"p", "n", "h", "function", "error", "bound", "ratio"};
    for (int n : ns) {
      for (int p : ps) {
        if (p >= n) continue;
        const SpaceSpec spec = SpaceSpec::reduced(p, n, 0.0, 1.0);
        for (const TestFunction& tf : approximation_battery()) {
          const CoefVector u = l2_project(tf.f, spec);
          const double err = l2_error(tf.f, u);
          const double sem =
              function_l2(tf.fprime, 0.0, 1.0, std::max(n, 32), 12);
          const double bound = std::sqrt(2.0) * spec.h() * sem;
          rows.push_back({std::to_string(p), std::to_string(n),
                          format_double(spec.h()), tf.name, format_double(err),
                          format_double(bound), format_double(err / bound)});
        }
      }
    }
  } else if (quantity == "counterexample") {
    header = {"p", "h", "formula", "quadrature"};
    for (int p : ps) {
      const CounterexampleRatio r = counterexample_ratio(p, h_arg);
      rows.push_back({std::to_string(p), format_double(h_arg),
                      format_double(r.formula), format_double(r.quadrature)});
    }
  } else if (quantity == "tensor2d") {
    header = {"p", "n", "h", "error", "bound", "ratio"};
    for (int n : ns) {
      for (int p : ps) {
        if (p >= n) continue;
        const SpaceSpec spec = SpaceSpec::reduced(p, n, 0.0, 1.0);
        const double pi = std::numbers::pi;
        const Tensor2dResult r = tensor2d_error(
            [&](double x, double y) { return std::cos(pi * x) * std::cos(pi * y); },
            [&](double x, double y) { return -pi * std::sin(pi * x) * std::cos(pi * y); },
            [&](double x, double y) { return -pi * std::cos(pi * x) * std::sin(pi * y); },
            spec);
        const double bound = 2.0 * spec.h() * r.h1_seminorm;
        rows.push_back({std::to_string(p), std::to_string(n),
                        format_double(spec.h()), format_double(r.error),
                        format_double(bound), format_double(r.error / bound)});
      }
    }
  } else {
    throw UsageError("unknown quantity: " + quantity);
  }

  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j;
      for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = row[i];
      arr.push_back(std::move(j));
    }
    emit(out_path, arr.dump(2) + "\n");
  } else {
    emit(out_path, to_csv(header, rows));
  }
  return 0;
}

// ---- export ----

SpaceKind parse_kind(const std::string& s) {
  if (s == "full") return SpaceKind::full;
  if (s == "periodic") return SpaceKind::periodic;
  if (s == "reduced") return SpaceKind::reduced;
  throw UsageError("unknown kind: " + s);
}

std::string dense_to_json(const DenseMatrix& m) {
  ordered_json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["values"] = m.a;
  return j.dump(2) + "\n";
}

int cmd_export(const std::string& target, int p, int n,
               const std::string& kind_arg, const std::string& conv_arg,
               const std::string& out_path, const std::string& format) {
  if (target == "mass" || target == "stiffness") {
    const double h = 1.0 / n;  // space-level default domain (0,1)
    const Circulant c = (target == "mass") ? mass_circulant(p, h, n)
                                           : stiffness_circulant(p, h, n);
    emit(out_path,
         format == "csv" ? dense_to_csv(c.to_dense()) : circulant_to_json(c));
  } else if (target == "prolongation") {
    const DenseMatrix m = prolongation(p, n);
    emit(out_path, format == "csv" ? dense_to_csv(m) : dense_to_json(m));
  } else if (target == "symbols") {
    // two-grid quantities live on (-1,1)
    const TwoGridReport rep =
        two_grid_constant(p, n, parse_convention(conv_arg));
    emit(out_path, symbols_to_json(rep));
  } else if (target == "basis") {
    std::vector<std::vector<std::string>> rows;
    const int samples_per_element = 16;
    const int total = n * samples_per_element;
    if (kind_arg == "clamped") {
      // open-knot-vector comparison tabulation
      for (int i = 0; i < clamped_dimension(p, n); ++i) {
        for (int j = 0; j <= total; ++j) {
          const double x = static_cast<double>(j) / total;
          rows.push_back({std::to_string(i), format_double(x),
                          format_double(clamped_basis_value(p, n, 0.0, 1.0, i, x))});
        }
      }
    } else {
      const SpaceKind kind = parse_kind(kind_arg);
      SpaceSpec spec = SpaceSpec::full(p, n, 0.0, 1.0);
      if (kind == SpaceKind::periodic) spec = SpaceSpec::periodic(p, n, 0.0, 1.0);
      if (kind == SpaceKind::reduced) spec = SpaceSpec::reduced(p, n, 0.0, 1.0);
      const SpaceBasis basis(spec);
      for (int ordinal = 0; ordinal < spec.dimension(); ++ordinal) {
        for (int j = 0; j <= total; ++j) {
          const double x = spec.a + (spec.b - spec.a) * j / total;
          rows.push_back({std::to_string(ordinal), format_double(x),
                          format_double(basis.basis_value(ordinal, x))});
        }
      }
    }
    emit(out_path, to_csv({"index", "x", "value"}, rows));
  } else {
    throw UsageError("unknown target: " + target);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uniform B-splines of maximum smoothness: operators, symbols, "
               "and certified constants"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // keep --h free for grid size

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->set_help_flag("--help", "print help");
  int p_max = 8;
  std::string v_nset, v_tol, v_out, v_format = "csv";
  verify->add_option("--p-max", p_max, "largest degree to scan");
  verify->add_option("--n-set", v_nset, "comma-separated element counts");
  verify->add_option("--tol", v_tol, "override every slack tolerance");
  verify->add_option("--out", v_out, "also write the report table here");
  verify->add_option("--format", v_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // scan
  auto* scan = app.add_subcommand("scan", "scan a quantity over a (p,n) grid");
  scan->set_help_flag("--help", "print help");
  std::string s_quantity, s_p, s_nset, s_conv = "matrix", s_out,
              s_format = "csv";
  double s_h = 0.1;
  scan->add_option("--quantity", s_quantity,
                   "twogrid|inverse|approx|counterexample|tensor2d")
      ->required();
  scan->add_option("--p", s_p, "degree or range, e.g. 3 or 1..10");
  scan->add_option("--n-set", s_nset, "comma-separated element counts");
  scan->add_option("--h", s_h, "grid size (counterexample scan)");
  scan->add_option("--e-convention", s_conv, "paper|matrix")
      ->check(CLI::IsMember({"paper", "matrix"}));
  scan->add_option("--out", s_out, "output path (stdout if omitted)");
  scan->add_option("--format", s_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // export
  auto* exp = app.add_subcommand("export", "export an operator or tabulation");
  exp->set_help_flag("--help", "print help");
  std::string e_target, e_kind = "full", e_conv = "matrix", e_out,
              e_format = "json";
  int e_p = 1, e_n = 8;
  exp->add_option("--target", e_target,
                  "mass|stiffness|prolongation|symbols|basis")
      ->required();
  exp->add_option("--p", e_p, "degree");
  exp->add_option("--n", e_n, "element count");
  exp->add_option("--kind", e_kind,
                  "full|periodic|reduced|clamped (basis export)");
  exp->add_option("--e-convention", e_conv, "paper|matrix")
      ->check(CLI::IsMember({"paper", "matrix"}));
  exp->add_option("--out", e_out, "output path (stdout if omitted)");
  exp->add_option("--format", e_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(p_max, v_nset, v_tol, v_out, v_format);
    }
    if (scan->parsed()) {
      return cmd_scan(s_quantity, s_p, s_nset, s_h, s_conv, s_out, s_format);
    }
    if (exp->parsed()) {
      return cmd_export(e_target, e_p, e_n, e_kind, e_conv, e_out, e_format);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
