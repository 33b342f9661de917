#include "maxsplines/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "maxsplines/symbols.hpp"

namespace maxsplines {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) {
    rows.push_back({r.quantity, std::to_string(r.p), std::to_string(r.n),
                    format_double(r.h), format_double(r.value),
                    format_double(r.bound), format_double(r.ratio),
                    r.pass ? "true" : "false", r.convention});
  }
  return to_csv({"quantity", "p", "n", "h", "value", "bound", "ratio", "pass",
                 "convention"},
                rows);
}

std::string reports_to_json(const std::vector<BoundReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["quantity"] = r.quantity;
    j["p"] = r.p;
    j["n"] = r.n;
    j["h"] = r.h;
    j["value"] = r.value;
    j["bound"] = r.bound;
    j["ratio"] = r.ratio;
    j["pass"] = r.pass;
    if (!r.convention.empty()) j["convention"] = r.convention;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string circulant_to_json(const Circulant& c) {
  ordered_json j;
  j["n"] = c.n;
  j["col"] = c.col;
  return j.dump(2) + "\n";
}

std::string dense_to_csv(const DenseMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(std::size_t(m.rows) * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      rows.push_back({std::to_string(i), std::to_string(j),
                      format_double(m(i, j))});
    }
  }
  return to_csv({"row", "col", "value"}, rows);
}

std::string symbols_to_json(const TwoGridReport& report) {
  const double hc = 2.0 / report.n_coarse;
  ordered_json j;
  j["p"] = report.p;
  j["n"] = report.n_coarse;
  j["h"] = hc;
  j["convention"] =
      report.convention == EConvention::paper ? "paper" : "matrix";
  const int nf = 2 * report.n_coarse;
  ordered_json sym;
  sym["mass"] = mass_symbol(report.p, hc / 2, nf);
  sym["stiffness"] = stiffness_symbol(report.p, hc / 2, nf, report.convention);
  std::vector<double> rho;
  rho.reserve(report.blocks.size());
  for (const auto& b : report.blocks) rho.push_back(b.rho);
  sym["rho_per_frequency"] = rho;
  j["symbols"] = std::move(sym);
  j["q"] = report.q;
  return j.dump(2) + "\n";
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("atomic_write: short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("atomic_write: rename failed for " + path);
  }
}

}  // namespace maxsplines
