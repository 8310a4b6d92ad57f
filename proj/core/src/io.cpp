#include "cvinfo/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace cvinfo {

namespace {

using nlohmann::json;

constexpr double kFileSymmetryTol = 1e-9;

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

CovarianceMatrix parse_cm_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("CM JSON: parse error: ") +
                                e.what());
  }
  if (!doc.is_object() || !doc.contains("modes") || !doc.contains("matrix")) {
    throw std::invalid_argument(
        "CM JSON: expected object with \"modes\" and \"matrix\"");
  }
  if (!doc["modes"].is_number_integer() || doc["modes"].get<int>() < 1) {
    throw std::invalid_argument("CM JSON: \"modes\" must be a positive integer");
  }
  const int n = doc["modes"].get<int>();
  const int dim = 2 * n;
  const json& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw std::invalid_argument("CM JSON: \"matrix\" must have 2n rows");
  }
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const json& row = rows[static_cast<std::size_t>(j)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw std::invalid_argument("CM JSON: each row must have 2n entries");
    }
    for (int k = 0; k < dim; ++k) {
      const json& cell = row[static_cast<std::size_t>(k)];
      if (!cell.is_number()) {
        throw std::invalid_argument("CM JSON: matrix entries must be numbers");
      }
      m(j, k) = cell.get<double>();
      if (!std::isfinite(m(j, k))) {
        throw std::invalid_argument("CM JSON: matrix entries must be finite");
      }
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      const double gap = std::abs(m(j, k) - m(k, j));
      if (gap > kFileSymmetryTol * std::max(1.0, std::abs(m(j, k)))) {
        throw std::invalid_argument("CM JSON: matrix is not symmetric");
      }
    }
  }
  Matrix sym = 0.5 * (m + m.transpose());
  try {
    return CovarianceMatrix(std::move(sym));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("CM JSON: ") + e.what());
  }
}

std::string to_cm_json(const CovarianceMatrix& v) {
  json rows = json::array();
  for (int j = 0; j < v.dim(); ++j) {
    json row = json::array();
    for (int k = 0; k < v.dim(); ++k) {
      row.push_back(v.matrix()(j, k));
    }
    rows.push_back(std::move(row));
  }
  json doc;
  doc["modes"] = v.modes();
  doc["matrix"] = std::move(rows);
  return doc.dump();
}

CovarianceMatrix read_cm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_cm_json(text);
}

void write_cm_file(const CovarianceMatrix& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot open file for writing: " + path);
  }
  out << to_cm_json(v) << "\n";
}

std::string to_json(const SteeringReport& report) {
  json doc;
  doc["direction"] = json::array({report.measured, report.steered});
  doc["schur_spectrum"] = report.schur_spectrum.values;
  doc["G"] = report.steerability;
  doc["steerable"] = report.steerable;
  return doc.dump();
}

std::string to_json(const MonogamyVerdict& verdict) {
  json doc;
  doc["g_ab"] = verdict.g_ab;
  doc["g_cb"] = verdict.g_cb;
  doc["product_of_conditionals"] = verdict.product_of_conditionals;
  doc["consistent"] = verdict.consistent;
  return doc.dump();
}

void write_region_csv(std::ostream& out,
                      const std::vector<RegionPoint>& points) {
  out << "a,b,c,in_H,in_M,in_D\n";
  for (const RegionPoint& p : points) {
    out << format_number(p.a) << ',' << format_number(p.b) << ','
        << format_number(p.c) << ',' << (p.in_h ? 1 : 0) << ','
        << (p.in_m ? 1 : 0) << ',' << (p.in_d ? 1 : 0) << '\n';
  }
}

}  // namespace cvinfo
