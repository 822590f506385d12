#include "serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace deltader {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidArgument("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InvalidArgument(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ShapeMismatch("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ShapeMismatch("matrix row has wrong length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

// Aligned text table; first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c + 1 == rows[r].size())
        os << rows[r][c];
      else
        os << std::left << std::setw(static_cast<int>(width[c] + 2)) << rows[r][c];
    }
    os << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      os << std::string(total > 2 ? total - 2 : total, '-') << "\n";
    }
  }
  return os.str();
}

}  // namespace

Json algebra_to_json(const LieAlgebra& algebra) {
  Json brackets = Json::array();
  for (const auto& e : algebra.entries()) brackets.push_back({e.i, e.j, e.k, e.value.to_string()});
  Json summands = Json::array();
  for (const auto& [b, e] : algebra.summands()) summands.push_back({b, e});
  return Json{{"dim", algebra.dim()}, {"brackets", brackets}, {"labels", algebra.labels()}, {"summands", summands}};
}

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim")) throw InvalidArgument("algebra JSON needs a \"dim\" field");
  const std::size_t dim = index_from_json(j.at("dim"), "dim");
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      if (!b.is_array() || b.size() != 4) throw InvalidArgument("bracket entries are [i, j, k, \"c\"]");
      entries.push_back({index_from_json(b[0], "i"), index_from_json(b[1], "j"), index_from_json(b[2], "k"),
                         rational_from_json(b[3])});
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  LieAlgebra algebra = LieAlgebra::from_structure_constants(dim, entries, std::move(labels));
  if (j.contains("summands")) {
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (const auto& r : j.at("summands")) {
      if (!r.is_array() || r.size() != 2) throw InvalidArgument("summands are [begin, end] pairs");
      ranges.emplace_back(index_from_json(r[0], "summand begin"), index_from_json(r[1], "summand end"));
    }
    algebra = algebra.with_summands(std::move(ranges));
  }
  return algebra;
}

Json module_to_json(const Representation& module) {
  Json action = Json::array();
  for (const auto& m : module.action()) action.push_back(matrix_to_json(m));
  Json out{{"dim", module.dim_v()}, {"action", action}};
  if (module.weight_labels()) out["weights"] = *module.weight_labels();
  return out;
}

Representation module_from_json(const Json& j, const AlgebraPtr& algebra) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("action"))
    throw InvalidArgument("module JSON needs \"dim\" and \"action\" fields");
  const std::size_t dim = index_from_json(j.at("dim"), "dim");
  const Json& action = j.at("action");
  if (!action.is_array() || action.size() != algebra->dim())
    throw ShapeMismatch("module JSON needs one action matrix per algebra basis element");
  std::vector<Matrix> mats;
  for (const auto& m : action) mats.push_back(matrix_from_json(m, dim));
  std::optional<std::vector<int>> weights;
  if (j.contains("weights")) weights = j.at("weights").get<std::vector<int>>();
  return Representation(algebra, dim, std::move(mats), std::move(weights));
}

Json space_to_json(const DerivationSpace& space) {
  Json basis = Json::array();
  for (const auto& m : space.basis) basis.push_back(matrix_to_json(m));
  Json weights = nullptr;
  if (space.weights) {
    weights = Json::array();
    for (const auto& w : *space.weights) weights.push_back(w.to_string());
  }
  return Json{{"delta", space.delta.to_string()}, {"dimension", space.dimension()}, {"basis", basis}, {"weights", weights}};
}

std::string space_to_table(const DerivationSpace& space, const Representation& module) {
  std::ostringstream os;
  os << "delta = " << space.delta << ", dimension = " << space.dimension() << "\n";
  const auto& labels = module.algebra()->labels();
  for (std::size_t k = 0; k < space.basis.size(); ++k) {
    os << "\nD" << k + 1;
    if (space.weights) os << "  (weight " << (*space.weights)[k] << ")";
    os << "\n";
    std::vector<std::vector<std::string>> rows{{"x", "D(x)"}};
    const Matrix& m = space.basis[k];
    for (std::size_t a = 0; a < m.rows(); ++a) {
      std::string image;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(a, c).is_zero()) continue;
        if (!image.empty()) image += " + ";
        image += m(a, c).to_string() + "*v" + std::to_string(c);
      }
      rows.push_back({labels[a], image.empty() ? "0" : image});
    }
    os << render_table(rows);
  }
  return os.str();
}

Json scan_to_json(const ScanReport& report) {
  Json findings = Json::array();
  for (const auto& f : report.findings) findings.push_back({{"delta", f.delta.to_string()}, {"dimension", f.dimension}});
  Json factors = Json::array();
  for (const auto& p : report.nonrational_factors) factors.push_back(p.to_string());
  return Json{{"generic_rank", report.generic_rank},
              {"generic_kernel_dimension", report.generic_kernel_dimension},
              {"findings", findings},
              {"nonrational_factors", factors},
              {"delta_zero_dimension", report.delta_zero_dimension}};
}

std::string scan_to_table(const ScanReport& report) {
  std::vector<std::vector<std::string>> rows{{"delta", "dimension"}};
  for (const auto& f : report.findings) rows.push_back({f.delta.to_string(), std::to_string(f.dimension)});
  std::ostringstream os;
  os << render_table(rows);
  os << "generic rank: " << report.generic_rank << "\n";
  os << "generic kernel dimension: " << report.generic_kernel_dimension << "\n";
  if (!report.include_zero) os << "delta = 0 (closed form): " << report.delta_zero_dimension << "\n";
  for (const auto& p : report.nonrational_factors) os << "nonrational factor: " << p.to_string() << "\n";
  return os.str();
}

namespace {

const char* status_name(CheckEntry::Status s) {
  switch (s) {
    case CheckEntry::Status::Pass:
      return "pass";
    case CheckEntry::Status::Fail:
      return "fail";
    case CheckEntry::Status::Skip:
      return "skip";
  }
  return "";
}

}  // namespace

Json verify_to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& e : report.entries)
    checks.push_back({{"name", e.name}, {"status", status_name(e.status)}, {"detail", e.detail}});
  return Json{{"max_n", report.max_n}, {"checks", checks}, {"failures", report.failures()}};
}

std::string verify_to_table(const VerifyReport& report) {
  std::vector<std::vector<std::string>> rows{{"check", "status", "detail"}};
  for (const auto& e : report.entries) rows.push_back({e.name, status_name(e.status), e.detail});
  std::ostringstream os;
  os << render_table(rows);
  os << report.failures() << " failure(s) in " << report.entries.size() << " check(s)\n";
  return os.str();
}

}  // namespace deltader
