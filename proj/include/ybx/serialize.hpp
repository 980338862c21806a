// Locale-independent number formatting and the matrix JSON schema shared by
// the CLI and its tests.
#pragma once

#include <charconv>
#include <string>

#include <json.hpp>

#include "ybx/matrix.hpp"

namespace ybx {

/// Format with up to `significant` digits, C locale semantics regardless of
/// the global locale (decimal point, no grouping).
inline std::string format_double(double x, int significant = 12) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general,
                           significant);
  return std::string(buf, res.ptr);
}

/// Matrix JSON schema: {"rows": n, "cols": m, "entries": [[re, im], ...]}
/// with entries row-major.
inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows * cols)
    throw std::invalid_argument("matrix_from_json: entry count mismatch");
  ComplexMatrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t jj = 0; jj < cols; ++jj, ++k)
      m(i, jj) = cplx(entries[k][0].get<double>(), entries[k][1].get<double>());
  return m;
}

}  // namespace ybx
