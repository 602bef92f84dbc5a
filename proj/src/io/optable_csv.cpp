#include <sstream>

#include "latnorm/error.hpp"
#include "latnorm/io.hpp"

namespace latnorm {

namespace {

std::vector<std::string> split_csv_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t");
    const auto e = cell.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

OpTable parse_optable(std::string_view text, std::shared_ptr<const FiniteLattice> L) {
  const std::size_t n = L->size();
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.emplace_back(lineno, split_csv_line(line));
  }
  if (rows.size() != n + 1)
    throw LatticeError(ErrorCode::ShapeMismatch, "expected " + std::to_string(n + 1) + " rows (header + " +
                                                     std::to_string(n) + "), got " + std::to_string(rows.size()));
  auto index = [&](const std::string& label, std::size_t line) {
    auto e = L->find(label);
    if (!e) throw LatticeError(ErrorCode::UnknownLabel, "unknown label '" + label + "'", line);
    return *e;
  };
  auto check_width = [&](const auto& row) {
    if (row.second.size() != n + 1)
      throw LatticeError(ErrorCode::ShapeMismatch,
                         "expected " + std::to_string(n + 1) + " columns, got " + std::to_string(row.second.size()),
                         row.first);
  };
  check_width(rows[0]);
  std::vector<Elem> col(n);
  std::vector<bool> seen_col(n, false), seen_row(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    col[c] = index(rows[0].second[c + 1], rows[0].first);
    if (seen_col[col[c]]) throw LatticeError(ErrorCode::ShapeMismatch, "column label repeated", rows[0].first);
    seen_col[col[c]] = true;
  }
  std::vector<Elem> cells(n * n);
  for (std::size_t r = 1; r <= n; ++r) {
    check_width(rows[r]);
    const std::size_t line = rows[r].first;
    const Elem x = index(rows[r].second[0], line);
    if (seen_row[x]) throw LatticeError(ErrorCode::ShapeMismatch, "row label repeated", line);
    seen_row[x] = true;
    for (std::size_t c = 0; c < n; ++c) cells[x * n + col[c]] = index(rows[r].second[c + 1], line);
  }
  return OpTable(std::move(L), std::move(cells));
}

OpTable parse_optable(std::string_view text, const FiniteLattice& L) {
  return parse_optable(text, std::make_shared<const FiniteLattice>(L));
}

std::string emit_optable(const OpTable& T) {
  const FiniteLattice& L = T.lattice();
  std::string out = "T";
  for (const auto& l : L.labels()) out += "," + l;
  out += "\n";
  for (Elem x = 0; x < L.size(); ++x) {
    out += L.label(x);
    for (Elem y = 0; y < L.size(); ++y) out += "," + L.label(T.at(x, y));
    out += "\n";
  }
  return out;
}

}  // namespace latnorm
