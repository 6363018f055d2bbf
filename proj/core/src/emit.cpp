#include "mgdual/emit.hpp"

#include <algorithm>
#include <sstream>

namespace mgdual {

namespace {

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c == 1) os << " |";
      os << (c ? " " : "") << pad_left(rows[r][c], width[c]);
    }
    os << '\n';
    if (r == 0 && rows.size() > 1) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c ? 1 : 0);
      os << std::string(width[0] + 1, '-') << '+' << std::string(total - width[0] + 1, '-') << '\n';
    }
  }
  return os.str();
}

}  // namespace

std::string format_hilbert_table(const HilbertTable& table, std::size_t k) {
  if (table.empty()) return "(empty)\n";
  if (k == 1) {
    std::vector<std::vector<std::string>> rows(2);
    rows[0].push_back("m");
    rows[1].push_back("H");
    for (const auto& [m, h] : table) {
      rows[0].push_back(std::to_string(m[0]));
      rows[1].push_back(std::to_string(h));
    }
    return render_rows(rows);
  }
  if (k == 2) {
    Int imin = table.begin()->first[0], imax = imin, jmin = table.begin()->first[1], jmax = jmin;
    for (const auto& [m, h] : table) {
      imin = std::min(imin, m[0]);
      imax = std::max(imax, m[0]);
      jmin = std::min(jmin, m[1]);
      jmax = std::max(jmax, m[1]);
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"j\\i"});
    for (Int i = imin; i <= imax; ++i) rows[0].push_back(std::to_string(i));
    for (Int j = jmax; j >= jmin; --j) {
      std::vector<std::string> row{std::to_string(j)};
      for (Int i = imin; i <= imax; ++i) {
        auto it = table.find(MultiDegree{i, j});
        row.push_back(it == table.end() || it->second == 0 ? "-" : std::to_string(it->second));
      }
      rows.push_back(std::move(row));
    }
    return render_rows(rows);
  }
  std::ostringstream os;
  for (const auto& [m, h] : table) os << m.to_string() << ' ' << h << '\n';
  return os.str();
}

std::string format_hilbert_csv(const HilbertTable& table, std::size_t k) {
  std::ostringstream os;
  for (std::size_t c = 0; c < k; ++c) os << 'm' << (c + 1) << ',';
  os << "dim\n";
  for (const auto& [m, h] : table) {
    for (std::size_t c = 0; c < k; ++c) os << m[c] << ',';
    os << h << '\n';
  }
  return os.str();
}

}  // namespace mgdual
