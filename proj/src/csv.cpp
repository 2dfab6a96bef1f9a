#include "flagdepth/csv.hpp"

#include <sstream>
#include <vector>

namespace flagdepth {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parses_as_number(const std::string& s) {
  try {
    rat_parse(s);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace

AtomicMeasure parse_dataset_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    rows.push_back(split(t, ','));
  }
  if (rows.empty()) throw ParseError("dataset CSV: no data rows");

  int weight_col = -1;
  size_t first_row = 0;
  bool header = false;
  for (const std::string& cell : rows[0])
    if (!parses_as_number(trimmed(cell))) header = true;
  if (header) {
    for (size_t j = 0; j < rows[0].size(); ++j)
      if (trimmed(rows[0][j]) == "w") weight_col = static_cast<int>(j);
    first_row = 1;
    if (rows.size() == 1) throw ParseError("dataset CSV: header but no data rows");
  }

  const size_t cols = rows[first_row].size();
  const size_t d = cols - (weight_col >= 0 ? 1 : 0);
  if (d < 1) throw ParseError("dataset CSV: no coordinate columns");

  std::vector<Point> atoms;
  std::vector<Rat> weights;
  for (size_t i = first_row; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("dataset CSV: ragged row");
    Coords c;
    c.reserve(d);
    Rat w = 0;
    for (size_t j = 0; j < cols; ++j) {
      Rat v = rat_parse(trimmed(rows[i][j]));
      if (static_cast<int>(j) == weight_col)
        w = v;
      else
        c.push_back(std::move(v));
    }
    atoms.emplace_back(std::move(c));
    weights.push_back(weight_col >= 0 ? w : Rat(0));
  }
  if (weight_col < 0) {
    Rat w(1, static_cast<unsigned long>(atoms.size()));
    for (Rat& x : weights) x = w;
  }
  return AtomicMeasure(std::move(atoms), std::move(weights));
}

std::string write_dataset_csv(const AtomicMeasure& m) {
  std::ostringstream out;
  for (int k = 0; k < m.dim(); ++k) out << "x" << (k + 1) << ",";
  out << "w\n";
  for (size_t i = 0; i < m.size(); ++i) {
    for (int k = 0; k < m.dim(); ++k) out << rat_str(m.atom(i)[k]) << ",";
    out << rat_str(m.weight(i)) << "\n";
  }
  return out.str();
}

Point parse_point(std::string_view text) {
  std::vector<std::string> cells = split(std::string(text), ',');
  Coords c;
  c.reserve(cells.size());
  for (const std::string& cell : cells) c.push_back(rat_parse(trimmed(cell)));
  if (c.empty()) throw ParseError("point literal: empty");
  return Point(std::move(c));
}

}  // namespace flagdepth
