#include "selinf/dataset.hpp"
#include "selinf/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace selinf {

namespace {

std::string normalize_name(std::string s) {
  for (char& c : s) {
    if (c == ' ') c = '_';
    else c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

std::string strip_quotes(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  size_t b = 0;
  while (b < s.size() && s[b] == ' ') ++b;
  s = s.substr(b);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, delim)) out.push_back(strip_quotes(field));
  if (!line.empty() && line.back() == delim) out.push_back("");
  return out;
}

double parse_cell(const std::string& s, size_t row, const std::string& col) {
  const char* b = s.data();
  const char* e = b + s.size();
  double v = 0;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || ptr != e)
    throw Error("non-numeric cell '" + s + "' at data row " +
                std::to_string(row) + ", column '" + col + "'");
  return v;
}

} // namespace

void Dataset::validate() const {
  if (y.size() != X.rows()) throw Error("row count mismatch between X and y");
  if (static_cast<size_t>(X.cols()) != predictor_names.size())
    throw Error("predictor name count does not match X columns");
  if (n() <= p() + 1)
    throw Error("need n > p + 1 rows (n=" + std::to_string(n()) +
                ", p=" + std::to_string(p()) + ")");
  if (!X.allFinite() || !y.allFinite())
    throw Error("dataset contains non-finite values");
  std::set<std::string> seen;
  for (const auto& nm : predictor_names) {
    if (nm.empty()) throw Error("empty predictor name");
    if (!seen.insert(nm).second) throw Error("duplicate column name '" + nm + "'");
  }
}

Dataset load_csv(const std::string& path, const std::string& response,
                 const CsvOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw Error("empty file: " + path);
  std::vector<std::string> header = split_line(line, opts.delimiter);
  if (opts.normalize_names)
    for (auto& h : header) h = normalize_name(h);

  std::string resp = opts.normalize_names ? normalize_name(response) : response;
  auto it = std::find(header.begin(), header.end(), resp);
  if (it == header.end())
    throw Error("response column '" + response + "' not found in " + path);
  size_t resp_col = static_cast<size_t>(it - header.begin());

  {
    std::set<std::string> seen;
    for (const auto& h : header)
      if (!seen.insert(h).second)
        throw Error("duplicate column name '" + h + "' in " + path);
  }

  std::vector<std::vector<double>> rows;
  size_t rowno = 0;
  while (std::getline(in, line)) {
    ++rowno;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> cells = split_line(line, opts.delimiter);
    if (cells.size() != header.size())
      throw Error("row " + std::to_string(rowno) + " has " +
                  std::to_string(cells.size()) + " fields, expected " +
                  std::to_string(header.size()));
    std::vector<double> vals(cells.size());
    for (size_t c = 0; c < cells.size(); ++c)
      vals[c] = parse_cell(cells[c], rowno, header[c]);
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw Error("no data rows in " + path);

  Dataset ds;
  ds.response_name = header[resp_col];
  for (size_t c = 0; c < header.size(); ++c)
    if (c != resp_col) ds.predictor_names.push_back(header[c]);

  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(header.size() - 1);
  ds.X.resize(n, p);
  ds.y.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index k = 0;
    for (size_t c = 0; c < header.size(); ++c) {
      if (c == resp_col) ds.y(i) = rows[i][c];
      else ds.X(i, k++) = rows[i][c];
    }
  }
  ds.validate();
  return ds;
}

void save_csv(const Dataset& ds, const std::string& path, char delimiter) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out.precision(17);
  for (size_t c = 0; c < ds.predictor_names.size(); ++c)
    out << ds.predictor_names[c] << delimiter;
  out << ds.response_name << "\n";
  for (Eigen::Index i = 0; i < ds.n(); ++i) {
    for (Eigen::Index c = 0; c < ds.p(); ++c) out << ds.X(i, c) << delimiter;
    out << ds.y(i) << "\n";
  }
}

} // namespace selinf
