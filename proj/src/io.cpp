#include "mlfb/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace mlfb {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

[[noreturn]] void malformed(std::size_t line, std::size_t column, const std::string& msg) {
  throw Error(ErrorCode::Malformed,
              std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

Integer to_integer(const Token& t) {
  std::size_t start = (t.text[0] == '-' || t.text[0] == '+') ? 1 : 0;
  if (start == t.text.size()) malformed(t.line, t.column, "expected digits after sign");
  for (std::size_t i = start; i < t.text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) {
      malformed(t.line, t.column + i, std::string("unexpected character '") + t.text[i] + "'");
    }
  }
  std::string digits = t.text[0] == '+' ? t.text.substr(1) : t.text;
  return Integer(digits, 10);
}

// Splits one line into tokens separated by whitespace or (optionally) commas.
std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no, bool commas) {
  std::vector<Token> out;
  std::size_t i = 0;
  bool expect_value = false;  // a comma was just seen
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (commas && c == ',') {
      if (out.empty() || expect_value) malformed(line_no, i + 1, "empty entry");
      expect_value = true;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && !(commas && line[j] == ','))
      ++j;
    out.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
    expect_value = false;
    i = j;
  }
  if (expect_value) malformed(line_no, line.size(), "trailing comma");
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::string_view l = text.substr(start, i - start);
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      lines.push_back(l);
      start = i + 1;
    }
  }
  return lines;
}

bool skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

IntVec parse_vector(std::string_view text) {
  std::vector<Integer> values;
  auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (skippable(lines[n])) continue;
    if (!values.empty()) malformed(n + 1, 1, "vector must be on a single line");
    for (const auto& t : tokenize_line(lines[n], n + 1, true)) values.push_back(to_integer(t));
  }
  if (values.empty()) malformed(1, 1, "empty vector");
  return IntVec(std::move(values));
}

IntMat parse_matrix(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t n = 0;
  while (n < lines.size() && skippable(lines[n])) ++n;
  if (n == lines.size()) malformed(1, 1, "missing 'm n' header");
  auto header = tokenize_line(lines[n], n + 1, false);
  if (header.size() != 2) malformed(n + 1, 1, "header must be 'm n'");
  Integer m = to_integer(header[0]), c = to_integer(header[1]);
  if (sgn(m) <= 0 || sgn(c) <= 0 || !m.fits_uint_p() || !c.fits_uint_p()) {
    malformed(n + 1, 1, "matrix dimensions must be positive");
  }
  IntMat out(m.get_ui(), c.get_ui());
  std::size_t row = 0;
  for (++n; n < lines.size(); ++n) {
    if (skippable(lines[n])) continue;
    if (row == out.rows()) malformed(n + 1, 1, "more rows than the header declares");
    auto tokens = tokenize_line(lines[n], n + 1, false);
    if (tokens.size() != out.cols()) {
      malformed(n + 1, 1, "expected " + std::to_string(out.cols()) + " entries, found " +
                              std::to_string(tokens.size()));
    }
    for (std::size_t j = 0; j < tokens.size(); ++j) out(row, j) = to_integer(tokens[j]);
    ++row;
  }
  if (row != out.rows()) {
    malformed(lines.size(), 1, "expected " + std::to_string(out.rows()) + " rows, found " + std::to_string(row));
  }
  return out;
}

std::string format_vector(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s;
}

std::string format_matrix(const IntMat& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace mlfb
