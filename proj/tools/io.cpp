#include "io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rcio {

namespace {

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& token, const std::string& where) {
  const auto a = token.find_first_not_of(" \t");
  if (a == std::string::npos) throw CliError("parse", "empty number in " + where);
  const auto b = token.find_last_not_of(" \t");
  const std::string t = token.substr(a, b - a + 1);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || t.empty())
    throw CliError("parse", "bad number '" + t + "' in " + where);
  return v;
}

long long parse_int(const std::string& token, const std::string& where) {
  char* end = nullptr;
  const long long v = std::strtoll(token.c_str(), &end, 10);
  if (end != token.c_str() + token.size() || token.empty())
    throw CliError("parse", "bad integer '" + token + "' in " + where);
  return v;
}

bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  size_t i = t[0] == '+' || t[0] == '-' ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

std::vector<std::string> whitespace_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("io", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError("io", "cannot write '" + out_path + "'");
  out << text;
  if (!out) throw CliError("io", "short write to '" + out_path + "'");
}

bool looks_like_point_file(const std::string& text) {
  const auto lines = nonempty_lines(text);
  if (lines.empty()) return false;
  if (lines[0].find(',') != std::string::npos) return false;
  const auto toks = whitespace_tokens(lines[0]);
  return toks.size() == 2 && is_integer_token(toks[0]) && is_integer_token(toks[1]);
}

rctree::PointSet parse_points(const std::string& text) {
  const auto lines = nonempty_lines(text);
  if (lines.empty()) throw CliError("parse", "empty point file");
  const auto head = whitespace_tokens(lines[0]);
  if (head.size() != 2)
    throw CliError("parse", "point file must start with a 'd n' header line");
  const long long d = parse_int(head[0], "point file header");
  const long long n = parse_int(head[1], "point file header");
  if (d < 1 || d > 64) throw CliError("parse", "dimension must be in [1, 64]");
  if (n < 1) throw CliError("parse", "point count must be at least 1");
  if (static_cast<long long>(lines.size()) != n + 1)
    throw CliError("parse", "expected " + std::to_string(n) + " coordinate lines, found " +
                                std::to_string(lines.size() - 1));
  rctree::PointSet ps;
  ps.dim = static_cast<int>(d);
  for (long long i = 1; i <= n; ++i) {
    const auto toks = whitespace_tokens(lines[static_cast<size_t>(i)]);
    const std::string where = "point line " + std::to_string(i);
    if (static_cast<long long>(toks.size()) != d)
      throw CliError("parse", where + " has " + std::to_string(toks.size()) +
                                  " coordinates, expected " + std::to_string(d));
    std::vector<double> p;
    for (const auto& t : toks) {
      const double v = parse_real(t, where);
      if (!std::isfinite(v)) throw CliError("parse", "non-finite coordinate in " + where);
      p.push_back(v);
    }
    ps.points.push_back(std::move(p));
  }
  return ps;
}

std::vector<std::vector<double>> parse_csv_matrix(const std::string& text) {
  const auto lines = nonempty_lines(text);
  if (lines.empty()) throw CliError("parse", "empty matrix file");
  std::vector<std::vector<double>> rows;
  for (size_t r = 0; r < lines.size(); ++r) {
    const std::string where = "matrix row " + std::to_string(r + 1);
    std::vector<double> row;
    for (const auto& cell : split(lines[r], ',')) row.push_back(parse_real(cell, where));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& line : nonempty_lines(text))
    for (const auto& tok : whitespace_tokens(line)) out.push_back(parse_real(tok, "value list"));
  if (out.empty()) throw CliError("parse", "no values in input");
  return out;
}

std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";  // merges -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

void dump_rec(const nlohmann::json& j, std::string& out, int depth) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<size_t>(depth + 1) * 2, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += inner;
        out += nlohmann::json(it.key()).dump();
        out += ": ";
        dump_rec(it.value(), out, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        out += inner;
        dump_rec(j[i], out, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_canonical(const nlohmann::json& j) {
  std::string out;
  dump_rec(j, out, 0);
  out += '\n';
  return out;
}

void print_error(const std::string& kind, const std::string& message) {
  nlohmann::json err{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << dump_canonical(err);
}

}  // namespace rcio
