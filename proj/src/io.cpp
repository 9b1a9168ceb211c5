#include "kfam/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "kfam/errors.hpp"

namespace kfam {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Family parse_family(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  int lineno = 0;
  int n = 0;
  std::vector<ElementSet> members;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip_comment(line);
    if (body.empty()) continue;
    if (n == 0) {
      if (body.rfind("n=", 0) != 0) throw ParseError(lineno, "expected 'n=<n>' header");
      const std::string num = body.substr(2);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(lineno, "malformed ground size '" + num + "'");
      n = std::stoi(num);
      if (n < 1 || n > ElementSet::kMaxElement) throw DomainError("ground size " + num + " outside [1,128]");
      continue;
    }
    std::istringstream ls(body);
    std::string tok;
    ElementSet s;
    int prev = 0;
    while (ls >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) throw ParseError(lineno, "bad label '" + tok + "'");
      const int e = std::stoi(tok);
      if (e <= prev) throw ParseError(lineno, "labels must be strictly ascending");
      if (e < 1 || e > n)
        throw DomainError("line " + std::to_string(lineno) + ": element " + tok + " outside [1," + std::to_string(n) + "]");
      s.insert(e);
      prev = e;
    }
    if (!seen.insert(s).second) {
      if (warnings) warnings->push_back("line " + std::to_string(lineno) + ": duplicate member " + s.to_string() + " dropped");
      continue;
    }
    members.push_back(s);
  }
  if (n == 0) throw ParseError(lineno, "missing 'n=<n>' header");
  return Family(n, std::move(members));
}

Family parse_family_text(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_family(in, warnings);
}

Family parse_family_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_family(in, warnings);
}

std::string format_family(const Family& f) {
  std::ostringstream out;
  out << "n=" << f.ground_size() << '\n';
  for (const auto& m : f) {
    bool first = true;
    m.for_each([&](int e) {
      out << (first ? "" : " ") << e;
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

void write_family_file(const Family& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_family(f);
}

}  // namespace kfam
