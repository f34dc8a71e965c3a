#include <cctype>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "rankagg/errors.hpp"
#include "rankagg/reductions.hpp"

namespace rankagg {
namespace {

struct Line {
  std::size_t no;
  std::string text;
};

// Data lines; DIMACS comments start with 'c', ours with '#'.
std::vector<Line> lines_of(std::string_view text, bool dimacs_comments) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;
    if (dimacs_comments && line[first] == 'c' &&
        (first + 1 == line.size() || std::isspace(static_cast<unsigned char>(line[first + 1])))) {
      continue;
    }
    out.push_back({no, line});
  }
  return out;
}

long long read_int(std::istringstream& in, std::size_t no, const char* what) {
  long long v = 0;
  if (!(in >> v)) throw ParseError(no, std::string("expected ") + what);
  return v;
}

void expect_end(std::istringstream& in, std::size_t no) {
  std::string extra;
  if (in >> extra) throw ParseError(no, "unexpected '" + extra + "'");
}

}  // namespace

SatFormula parse_dimacs_cnf(std::string_view text) {
  const auto lines = lines_of(text, true);
  if (lines.empty()) throw ParseError(1, "missing 'p cnf' header");
  std::istringstream head(lines.front().text);
  std::string p;
  std::string kind;
  head >> p >> kind;
  if (p != "p" || kind != "cnf") throw ParseError(lines.front().no, "expected 'p cnf v c'");
  const long long vars = read_int(head, lines.front().no, "variable count");
  const long long count = read_int(head, lines.front().no, "clause count");
  expect_end(head, lines.front().no);
  if (vars < 0 || count < 0) throw ParseError(lines.front().no, "negative count");

  SatFormula f{static_cast<std::size_t>(vars), {}};
  std::vector<int> clause;
  std::size_t last = lines.front().no;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i].text);
    long long lit = 0;
    last = lines[i].no;
    while (in >> lit) {
      if (lit == 0) {
        f.clauses.push_back(std::move(clause));
        clause.clear();
        continue;
      }
      if (std::llabs(lit) > vars) throw ParseError(lines[i].no, "literal out of range");
      clause.push_back(static_cast<int>(lit));
    }
    if (!in.eof()) throw ParseError(lines[i].no, "bad literal");
  }
  if (!clause.empty()) throw ParseError(last, "clause not terminated by 0");
  if (f.clauses.size() != static_cast<std::size_t>(count)) {
    throw ParseError(last, "header announces " + std::to_string(count) + " clauses, found " +
                               std::to_string(f.clauses.size()));
  }
  return f;
}

std::pair<GraphInstance, std::size_t> parse_graph_instance(std::string_view text) {
  const auto lines = lines_of(text, true);
  GraphInstance g;
  long long announced = -1;
  std::optional<std::size_t> target;
  bool header = false;
  for (const auto& [no, line] : lines) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "p") {
      std::string kind;
      in >> kind;
      if (header || kind != "edge") throw ParseError(no, "expected a single 'p edge q m'");
      const long long q = read_int(in, no, "vertex count");
      announced = read_int(in, no, "edge count");
      if (q < 0 || announced < 0) throw ParseError(no, "negative count");
      g.q = static_cast<std::size_t>(q);
      header = true;
    } else if (tag == "e") {
      if (!header) throw ParseError(no, "edge before header");
      const long long u = read_int(in, no, "endpoint");
      const long long v = read_int(in, no, "endpoint");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g.q || static_cast<std::size_t>(v) > g.q) {
        throw ParseError(no, "endpoint out of range");
      }
      g.edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    } else if (tag == "t") {
      const long long t = read_int(in, no, "target");
      if (t < 0) throw ParseError(no, "negative target");
      target = static_cast<std::size_t>(t);
    } else {
      throw ParseError(no, "unknown line type '" + tag + "'");
    }
    expect_end(in, no);
  }
  const std::size_t end = lines.empty() ? 1 : lines.back().no;
  if (!header) throw ParseError(end, "missing 'p edge' header");
  if (!target) throw ParseError(end, "missing 't <target>' line");
  if (g.edges.size() != static_cast<std::size_t>(announced)) {
    throw ParseError(end, "header announces " + std::to_string(announced) + " edges, found " +
                              std::to_string(g.edges.size()));
  }
  try {
    g.validate();
  } catch (const DomainError& e) {
    throw ParseError(end, e.what());
  }
  return {std::move(g), *target};
}

HittingSetInstance parse_hitting_set(std::string_view text) {
  const auto lines = lines_of(text, false);
  if (lines.size() < 2) throw ParseError(lines.empty() ? 1 : lines.back().no, "expected 'U n' and 't k'");
  HittingSetInstance inst;
  {
    std::istringstream in(lines[0].text);
    std::string tag;
    in >> tag;
    if (tag != "U") throw ParseError(lines[0].no, "expected 'U <size>'");
    const long long u = read_int(in, lines[0].no, "universe size");
    if (u < 0) throw ParseError(lines[0].no, "negative universe size");
    expect_end(in, lines[0].no);
    inst.universe = static_cast<std::size_t>(u);
  }
  {
    std::istringstream in(lines[1].text);
    std::string tag;
    in >> tag;
    if (tag != "t") throw ParseError(lines[1].no, "expected 't <target>'");
    const long long t = read_int(in, lines[1].no, "target");
    if (t < 0 || static_cast<std::size_t>(t) > inst.universe) {
      throw ParseError(lines[1].no, "target outside [0, |U|]");
    }
    expect_end(in, lines[1].no);
    inst.target = static_cast<std::size_t>(t);
  }
  for (std::size_t i = 2; i < lines.size(); ++i) {
    std::istringstream in(lines[i].text);
    std::vector<std::size_t> set;
    long long u = 0;
    while (in >> u) {
      if (u < 1 || static_cast<std::size_t>(u) > inst.universe) {
        throw ParseError(lines[i].no, "element out of range");
      }
      set.push_back(static_cast<std::size_t>(u - 1));
    }
    if (!in.eof()) throw ParseError(lines[i].no, "bad element");
    inst.sets.push_back(std::move(set));
  }
  try {
    inst.validate();
  } catch (const DomainError& e) {
    throw ParseError(lines.back().no, e.what());
  }
  return inst;
}

}  // namespace rankagg
