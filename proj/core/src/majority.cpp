#include "rankagg/majority.hpp"

#include <algorithm>
#include <sstream>

#include "rankagg/errors.hpp"

namespace rankagg {
namespace {

// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> data_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(no, line);
  }
  return out;
}

std::size_t parse_header(const std::vector<std::pair<std::size_t, std::string>>& lines) {
  if (lines.empty()) throw ParseError(1, "missing header");
  std::istringstream in(lines.front().second);
  long long m = -1;
  std::string extra;
  if (!(in >> m) || m < 0 || (in >> extra)) {
    throw ParseError(lines.front().first, "header must be the candidate count");
  }
  return static_cast<std::size_t>(m);
}

std::vector<Candidate> parse_indices(std::istringstream& in, std::size_t m, std::size_t line) {
  std::vector<Candidate> out;
  long long v = 0;
  while (in >> v) {
    if (v < 0 || static_cast<std::size_t>(v) >= m) {
      throw ParseError(line, "candidate " + std::to_string(v) + " out of range");
    }
    out.push_back(static_cast<Candidate>(v));
  }
  return out;
}

}  // namespace

void WeightedMajorityGraph::set(Candidate c, Candidate d, std::int64_t weight) {
  if (c >= m_ || d >= m_) throw DomainError("arc endpoint out of range");
  if (c == d) throw DomainError("self-loop in majority graph");
  w_[c * m_ + d] = weight;
  w_[d * m_ + c] = -weight;
}

void WeightedMajorityGraph::add(Candidate c, Candidate d, std::int64_t weight) {
  set(c, d, (*this)(c, d) + weight);
}

bool WeightedMajorityGraph::is_zero() const {
  return std::all_of(w_.begin(), w_.end(), [](std::int64_t x) { return x == 0; });
}

WeightedMajorityGraph weighted_majority_graph(const Profile& p) {
  const std::size_t m = p.num_candidates();
  WeightedMajorityGraph g(m);
  for (const auto& group : p.groups()) {
    const auto order = group.ranking.order();
    const auto count = static_cast<std::int64_t>(group.count);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) g.add(order[i], order[j], count);
    }
  }
  return g;
}

std::vector<std::int64_t> c2_borda_scores(const WeightedMajorityGraph& g) {
  const std::size_t m = g.size();
  std::vector<std::int64_t> out(m, 0);
  for (Candidate c = 0; c < m; ++c) {
    for (Candidate d = 0; d < m; ++d) out[c] += g(c, d);
  }
  return out;
}

Profile mcgarvey_realize(const WeightedMajorityGraph& g) {
  const std::size_t m = g.size();
  Profile p(m);
  for (Candidate c = 0; c < m; ++c) {
    for (Candidate d = 0; d < m; ++d) {
      const std::int64_t w = g(c, d);
      if (w <= 0) continue;
      if (w % 2 != 0) {
        throw DomainError("arc " + std::to_string(c) + "->" + std::to_string(d) +
                          " has odd weight " + std::to_string(w));
      }
      std::vector<Candidate> fill;
      for (Candidate x = 0; x < m; ++x) {
        if (x != c && x != d) fill.push_back(x);
      }
      std::vector<Candidate> up{c, d};
      up.insert(up.end(), fill.begin(), fill.end());
      std::vector<Candidate> down(fill.rbegin(), fill.rend());
      down.push_back(c);
      down.push_back(d);
      const auto t = static_cast<std::uint64_t>(w / 2);
      p.add(Ranking(std::move(up)), t);
      p.add(Ranking(std::move(down)), t);
    }
  }
  return p;
}

void BilevelGraph::validate() const {
  if (c_blocks.size() != d_blocks.size()) throw DomainError("C and D block counts differ");
  std::vector<bool> seen(m, false);
  const auto mark = [&](const std::vector<Candidate>& block) {
    for (const Candidate c : block) {
      if (c >= m) throw DomainError("block member " + std::to_string(c) + " out of range");
      if (seen[c]) throw DomainError("candidate " + std::to_string(c) + " in two blocks");
      seen[c] = true;
    }
  };
  for (std::size_t i = 0; i < c_blocks.size(); ++i) {
    mark(c_blocks[i]);
    mark(d_blocks[i]);
  }
}

WeightedMajorityGraph BilevelGraph::graph() const {
  validate();
  WeightedMajorityGraph g(m);
  for (std::size_t i = 0; i < c_blocks.size(); ++i) {
    for (const Candidate c : c_blocks[i]) {
      for (const Candidate d : d_blocks[i]) g.set(c, d, 2);
    }
  }
  return g;
}

Profile bilevel_realize(const BilevelGraph& b) {
  b.validate();
  const auto sorted = [](std::vector<Candidate> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<bool> used(b.m, false);
  std::vector<Candidate> first;
  std::vector<Candidate> second;
  std::vector<std::vector<Candidate>> tail;  // blocks of voter 2, built back to front
  for (std::size_t i = 0; i < b.c_blocks.size(); ++i) {
    const auto c = sorted(b.c_blocks[i]);
    const auto d = sorted(b.d_blocks[i]);
    first.insert(first.end(), c.begin(), c.end());
    first.insert(first.end(), d.begin(), d.end());
    std::vector<Candidate> block(c.rbegin(), c.rend());
    block.insert(block.end(), d.rbegin(), d.rend());
    tail.push_back(std::move(block));
    for (const Candidate x : c) used[x] = true;
    for (const Candidate x : d) used[x] = true;
  }
  std::vector<Candidate> rest;
  for (Candidate x = 0; x < b.m; ++x) {
    if (!used[x]) rest.push_back(x);
  }
  first.insert(first.end(), rest.begin(), rest.end());
  second.assign(rest.rbegin(), rest.rend());
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) second.insert(second.end(), it->begin(), it->end());
  Profile p(b.m);
  p.add(Ranking(std::move(first)));
  p.add(Ranking(std::move(second)));
  return p;
}

Profile sum_bilevel_realize(const std::vector<BilevelGraph>& parts) {
  if (parts.empty()) return Profile(0);
  const std::size_t m = parts.front().m;
  WeightedMajorityGraph seen(m);
  Profile p(m);
  for (const auto& part : parts) {
    if (part.m != m) throw DimensionError("bilevel parts over different candidate counts");
    const auto g = part.graph();
    for (Candidate c = 0; c < m; ++c) {
      for (Candidate d = 0; d < m; ++d) {
        if (g(c, d) == 0) continue;
        if (seen(c, d) != 0) {
          throw DomainError("bilevel parts share the arc " + std::to_string(c) + "-" +
                            std::to_string(d));
        }
      }
    }
    for (Candidate c = 0; c < m; ++c) {
      for (Candidate d = c + 1; d < m; ++d) {
        if (g(c, d) != 0) seen.set(c, d, g(c, d));
      }
    }
    p = p + bilevel_realize(part);
  }
  return p;
}

Profile padded_opposite_pairs(const Profile& p, std::uint64_t extra_pairs) {
  if (extra_pairs == 0) return p;
  Profile out = p;
  const Ranking r = Ranking::identity(p.num_candidates());
  out.add(r, extra_pairs);
  out.add(reverse_ranking(r), extra_pairs);
  return out;
}

WeightedMajorityGraph parse_graph(std::string_view text) {
  const auto lines = data_lines(text);
  const std::size_t m = parse_header(lines);
  WeightedMajorityGraph g(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    std::istringstream in(line);
    long long c = 0;
    long long d = 0;
    long long w = 0;
    std::string extra;
    if (!(in >> c >> d >> w) || (in >> extra)) throw ParseError(no, "expected 'c d w'");
    if (c < 0 || d < 0 || static_cast<std::size_t>(c) >= m || static_cast<std::size_t>(d) >= m) {
      throw ParseError(no, "arc endpoint out of range");
    }
    if (c == d) throw ParseError(no, "self-loop");
    if (w <= 0) throw ParseError(no, "weights must be positive");
    if (g(static_cast<Candidate>(c), static_cast<Candidate>(d)) != 0) {
      throw ParseError(no, "pair listed twice");
    }
    g.set(static_cast<Candidate>(c), static_cast<Candidate>(d), w);
  }
  return g;
}

std::string serialize_graph(const WeightedMajorityGraph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (Candidate c = 0; c < g.size(); ++c) {
    for (Candidate d = 0; d < g.size(); ++d) {
      if (g(c, d) > 0) out << c << ' ' << d << ' ' << g(c, d) << '\n';
    }
  }
  return out.str();
}

BilevelGraph parse_bilevel(std::string_view text) {
  const auto lines = data_lines(text);
  BilevelGraph b;
  b.m = parse_header(lines);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw ParseError(no, "expected 'c ... | d ...'");
    std::istringstream left(line.substr(0, bar));
    std::istringstream right(line.substr(bar + 1));
    b.c_blocks.push_back(parse_indices(left, b.m, no));
    b.d_blocks.push_back(parse_indices(right, b.m, no));
    if (!left.eof() || !right.eof()) throw ParseError(no, "bad candidate index");
  }
  try {
    b.validate();
  } catch (const DomainError& e) {
    throw ParseError(lines.empty() ? 1 : lines.back().first, e.what());
  }
  return b;
}

}  // namespace rankagg
