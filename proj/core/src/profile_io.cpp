#include "rankagg/profile_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "rankagg/errors.hpp"

namespace rankagg {
namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::uint64_t parse_unsigned(const std::string& token, std::size_t line, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, std::string("expected non-negative integer ") + what + ", got '" +
                               token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError(line, std::string(what) + " out of range");
  }
}

}  // namespace

Profile parse_profile(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t m = 0;
  std::uint64_t groups = 0;
  bool have_header = false;
  Profile profile;
  std::uint64_t seen = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream tokens(line);
    if (!have_header) {
      std::string a, b, extra;
      if (!(tokens >> a >> b) || (tokens >> extra)) {
        throw ParseError(line_no, "header must be 'm g'");
      }
      m = parse_unsigned(a, line_no, "candidate count");
      groups = parse_unsigned(b, line_no, "group count");
      if (m == 0) throw ParseError(line_no, "candidate count must be positive");
      if (m > 4096) throw ParseError(line_no, "candidate count too large");
      profile = Profile(m);
      have_header = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'count: ranking'");
    std::string label = line.substr(0, colon);
    label.erase(0, label.find_first_not_of(" \t"));
    label.erase(label.find_last_not_of(" \t") + 1);
    std::istringstream rest(line.substr(colon + 1));

    if (label == "names") {
      if (seen > 0 || !profile.names().empty()) {
        throw ParseError(line_no, "names line must directly follow the header");
      }
      std::vector<std::string> names;
      std::string name;
      while (rest >> name) names.push_back(name);
      if (names.size() != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " names, got " +
                                      std::to_string(names.size()));
      }
      profile.set_names(std::move(names));
      continue;
    }

    if (!label.empty() && label.front() == '-') throw ParseError(line_no, "count must be positive");
    const auto count = parse_unsigned(label, line_no, "count");
    if (count == 0) throw ParseError(line_no, "count must be positive");
    std::vector<Candidate> order;
    std::vector<bool> used(m, false);
    std::string token;
    while (rest >> token) {
      const auto c = parse_unsigned(token, line_no, "candidate index");
      if (c >= m) {
        throw ParseError(line_no, "candidate index " + token + " >= m=" + std::to_string(m));
      }
      if (used[c]) throw ParseError(line_no, "ranking is not a permutation: " + token + " repeated");
      used[c] = true;
      order.push_back(static_cast<Candidate>(c));
    }
    if (order.size() != m) {
      throw ParseError(line_no, "ranking has " + std::to_string(order.size()) +
                                    " entries, expected " + std::to_string(m));
    }
    if (seen == groups) throw ParseError(line_no, "more groups than declared in the header");
    profile.add(Ranking(std::move(order)), count);
    ++seen;
  }
  if (!have_header) throw ParseError(line_no, "missing 'm g' header");
  if (seen != groups) {
    throw ParseError(line_no, "header declares " + std::to_string(groups) + " groups, found " +
                                  std::to_string(seen));
  }
  return profile;
}

std::string serialize_profile(const Profile& p) {
  const Profile c = p.canonical();
  std::ostringstream out;
  out << c.num_candidates() << ' ' << c.groups().size() << '\n';
  if (!c.names().empty()) {
    out << "names:";
    for (const auto& n : c.names()) out << ' ' << n;
    out << '\n';
  }
  for (const auto& g : c.groups()) out << g.count << ": " << g.ranking.to_string() << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

Profile read_profile(const std::filesystem::path& path) {
  return parse_profile(read_text_file(path));
}

void write_profile(const std::filesystem::path& path, const Profile& p) {
  write_text_file(path, serialize_profile(p));
}

}  // namespace rankagg
