#include "rankagg/scoring.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "rankagg/errors.hpp"

namespace rankagg {
namespace {

Rational parse_rational(const std::string& token, std::size_t line) {
  try {
    const auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(token));
    const auto den = std::stoll(token.substr(slash + 1));
    if (den == 0) throw ParseError(line, "zero denominator in '" + token + "'");
    return Rational(std::stoll(token.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw ParseError(line, "bad number '" + token + "'");
  }
}

std::vector<Rational> base_vector(ScoringKind kind, std::size_t m,
                                  const std::map<std::size_t, std::vector<Rational>>& custom) {
  std::vector<Rational> v(m, Rational(0));
  switch (kind) {
    case ScoringKind::Plurality:
      v.front() = 1;
      break;
    case ScoringKind::Veto:
      v.back() = -1;
      break;
    case ScoringKind::Borda:
      for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<std::int64_t>(m - i);
      break;
    case ScoringKind::Half:
      for (std::size_t i = 0; i < m / 2; ++i) v[i] = 1;
      break;
    case ScoringKind::Custom: {
      const auto it = custom.find(m);
      if (it == custom.end()) {
        throw ConfigurationError("custom scoring system has no vector for m=" +
                                 std::to_string(m));
      }
      v = it->second;
      break;
    }
  }
  return v;
}

}  // namespace

ScoringSystem ScoringSystem::custom(std::map<std::size_t, std::vector<Rational>> vectors,
                                    std::string label) {
  for (const auto& [m, v] : vectors) {
    if (v.size() != m) {
      throw ConfigurationError("custom vector for m=" + std::to_string(m) + " has " +
                               std::to_string(v.size()) + " entries");
    }
  }
  ScoringSystem s(ScoringKind::Custom);
  s.custom_ = std::move(vectors);
  s.label_ = std::move(label);
  return s;
}

ScoringSystem ScoringSystem::from_name(std::string_view name) {
  bool star = false;
  if (!name.empty() && name.back() == '*') {
    star = true;
    name.remove_suffix(1);
  }
  ScoringSystem s;
  if (name == "plurality") {
    s = plurality();
  } else if (name == "veto") {
    s = veto();
  } else if (name == "borda") {
    s = borda();
  } else if (name == "half") {
    s = half();
  } else {
    throw ConfigurationError("unknown scoring system '" + std::string(name) + "'");
  }
  return star ? s.reversed() : s;
}

ScoringSystem ScoringSystem::parse_custom(std::string_view text, std::string label) {
  std::map<std::size_t, std::vector<Rational>> vectors;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'm: v_1 ... v_m'");
    std::size_t m = 0;
    try {
      m = std::stoul(line.substr(0, colon));
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "bad candidate count");
    }
    std::istringstream values(line.substr(colon + 1));
    std::vector<Rational> v;
    std::string token;
    while (values >> token) v.push_back(parse_rational(token, line_no));
    if (m == 0 || v.size() != m) {
      throw ParseError(line_no, "vector for m=" + std::to_string(m) + " has " +
                                    std::to_string(v.size()) + " entries");
    }
    if (!vectors.emplace(m, std::move(v)).second) {
      throw ParseError(line_no, "duplicate vector for m=" + std::to_string(m));
    }
  }
  if (vectors.empty()) throw ParseError(line_no, "custom scoring table is empty");
  return custom(std::move(vectors), std::move(label));
}

std::string ScoringSystem::name() const {
  std::string base;
  switch (kind_) {
    case ScoringKind::Plurality: base = "plurality"; break;
    case ScoringKind::Veto: base = "veto"; break;
    case ScoringKind::Borda: base = "borda"; break;
    case ScoringKind::Half: base = "half"; break;
    case ScoringKind::Custom: base = label_; break;
  }
  return reversed_ ? base + "*" : base;
}

std::vector<Rational> ScoringSystem::vector(std::size_t m) const {
  if (m == 0) throw DomainError("scoring vector requested for m=0");
  auto v = base_vector(kind_, m, custom_);
  if (reversed_) {
    std::reverse(v.begin(), v.end());
    for (auto& x : v) x = -x;
  }
  return v;
}

std::vector<std::int64_t> ScoringSystem::integer_vector(std::size_t m) const {
  const auto v = vector(m);
  std::int64_t scale = 1;
  for (const auto& x : v) scale = std::lcm(scale, x.denominator());
  std::vector<std::int64_t> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = v[i].numerator() * (scale / v[i].denominator());
  return out;
}

ScoringSystem ScoringSystem::reversed() const {
  if (kind_ == ScoringKind::Plurality && !reversed_) return veto();
  if (kind_ == ScoringKind::Veto && !reversed_) return plurality();
  ScoringSystem s = *this;
  s.reversed_ = !reversed_;
  return s;
}

std::vector<Rational> scoring_vector(const ScoringSystem& s, std::size_t m) { return s.vector(m); }

std::vector<Rational> scores(const Profile& p, const ScoringSystem& s) {
  const std::size_t m = p.num_candidates();
  std::vector<Rational> out(m, Rational(0));
  if (m == 0) return out;
  const auto v = s.vector(m);
  for (const auto& g : p.groups()) {
    const auto count = static_cast<std::int64_t>(g.count);
    for (std::size_t pos = 0; pos < m; ++pos) out[g.ranking.at(pos)] += v[pos] * count;
  }
  return out;
}

CandidateMask score_winners(const std::vector<Rational>& scores) {
  if (scores.empty()) return 0;
  const auto best = *std::max_element(scores.begin(), scores.end());
  CandidateMask out = 0;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (scores[c] == best) out |= bit(static_cast<Candidate>(c));
  }
  return out;
}

CandidateMask score_losers(const std::vector<Rational>& scores) {
  if (scores.empty()) return 0;
  const auto worst = *std::min_element(scores.begin(), scores.end());
  CandidateMask out = 0;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (scores[c] == worst) out |= bit(static_cast<Candidate>(c));
  }
  return out;
}

ScoreEvaluator::ScoreEvaluator(const Profile& p, const ScoringSystem& s)
    : m_(p.num_candidates()) {
  if (m_ > kMaxMaskCandidates) {
    throw ResourceError("at most 64 candidates supported, got " + std::to_string(m_));
  }
  vectors_.resize(m_ + 1);
  for (std::size_t r = 1; r <= m_; ++r) vectors_[r] = s.integer_vector(r);
  orders_.reserve(p.groups().size() * m_);
  for (const auto& g : p.groups()) {
    orders_.insert(orders_.end(), g.ranking.order().begin(), g.ranking.order().end());
    counts_.push_back(static_cast<std::int64_t>(g.count));
  }
}

void ScoreEvaluator::scores(CandidateMask remaining, std::span<std::int64_t> out) const {
  for (CandidateMask rest = remaining; rest; rest &= rest - 1) {
    out[static_cast<std::size_t>(std::countr_zero(rest))] = 0;
  }
  const std::size_t r = popcount(remaining);
  if (r == 0) return;
  const auto& vec = vectors_[r];
  // Scoring vectors of the built-in systems are zero on most positions;
  // skipping zero entries turns Plurality and Veto into O(first hit) scans.
  std::size_t first_nonzero = r;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (vec[i] != 0) {
      first_nonzero = std::min(first_nonzero, i);
      last_nonzero = i;
    }
  }
  if (first_nonzero == r) return;
  for (std::size_t g = 0; g < counts_.size(); ++g) {
    const Candidate* order = orders_.data() + g * m_;
    const std::int64_t count = counts_[g];
    if (last_nonzero == r - 1 && first_nonzero == r - 1) {
      for (std::size_t i = m_; i-- > 0;) {
        if (contains(remaining, order[i])) {
          out[order[i]] += vec[r - 1] * count;
          break;
        }
      }
      continue;
    }
    std::size_t pos = 0;
    for (std::size_t i = 0; i < m_ && pos <= last_nonzero; ++i) {
      const Candidate c = order[i];
      if (!contains(remaining, c)) continue;
      out[c] += vec[pos] * count;
      ++pos;
    }
  }
}

CandidateMask ScoreEvaluator::winners(CandidateMask remaining) const {
  std::array<std::int64_t, kMaxMaskCandidates> s{};
  scores(remaining, s);
  CandidateMask out = 0;
  std::int64_t best = 0;
  for (CandidateMask rest = remaining; rest; rest &= rest - 1) {
    const auto c = static_cast<Candidate>(std::countr_zero(rest));
    if (out == 0 || s[c] > best) {
      best = s[c];
      out = bit(c);
    } else if (s[c] == best) {
      out |= bit(c);
    }
  }
  return out;
}

CandidateMask ScoreEvaluator::losers(CandidateMask remaining) const {
  std::array<std::int64_t, kMaxMaskCandidates> s{};
  scores(remaining, s);
  CandidateMask out = 0;
  std::int64_t worst = 0;
  for (CandidateMask rest = remaining; rest; rest &= rest - 1) {
    const auto c = static_cast<Candidate>(std::countr_zero(rest));
    if (out == 0 || s[c] < worst) {
      worst = s[c];
      out = bit(c);
    } else if (s[c] == worst) {
      out |= bit(c);
    }
  }
  return out;
}

}  // namespace rankagg
