#include "rankagg/profile.hpp"

#include <algorithm>
#include <map>

#include "rankagg/errors.hpp"

namespace rankagg {

Profile::Profile(std::size_t m) : m_(m) {}

Profile::Profile(std::size_t m, std::vector<VoterGroup> groups) : m_(m) {
  groups_.reserve(groups.size());
  for (auto& g : groups) add(g.ranking, g.count);
}

void Profile::add(const Ranking& ranking, std::uint64_t count) {
  if (ranking.size() != m_) {
    throw DimensionError("ranking over " + std::to_string(ranking.size()) +
                         " candidates added to a profile over " + std::to_string(m_));
  }
  if (count == 0) throw DomainError("voter group multiplicity must be positive");
  groups_.push_back({count, ranking});
  voters_ += count;
}

void Profile::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != m_) {
    throw DimensionError("expected " + std::to_string(m_) + " candidate names, got " +
                         std::to_string(names.size()));
  }
  names_ = std::move(names);
}

std::string Profile::name_of(Candidate c) const {
  return names_.empty() ? std::to_string(c) : names_.at(c);
}

Profile Profile::canonical() const {
  std::map<Ranking, std::uint64_t> merged;
  for (const auto& g : groups_) merged[g.ranking] += g.count;
  Profile out(m_);
  for (const auto& [ranking, count] : merged) out.add(ranking, count);
  out.names_ = names_;
  return out;
}

Profile operator+(const Profile& a, const Profile& b) {
  if (a.m_ != b.m_) {
    throw DimensionError("cannot concatenate profiles over " + std::to_string(a.m_) + " and " +
                         std::to_string(b.m_) + " candidates");
  }
  Profile out = a;
  for (const auto& g : b.groups_) out.add(g.ranking, g.count);
  return out;
}

Profile Profile::repeated(std::uint64_t k) const {
  Profile out(m_);
  out.names_ = names_;
  if (k == 0) return out;
  for (const auto& g : groups_) out.add(g.ranking, g.count * k);
  return out;
}

bool Profile::same_voters(const Profile& other) const {
  return m_ == other.m_ && canonical() == other.canonical();
}

Profile reverse_profile(const Profile& p) {
  Profile out(p.num_candidates());
  for (const auto& g : p.groups()) out.add(reverse_ranking(g.ranking), g.count);
  out.set_names(p.names());
  return out;
}

Restriction restrict_profile(const Profile& p, CandidateMask keep) {
  const std::size_t m = p.num_candidates();
  keep &= full_mask(m);
  if (keep == 0) throw DomainError("restriction to an empty candidate set");
  Restriction r;
  r.old_to_new = restriction_map(m, keep);
  for (std::size_t c = 0; c < m; ++c) {
    if (contains(keep, static_cast<Candidate>(c))) r.new_to_old.push_back(static_cast<Candidate>(c));
  }
  r.profile = Profile(r.new_to_old.size());
  for (const auto& g : p.groups()) r.profile.add(restrict_ranking(g.ranking, keep), g.count);
  if (!p.names().empty()) {
    std::vector<std::string> names;
    for (Candidate c : r.new_to_old) names.push_back(p.names()[c]);
    r.profile.set_names(std::move(names));
  }
  return r;
}

std::optional<Ranking> majority_ranking(const Profile& p) {
  const Profile c = p.canonical();
  for (const auto& g : c.groups()) {
    if (2 * g.count > p.num_voters()) return g.ranking;
  }
  return std::nullopt;
}

std::optional<Candidate> condorcet_winner(const Profile& p) {
  const std::size_t m = p.num_candidates();
  std::vector<std::int64_t> margin(m * m, 0);
  for (const auto& g : p.groups()) {
    const auto order = g.ranking.order();
    const auto w = static_cast<std::int64_t>(g.count);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        margin[order[i] * m + order[j]] += w;
        margin[order[j] * m + order[i]] -= w;
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    bool beats_all = true;
    for (std::size_t b = 0; b < m && beats_all; ++b) {
      if (a != b && margin[a * m + b] <= 0) beats_all = false;
    }
    if (beats_all) return static_cast<Candidate>(a);
  }
  return std::nullopt;
}

}  // namespace rankagg
