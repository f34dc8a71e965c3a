#include "rankagg/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rankagg/errors.hpp"

namespace rankagg {

double expected_kendall(std::size_t m, double phi) {
  if (!(phi >= 0.0 && phi <= 1.0)) throw DomainError("phi must lie in [0, 1]");
  double total = 0.0;
  if (phi == 1.0) {
    for (std::size_t i = 1; i < m; ++i) total += static_cast<double>(i) / 2.0;
    return total;
  }
  double num = 0.0;
  double den = 1.0;  // j = 0 term
  double power = 1.0;
  for (std::size_t i = 1; i < m; ++i) {
    power *= phi;
    num += static_cast<double>(i) * power;
    den += power;
    total += num / den;
  }
  return total;
}

double phi_from_norm(std::size_t m, double norm_phi) {
  if (!(norm_phi >= 0.0 && norm_phi <= 1.0)) throw DomainError("norm-phi must lie in [0, 1]");
  if (norm_phi == 0.0 || norm_phi == 1.0 || m < 2) return norm_phi;
  const double target = norm_phi * static_cast<double>(m * (m - 1)) / 4.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (expected_kendall(m, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

MallowsParams MallowsParams::normalized(std::size_t m, double norm_phi) {
  return normalized(Ranking::identity(m), norm_phi);
}

MallowsParams MallowsParams::normalized(Ranking central, double norm_phi) {
  MallowsParams p;
  p.phi = phi_from_norm(central.size(), norm_phi);
  p.norm_phi = norm_phi;
  p.central = std::move(central);
  return p;
}

Ranking sample_mallows_ranking(const MallowsParams& params, Rng& rng) {
  const std::size_t m = params.num_candidates();
  std::vector<Candidate> order;
  order.reserve(m);
  std::vector<double> weight(m);
  for (std::size_t j = 0; j < m; ++j) weight[j] = std::pow(params.phi, static_cast<double>(j));
  for (std::size_t i = 0; i < m; ++i) {
    double total = 0.0;
    for (std::size_t j = 0; j <= i; ++j) total += weight[j];
    double u = rng.uniform() * total;
    std::size_t j = 0;
    while (j < i && u >= weight[j]) {
      u -= weight[j];
      ++j;
    }
    order.insert(order.end() - static_cast<std::ptrdiff_t>(j), params.central.at(i));
  }
  return Ranking(std::move(order));
}

Profile sample_mallows(const MallowsParams& params, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Profile p(params.num_candidates());
  for (std::size_t i = 0; i < n; ++i) p.add(sample_mallows_ranking(params, rng));
  return p.canonical();
}

Profile euclidean_profile(const std::vector<std::vector<double>>& candidates,
                          const std::vector<std::vector<double>>& voters) {
  const std::size_t m = candidates.size();
  for (const auto& pt : candidates) {
    if (pt.size() != candidates.front().size()) throw DimensionError("mixed point dimensions");
  }
  Profile p(m);
  std::vector<double> dist(m);
  std::vector<Candidate> order(m);
  for (const auto& v : voters) {
    for (std::size_t c = 0; c < m; ++c) {
      if (candidates[c].size() != v.size()) throw DimensionError("mixed point dimensions");
      double sq = 0.0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        const double diff = candidates[c][k] - v[k];
        sq += diff * diff;
      }
      dist[c] = sq;
    }
    std::iota(order.begin(), order.end(), Candidate{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Candidate a, Candidate b) { return dist[a] < dist[b]; });
    p.add(Ranking(order));
  }
  return p.canonical();
}

Profile sample_euclidean(std::size_t dim, std::size_t m, std::size_t n, std::uint64_t seed) {
  if (dim == 0) throw DomainError("Euclidean model needs dimension >= 1");
  Rng rng(seed);
  const auto draw = [&](std::size_t count) {
    std::vector<std::vector<double>> pts(count, std::vector<double>(dim));
    for (auto& pt : pts) {
      for (auto& x : pt) x = rng.uniform();
    }
    return pts;
  };
  const auto candidates = draw(m);
  const auto voters = draw(n);
  return euclidean_profile(candidates, voters);
}

Profile sample_impartial_culture(std::size_t m, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Profile p(m);
  for (std::size_t i = 0; i < n; ++i) p.add(uniform_ranking(m, rng));
  return p.canonical();
}

}  // namespace rankagg
