#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rankagg/profile.hpp"
#include "rankagg/random.hpp"
#include "rankagg/ranking.hpp"

namespace rankagg {

// Expected swap distance to the central ranking under Mallows(phi):
//   sum_{i=1}^{m-1} (sum_{j<=i} j phi^j) / (sum_{j<=i} phi^j)
// Throws DomainError for phi outside [0, 1].
double expected_kendall(std::size_t m, double phi);

// The phi whose expected distance is norm_phi * m(m-1)/4, by bisection to
// 1e-12. 0 and 1 map to themselves exactly.
double phi_from_norm(std::size_t m, double norm_phi);

struct MallowsParams {
  Ranking central;
  double norm_phi = 0.0;
  double phi = 0.0;

  // Central ranking defaults to the identity.
  static MallowsParams normalized(std::size_t m, double norm_phi);
  static MallowsParams normalized(Ranking central, double norm_phi);
  std::size_t num_candidates() const noexcept { return central.size(); }
};

// Repeated insertion: the i-th item (0-based) goes j places before the end
// of the current list with probability phi^j / sum_{t<=i} phi^t.
Ranking sample_mallows_ranking(const MallowsParams& params, Rng& rng);
// Samplers return canonical profiles: identical votes share one group.
Profile sample_mallows(const MallowsParams& params, std::size_t n, std::uint64_t seed);

// Candidates then voters drawn uniformly from [0,1]^dim; each voter ranks by
// increasing squared distance, ties broken by candidate index.
Profile sample_euclidean(std::size_t dim, std::size_t m, std::size_t n, std::uint64_t seed);
Profile euclidean_profile(const std::vector<std::vector<double>>& candidates,
                          const std::vector<std::vector<double>>& voters);

Profile sample_impartial_culture(std::size_t m, std::size_t n, std::uint64_t seed);

}  // namespace rankagg
