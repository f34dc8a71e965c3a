#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

#include <boost/rational.hpp>

namespace rankagg {

// Dense 0-based candidate index.
using Candidate = std::uint32_t;

// Subset of candidates as a bitmask; bit c set means candidate c is a member.
// Every algorithm that works on subsets is limited to 64 candidates.
using CandidateMask = std::uint64_t;

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kMaxMaskCandidates = 64;

constexpr CandidateMask bit(Candidate c) noexcept { return CandidateMask{1} << c; }

constexpr CandidateMask full_mask(std::size_t m) noexcept {
  return m >= 64 ? ~CandidateMask{0} : (CandidateMask{1} << m) - 1;
}

constexpr bool contains(CandidateMask set, Candidate c) noexcept { return (set >> c) & 1U; }

constexpr std::size_t popcount(CandidateMask set) noexcept {
  return static_cast<std::size_t>(std::popcount(set));
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace rankagg
