#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rankagg/profile.hpp"

namespace rankagg {

// Text profile format:
//
//   # optional comment lines
//   m g
//   names: n_0 ... n_{m-1}        (optional, directly after the header)
//   count: i_1 i_2 ... i_m        (g lines, 0-based indices, best first)
//
// Errors carry the offending line number (ParseError).
Profile parse_profile(std::string_view text);

// Canonical form: duplicate rankings merged, groups in lexicographic order.
std::string serialize_profile(const Profile& p);

Profile read_profile(const std::filesystem::path& path);
void write_profile(const std::filesystem::path& path, const Profile& p);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace rankagg
