#include "coxdesc/subset.hpp"

#include <bit>
#include <charconv>

#include "coxdesc/errors.hpp"

namespace coxdesc {

SubsetMask SubsetMask::full(int rank) {
  return SubsetMask(rank >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1);
}

SubsetMask SubsetMask::single(int generator) {
  if (generator < 1 || generator > 32) throw InvalidArgument("generator index out of range: " + std::to_string(generator));
  return SubsetMask(std::uint32_t{1} << (generator - 1));
}

SubsetMask SubsetMask::chain(int j) { return full(j); }

SubsetMask SubsetMask::of(std::initializer_list<int> generators) {
  SubsetMask s;
  for (int g : generators) s = s.with(g);
  return s;
}

SubsetMask SubsetMask::of(const std::vector<int>& generators) {
  SubsetMask s;
  for (int g : generators) s = s.with(g);
  return s;
}

SubsetMask SubsetMask::parse(std::string_view text, int rank) {
  if (text == "-" || text.empty()) return SubsetMask();
  SubsetMask s;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("malformed subset '" + std::string(text) + "'");
    }
    if (value < 1 || value > rank) {
      throw InvalidArgument("subset index " + std::to_string(value) + " outside 1.." + std::to_string(rank));
    }
    s = s.with(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

bool SubsetMask::contains(int generator) const {
  return generator >= 1 && generator <= 32 && (bits_ >> (generator - 1)) & 1u;
}

int SubsetMask::size() const { return std::popcount(bits_); }

bool SubsetMask::fits(int rank) const { return is_subset_of(full(rank)); }

SubsetMask SubsetMask::with(int generator) const { return *this | single(generator); }
SubsetMask SubsetMask::without(int generator) const { return *this - single(generator); }

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if ((bits_ >> i) & 1u) out.push_back(i + 1);
  }
  return out;
}

std::string SubsetMask::to_string() const {
  if (bits_ == 0) return "-";
  std::string out;
  for (int g : indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(g);
  }
  return out;
}

std::vector<SubsetMask> all_subsets(int rank) {
  std::vector<SubsetMask> out;
  const std::uint32_t count = std::uint32_t{1} << rank;
  out.reserve(count);
  for (std::uint32_t b = 0; b < count; ++b) out.emplace_back(b);
  return out;
}

}  // namespace coxdesc
