#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cosr {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Positions of set bits in ascending order.
inline std::vector<std::size_t> members(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(i);
}

inline Bits full_bits(std::size_t n) {
  Bits b(n);
  b.set();
  return b;
}

}  // namespace cosr
