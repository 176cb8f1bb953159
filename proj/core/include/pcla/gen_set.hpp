#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pcla {

/// Small set of generator indices, backed by a 64-bit mask.
/// Graphs are capped at 64 generators, which keeps supports, neighbourhood
/// tests and component bookkeeping O(1).
class GenSet {
public:
  constexpr GenSet() = default;

  static constexpr GenSet single(int i) { return GenSet(bit(i)); }

  /// {0, 1, ..., n-1}
  static constexpr GenSet full(int n) {
    return GenSet(n >= 64 ? ~std::uint64_t{0} : (bit(n) - 1));
  }

  constexpr bool contains(int i) const { return (bits_ & bit(i)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr void add(int i) { bits_ |= bit(i); }
  constexpr void remove(int i) { bits_ &= ~bit(i); }

  constexpr bool subset_of(GenSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(GenSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr GenSet operator|(GenSet o) const { return GenSet(bits_ | o.bits_); }
  constexpr GenSet operator&(GenSet o) const { return GenSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr GenSet operator-(GenSet o) const { return GenSet(bits_ & ~o.bits_); }

  constexpr GenSet& operator|=(GenSet o) { bits_ |= o.bits_; return *this; }
  constexpr GenSet& operator&=(GenSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const GenSet&) const = default;

  /// Smallest element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  /// k-th smallest element (0-based); undefined when k >= size().
  constexpr int nth(int k) const {
    std::uint64_t b = bits_;
    for (; k > 0; --k) b &= b - 1;
    return std::countr_zero(b);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr std::uint64_t raw() const { return bits_; }

private:
  constexpr explicit GenSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

  std::uint64_t bits_ = 0;
};

}  // namespace pcla
