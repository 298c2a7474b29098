#pragma once

// Small dense bitset over slot indices, shared by the exact searches.

#include <cstdint>
#include <vector>

namespace locdom::detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t size() const { return n_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }
  bool all() const { return count() == n_; }
  bool none() const {
    for (std::uint64_t x : w_) {
      if (x) return false;
    }
    return true;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    r &= o;
    return r;
  }
  Bits operator~() const {
    Bits r = *this;
    for (auto& x : r.w_) x = ~x;
    if (n_ & 63) r.w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    return r;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & o.w_[i]) return true;
    }
    return false;
  }
  bool operator==(const Bits& o) const { return w_ == o.w_; }

  // Invokes f(i) for every set bit, ascending.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t x = w_[wi];
      while (x) {
        std::size_t b = static_cast<std::size_t>(__builtin_ctzll(x));
        f((wi << 6) + b);
        x &= x - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace locdom::detail
