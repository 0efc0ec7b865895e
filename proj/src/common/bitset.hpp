// Copyright 2026 the aftkit authors

#ifndef AFT_COMMON_BITSET_HPP
#define AFT_COMMON_BITSET_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace aft {

/// Fixed-width dynamic bitset; the value type behind interpretations and
/// possible world structures.  Two bitsets compare equal only if they have the
/// same width; ordering is by numeric value (bit 0 least significant), which
/// is the canonical element order used everywhere output must be stable.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  /// Low `nbits` of `value`; handy for small universes.
  static Bitset from_value(std::size_t nbits, std::uint64_t value) {
    Bitset b(nbits);
    if (!b.w_.empty()) b.w_[0] = value;
    b.trim();
    return b;
  }
  static Bitset zeros(std::size_t nbits) { return Bitset(nbits); }
  static Bitset ones(std::size_t nbits) {
    Bitset b(nbits);
    for (auto& w : b.w_) w = ~0ull;
    b.trim();
    return b;
  }

  std::size_t size() const { return nbits_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v = true) {
    if (v)
      w_[i >> 6] |= 1ull << (i & 63);
    else
      w_[i >> 6] &= ~(1ull << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  Bitset operator~() const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

  std::strong_ordering operator<=>(const Bitset& o) const {
    if (nbits_ != o.nbits_) return nbits_ <=> o.nbits_;
    for (std::size_t i = w_.size(); i-- > 0;) {
      if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
    }
    return std::strong_ordering::equal;
  }

  /// Value of the low 64 bits; only meaningful for widths <= 64.
  std::uint64_t low64() const { return w_.empty() ? 0 : w_[0]; }

  /// Indices of set bits, ascending.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        out.push_back(wi * 64 + b);
        w &= w - 1;
      }
    }
    return out;
  }

private:
  void trim() {
    if (nbits_ % 64 != 0 && !w_.empty()) w_.back() &= (~0ull) >> (64 - nbits_ % 64);
  }
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace aft

#endif
