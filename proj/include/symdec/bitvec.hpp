// Copyright 2026 The symdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMDEC_BITVEC_HPP
#define SYMDEC_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace symdec {

// Fixed-length bit vector packed into 64-bit words, least significant bit
// first. Bit i lives in word i/64 at position i%64. Unused tail bits of the
// last word are kept zero so that word-wise equality and comparisons are
// valid.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n_bits)
      : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

  std::size_t size() const { return n_bits_; }
  std::size_t word_count() const { return words_.size(); }
  std::uint64_t word(std::size_t w) const { return words_[w]; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value = true) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  BitVec& operator^=(const BitVec& other) {
    require_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  BitVec& operator&=(const BitVec& other) {
    require_same_size(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  bool operator==(const BitVec& other) const = default;

  // Parity of the overlap |a AND b| mod 2; the workhorse of commutation
  // checks.
  static bool and_parity(const BitVec& a, const BitVec& b) {
    a.require_same_size(b);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      acc ^= a.words_[i] & b.words_[i];
    return std::popcount(acc) & 1;
  }

  // Strict "front-loaded" order: a < b iff at the first index where they
  // differ, a has the 1. Equal vectors compare false. With LSB-first packing
  // the first differing index is the lowest set bit of the XOR of words.
  static bool front_loaded_less(const BitVec& a, const BitVec& b) {
    a.require_same_size(b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t x = a.words_[i] ^ b.words_[i];
      if (x) {
        int bit = std::countr_zero(x);
        return (a.words_[i] >> bit) & 1;
      }
    }
    return false;
  }

  // Indices of set bits, ascending.
  std::vector<int> ones() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        int bit = std::countr_zero(x);
        out.push_back(static_cast<int>(w * 64 + bit));
        x &= x - 1;
      }
    }
    return out;
  }

 private:
  void require_same_size(const BitVec& other) const {
    if (n_bits_ != other.n_bits_)
      throw std::invalid_argument("BitVec length mismatch");
  }

  std::size_t n_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace symdec

#endif
