/*
 * Copyright 2026 The Shapestone Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SHAPESTONE_BITS_HPP_
#define SHAPESTONE_BITS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace shapestone {

/// Fixed-width dynamic bitset over a dense index range [0, size).
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t size);

  static BitSet full(std::size_t size);
  static BitSet singleton(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  bool is_subset_of(const BitSet& other) const;
  bool intersects(const BitSet& other) const;

  BitSet& operator|=(const BitSet& other);
  BitSet& operator&=(const BitSet& other);
  /// Set difference.
  BitSet& operator-=(const BitSet& other);
  BitSet complement() const;

  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }
  friend bool operator==(const BitSet&, const BitSet&) = default;

  /// Indices of set bits, ascending.
  std::vector<std::size_t> members() const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Square boolean matrix; row i holds the successors of element i.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  static BitMatrix identity(std::size_t n);

  std::size_t dimension() const { return n_; }
  bool test(std::size_t i, std::size_t j) const {
    return (data_[i * stride_ + (j >> 6)] >> (j & 63)) & 1U;
  }
  void set(std::size_t i, std::size_t j) {
    data_[i * stride_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  }

  BitSet row(std::size_t i) const;
  std::span<const std::uint64_t> row_words(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }
  bool rows_equal(std::size_t i, const BitMatrix& other, std::size_t j) const;
  bool rows_intersect(std::size_t i, const BitMatrix& other, std::size_t j) const;
  /// Number of set bits in (row i) & mask.
  std::size_t row_count_masked(std::size_t i, const BitSet& mask) const;

  std::size_t count() const;
  bool none() const;
  bool is_subset_of(const BitMatrix& other) const;

  BitMatrix& operator|=(const BitMatrix& other);
  BitMatrix& operator&=(const BitMatrix& other);
  friend BitMatrix operator|(BitMatrix a, const BitMatrix& b) { return a |= b; }
  friend BitMatrix operator&(BitMatrix a, const BitMatrix& b) { return a &= b; }
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  BitMatrix transpose() const;
  /// Relational composition: (i,k) set iff some j has (i,j) in *this and (j,k) in rhs.
  BitMatrix compose(const BitMatrix& rhs) const;
  /// Reflexive-transitive closure by repeated squaring of (I | R).
  /// `rounds`, when given, receives the number of squarings performed.
  BitMatrix reflexive_transitive_closure(std::size_t* rounds = nullptr) const;

  std::span<const std::uint64_t> words() const { return data_; }
  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Feeds a word sequence into a running 64-bit hash.
std::size_t hash_words(std::span<const std::uint64_t> words, std::size_t seed = 0);

}  // namespace shapestone

#endif  // SHAPESTONE_BITS_HPP_
