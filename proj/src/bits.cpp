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

#include "shapestone/bits.hpp"

#include <bit>

namespace shapestone {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

std::size_t hash_words(std::span<const std::uint64_t> words, std::size_t seed) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ seed;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
  }
  return static_cast<std::size_t>(h);
}

BitSet::BitSet(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitSet BitSet::full(std::size_t size) {
  BitSet s(size);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

BitSet BitSet::singleton(std::size_t size, std::size_t index) {
  BitSet s(size);
  s.set(index);
  return s;
}

void BitSet::trim() {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

std::size_t BitSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitSet::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool BitSet::is_subset_of(const BitSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool BitSet::intersects(const BitSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

BitSet& BitSet::operator|=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitSet& BitSet::operator-=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

BitSet BitSet::complement() const {
  BitSet s(*this);
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

std::vector<std::size_t> BitSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t BitSet::hash() const { return hash_words(words_, size_); }

BitMatrix::BitMatrix(std::size_t n) : n_(n), stride_(word_count(n)), data_(n * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitSet BitMatrix::row(std::size_t i) const {
  BitSet s(n_);
  for (std::size_t w = 0; w < stride_; ++w) {
    std::uint64_t bits = data_[i * stride_ + w];
    while (bits != 0) {
      s.set(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return s;
}

bool BitMatrix::rows_equal(std::size_t i, const BitMatrix& other, std::size_t j) const {
  for (std::size_t w = 0; w < stride_; ++w) {
    if (data_[i * stride_ + w] != other.data_[j * stride_ + w]) return false;
  }
  return true;
}

bool BitMatrix::rows_intersect(std::size_t i, const BitMatrix& other, std::size_t j) const {
  for (std::size_t w = 0; w < stride_; ++w) {
    if (data_[i * stride_ + w] & other.data_[j * stride_ + w]) return true;
  }
  return false;
}

std::size_t BitMatrix::row_count_masked(std::size_t i, const BitSet& mask) const {
  auto mw = mask.words();
  std::size_t c = 0;
  for (std::size_t w = 0; w < stride_; ++w) {
    c += static_cast<std::size_t>(std::popcount(data_[i * stride_ + w] & mw[w]));
  }
  return c;
}

std::size_t BitMatrix::count() const {
  std::size_t c = 0;
  for (auto w : data_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitMatrix::none() const {
  for (auto w : data_) {
    if (w != 0) return false;
  }
  return true;
}

bool BitMatrix::is_subset_of(const BitMatrix& other) const {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] & ~other.data_[i]) return false;
  }
  return true;
}

BitMatrix& BitMatrix::operator|=(const BitMatrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] |= other.data_[i];
  return *this;
}

BitMatrix& BitMatrix::operator&=(const BitMatrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] &= other.data_[i];
  return *this;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t w = 0; w < stride_; ++w) {
      std::uint64_t bits = data_[i * stride_ + w];
      while (bits != 0) {
        t.set(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)), i);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::compose(const BitMatrix& rhs) const {
  BitMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t* dst = out.data_.data() + i * stride_;
    for (std::size_t w = 0; w < stride_; ++w) {
      std::uint64_t bits = data_[i * stride_ + w];
      while (bits != 0) {
        std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        const std::uint64_t* src = rhs.data_.data() + j * stride_;
        for (std::size_t k = 0; k < stride_; ++k) dst[k] |= src[k];
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::reflexive_transitive_closure(std::size_t* rounds) const {
  BitMatrix acc = *this | identity(n_);
  std::size_t r = 0;
  while (true) {
    BitMatrix next = acc.compose(acc);
    ++r;
    if (next == acc) break;
    acc = std::move(next);
  }
  if (rounds != nullptr) *rounds = r;
  return acc;
}

std::size_t BitMatrix::hash() const { return hash_words(data_, n_); }

}  // namespace shapestone
