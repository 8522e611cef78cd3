// Copyright 2026 The patternq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patternq/pattern_vector.hpp"

#include <bit>
#include <cctype>
#include <ostream>

namespace patternq {

namespace {

std::size_t word_count(std::size_t length) {
  return (length + PatternVector::kWordBits - 1) / PatternVector::kWordBits;
}

void require_same_length(const PatternVector& a, const PatternVector& b, const char* op) {
  if (a.size() != b.size()) {
    throw UsageError(std::string(op) + ": length mismatch (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

PatternVector::PatternVector(std::size_t length) : size_(length) {
  if (!is_pattern_length(length)) {
    throw UsageError("pattern vector length must be a power of two >= 2, got " +
                     std::to_string(length));
  }
  arity_ = std::countr_zero(length);
  words_.assign(word_count(length), Word{0});
}

PatternVector PatternVector::ones(std::size_t length) {
  PatternVector p(length);
  for (auto& w : p.words_) w = ~Word{0};
  p.clear_padding();
  return p;
}

PatternVector PatternVector::from_word(Word bits, std::size_t length) {
  if (length > kWordBits) {
    throw UsageError("from_word: length " + std::to_string(length) + " exceeds 64");
  }
  PatternVector p(length);
  p.words_[0] = bits;
  p.clear_padding();
  return p;
}

PatternVector PatternVector::parse(std::string_view text) {
  std::string digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      digits.push_back(c);
    } else if (c == '_' || std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      throw UsageError("invalid character '" + std::string(1, c) + "' in pattern vector \"" +
                       std::string(text) + "\"");
    }
  }
  PatternVector p(digits.size());
  const std::size_t n = digits.size();
  for (std::size_t k = 0; k < n; ++k) {
    // digits[0] is index n-1.
    if (digits[k] == '1') p.set(n - 1 - k, true);
  }
  return p;
}

bool PatternVector::bit(std::size_t i) const {
  if (i >= size_) {
    throw UsageError("bit index " + std::to_string(i) + " out of range for length " +
                     std::to_string(size_));
  }
  return (*this)[i];
}

void PatternVector::set(std::size_t i, bool value) {
  if (i >= size_) {
    throw UsageError("bit index " + std::to_string(i) + " out of range for length " +
                     std::to_string(size_));
  }
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void PatternVector::flip(std::size_t i) {
  if (i >= size_) {
    throw UsageError("bit index " + std::to_string(i) + " out of range for length " +
                     std::to_string(size_));
  }
  words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

std::size_t PatternVector::count_ones() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string PatternVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) out[size_ - 1 - i] = '1';
  }
  return out;
}

PatternVector& PatternVector::operator^=(const PatternVector& other) {
  require_same_length(*this, other, "xor");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

void PatternVector::clear_padding() noexcept {
  const std::size_t used = size_ % kWordBits;
  if (used != 0) words_.back() &= (Word{1} << used) - 1;
}

PatternVector operator^(PatternVector a, const PatternVector& b) {
  a ^= b;
  return a;
}

std::ostream& operator<<(std::ostream& os, const PatternVector& p) { return os << p.to_string(); }

std::size_t hamming_distance(const PatternVector& a, const PatternVector& b) {
  require_same_length(a, b, "hamming_distance");
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t d = 0;
  for (std::size_t k = 0; k < wa.size(); ++k) {
    d += static_cast<std::size_t>(std::popcount(wa[k] ^ wb[k]));
  }
  return d;
}

PatternVector negate(PatternVector p) {
  p ^= PatternVector::ones(p.size());
  return p;
}

PatternVector pattern_product(const PatternVector& p, const PatternVector& q) {
  const std::size_t block = q.size();
  PatternVector out(p.size() * block);
  const PatternVector q_bar = negate(q);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const PatternVector& src = p[i] ? q_bar : q;
    for (std::size_t j = 0; j < block; ++j) {
      if (src[j]) out.set(j + i * block, true);
    }
  }
  return out;
}

bool extended_product_eval(const PatternVector& p, const PatternVector& q, std::size_t index) {
  const std::size_t block = q.size();
  if (index >= p.size() * block) {
    throw UsageError("extended_product_eval: index " + std::to_string(index) +
                     " out of range for product length " + std::to_string(p.size() * block));
  }
  const std::size_t i = index / block;
  const std::size_t j = index % block;
  return q[j] != p[i];
}

}  // namespace patternq
