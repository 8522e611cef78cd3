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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patternq {

/// Raised when a caller violates an operation's precondition (length
/// mismatch, out-of-range index, malformed recipe, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truth table of a Boolean function f: B^n -> B stored as a bit sequence of
/// length 2^n, where bit i holds f(i).
///
/// Bits are packed little-endian into 64-bit words, so index i lives in
/// word i / 64 at position i % 64. The textual form is MSB-first: the
/// character for index 2^n - 1 is printed leftmost.
class PatternVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// All-zero vector (the constant-0 function) of the given length.
  explicit PatternVector(std::size_t length);

  static PatternVector zeros(std::size_t length) { return PatternVector(length); }
  static PatternVector ones(std::size_t length);

  /// Builds a vector of length <= 64 from the low `length` bits of `bits`.
  static PatternVector from_word(Word bits, std::size_t length);

  /// Parses an MSB-first string of '0'/'1'. Whitespace and '_' are ignored.
  static PatternVector parse(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  /// n such that size() == 2^n.
  int arity() const noexcept { return arity_; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1};
  }
  bool bit(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  std::span<const Word> words() const noexcept { return words_; }
  /// Low 64 bits; the whole vector when size() <= 64.
  Word low_word() const noexcept { return words_.front(); }

  std::size_t count_ones() const noexcept;
  std::size_t count_zeros() const noexcept { return size_ - count_ones(); }

  std::string to_string() const;

  PatternVector& operator^=(const PatternVector& other);

  friend bool operator==(const PatternVector&, const PatternVector&) = default;

 private:
  void clear_padding() noexcept;

  std::size_t size_ = 0;
  int arity_ = 0;
  std::vector<Word> words_;
};

PatternVector operator^(PatternVector a, const PatternVector& b);
std::ostream& operator<<(std::ostream& os, const PatternVector& p);

/// Number of indices at which `a` and `b` differ.
std::size_t hamming_distance(const PatternVector& a, const PatternVector& b);

/// Pattern of the negated function.
PatternVector negate(PatternVector p);

/// Block product: block i of the result (|q| bits starting at i*|q|) is q
/// when p_i = 0 and negate(q) when p_i = 1, i.e. bit j + i*|q| = p_i ^ q_j.
PatternVector pattern_product(const PatternVector& p, const PatternVector& q);

/// Function-level evaluation of the product at one input without building
/// the whole product vector.
bool extended_product_eval(const PatternVector& p, const PatternVector& q, std::size_t index);

/// true iff `length` is 2^n for some n >= 1.
constexpr bool is_pattern_length(std::size_t length) noexcept {
  return length >= 2 && (length & (length - 1)) == 0;
}

}  // namespace patternq
