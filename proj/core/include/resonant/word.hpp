#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "resonant/mat2.hpp"

namespace resonant {

enum class BlockKind : std::uint8_t { H, R };

struct Block {
  BlockKind kind;
  std::uint64_t exponent;

  friend bool operator==(const Block&, const Block&) = default;
};

// Boundary type of a word, decided by the kinds of its first and last blocks.
enum class WordShape : std::uint8_t { HR, RH, RR, HH, PureH, PureR };

const char* to_string(WordShape shape);

/**
 * A finite product of blocks h^i and R_theta^j, stored in canonical form:
 * adjacent blocks always have distinct kinds and every exponent is >= 1.
 * Zero exponents are dropped and same-kind neighbours merged on construction,
 * so two words with the same product structure compare equal.
 * The empty word is the identity.
 */
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Block> blocks);
  Word(std::initializer_list<Block> blocks);

  std::span<const Block> blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  std::size_t size() const { return blocks_.size(); }

  // Sum of H-block exponents (n) and of R-block exponents (m).
  std::uint64_t h_total() const { return h_total_; }
  std::uint64_t r_total() const { return r_total_; }

  // Appends a block, merging with the last one when the kinds agree.
  void push(Block block);

  friend Word operator+(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word& lhs, const Word& rhs) { return lhs.blocks_ == rhs.blocks_; }

 private:
  std::vector<Block> blocks_;
  std::uint64_t h_total_ = 0;
  std::uint64_t r_total_ = 0;
};

inline Block H(std::uint64_t e) { return {BlockKind::H, e}; }
inline Block R(std::uint64_t e) { return {BlockKind::R, e}; }

// Throws std::invalid_argument for the empty word.
WordShape classify(const Word& word);

// Exponents (j_1, ..., j_k) of the rotation blocks, in order.
std::vector<std::uint64_t> rotation_factor_profile(const Word& word);

// Exact left-to-right product with h = diag(lambda, 0). R-blocks are
// expanded into repeated products of R_theta, so this stays independent of
// the closed-form norm. Throws NumericGuardError on overflow.
Mat2 evaluate_word(const Word& word, double theta, double lambda);

// Every canonical word with h_total == n and r_total <= m_max, each exactly
// once, ordered by (m, k, boundary shape, rotation composition, h
// composition). The count grows exponentially; meant for oracle use only.
void for_each_word(std::uint64_t n, std::uint64_t m_max,
                   const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_words(std::uint64_t n, std::uint64_t m_max);

struct WordHash {
  std::size_t operator()(const Word& word) const noexcept;
};

}  // namespace resonant
