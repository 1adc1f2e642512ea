#include "resonant/word.hpp"

#include <array>

#include "resonant/errors.hpp"

namespace resonant {

const char* to_string(WordShape shape) {
  switch (shape) {
    case WordShape::HR: return "HR";
    case WordShape::RH: return "RH";
    case WordShape::RR: return "RR";
    case WordShape::HH: return "HH";
    case WordShape::PureH: return "PureH";
    case WordShape::PureR: return "PureR";
  }
  return "?";
}

Word::Word(std::span<const Block> blocks) {
  for (const Block& b : blocks) push(b);
}

Word::Word(std::initializer_list<Block> blocks)
    : Word(std::span<const Block>(blocks.begin(), blocks.size())) {}

void Word::push(Block block) {
  if (block.exponent == 0) return;
  (block.kind == BlockKind::H ? h_total_ : r_total_) += block.exponent;
  if (!blocks_.empty() && blocks_.back().kind == block.kind) {
    blocks_.back().exponent += block.exponent;
  } else {
    blocks_.push_back(block);
  }
}

Word operator+(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  for (const Block& b : rhs.blocks_) out.push(b);
  return out;
}

WordShape classify(const Word& word) {
  if (word.empty()) throw std::invalid_argument("empty word has no shape");
  const auto blocks = word.blocks();
  const BlockKind first = blocks.front().kind;
  const BlockKind last = blocks.back().kind;
  if (blocks.size() == 1) return first == BlockKind::H ? WordShape::PureH : WordShape::PureR;
  if (first == BlockKind::H) return last == BlockKind::R ? WordShape::HR : WordShape::HH;
  return last == BlockKind::H ? WordShape::RH : WordShape::RR;
}

std::vector<std::uint64_t> rotation_factor_profile(const Word& word) {
  std::vector<std::uint64_t> out;
  for (const Block& b : word.blocks()) {
    if (b.kind == BlockKind::R) out.push_back(b.exponent);
  }
  return out;
}

Mat2 evaluate_word(const Word& word, double theta, double lambda) {
  const Mat2 rot = rotation_matrix(theta);
  Mat2 acc = Mat2::identity();
  for (const Block& b : word.blocks()) {
    if (b.kind == BlockKind::H) {
      acc = acc * h_matrix(lambda, b.exponent);
    } else {
      for (std::uint64_t i = 0; i < b.exponent; ++i) acc = acc * rot;
    }
    if (!acc.is_finite()) throw NumericGuardError("word product overflows double precision");
  }
  return acc;
}

namespace {

// Compositions of `total` into `parts` positive integers, lexicographically.
void compositions(std::uint64_t total, std::uint64_t parts, std::vector<std::uint64_t>& prefix,
                  const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  if (parts == 1) {
    prefix.push_back(total);
    fn(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint64_t first = 1; first + (parts - 1) <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, fn);
    prefix.pop_back();
  }
}

void for_each_composition(std::uint64_t total, std::uint64_t parts,
                          const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  if (parts == 0 || parts > total) return;
  std::vector<std::uint64_t> prefix;
  prefix.reserve(parts);
  compositions(total, parts, prefix, fn);
}

constexpr std::array<WordShape, 4> kShapeOrder = {WordShape::HR, WordShape::RH, WordShape::RR,
                                                  WordShape::HH};

std::uint64_t h_block_count(WordShape shape, std::uint64_t k) {
  switch (shape) {
    case WordShape::HR:
    case WordShape::RH: return k;
    case WordShape::RR: return k - 1;
    case WordShape::HH: return k + 1;
    default: return 0;
  }
}

Word interleave(WordShape shape, const std::vector<std::uint64_t>& rot,
                const std::vector<std::uint64_t>& hs) {
  Word w;
  const bool starts_with_h = shape == WordShape::HR || shape == WordShape::HH;
  std::size_t hi = 0;
  for (std::size_t ri = 0; ri < rot.size(); ++ri) {
    if (starts_with_h || ri > 0) w.push(H(hs[hi++]));
    w.push(R(rot[ri]));
  }
  if (hi < hs.size()) w.push(H(hs[hi++]));
  return w;
}

}  // namespace

void for_each_word(std::uint64_t n, std::uint64_t m_max,
                   const std::function<void(const Word&)>& visit) {
  if (n == 0) return;
  visit(Word{H(n)});
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    for (std::uint64_t k = 1; k <= m; ++k) {
      for (WordShape shape : kShapeOrder) {
        const std::uint64_t hk = h_block_count(shape, k);
        if (hk == 0 || hk > n) continue;
        for_each_composition(m, k, [&](const std::vector<std::uint64_t>& rot) {
          for_each_composition(n, hk, [&](const std::vector<std::uint64_t>& hs) {
            visit(interleave(shape, rot, hs));
          });
        });
      }
    }
  }
}

std::vector<Word> enumerate_words(std::uint64_t n, std::uint64_t m_max) {
  std::vector<Word> out;
  for_each_word(n, m_max, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::size_t WordHash::operator()(const Word& word) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Block& b : word.blocks()) {
    h ^= static_cast<std::size_t>(b.exponent) * 2 + (b.kind == BlockKind::R ? 1 : 0);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace resonant
