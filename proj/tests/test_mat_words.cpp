#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "resonant/errors.hpp"
#include "resonant/mat2.hpp"
#include "resonant/params.hpp"
#include "resonant/word.hpp"
#include "resonant/word_format.hpp"

using namespace resonant;
using std::numbers::pi;

namespace {

bool approx_equal(const Mat2& x, const Mat2& y, double tol = 1e-14) {
  return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol && std::abs(x.c - y.c) <= tol &&
         std::abs(x.d - y.d) <= tol;
}

// Every word as a raw letter sequence with n h's and m <= m_max r's,
// canonicalized by Word's merging. Independent of the composition generator.
std::set<std::string> letter_sequence_oracle(std::uint64_t n, std::uint64_t m_max) {
  std::set<std::string> out;
  for (std::uint64_t m = 0; m <= m_max; ++m) {
    const std::uint64_t len = n + m;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      if (static_cast<std::uint64_t>(std::popcount(mask)) != m) continue;
      Word w;
      for (std::uint64_t i = 0; i < len; ++i) w.push((mask >> i) & 1 ? R(1) : H(1));
      out.insert(format_word(w));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("params reject out-of-range values") {
  CHECK_NOTHROW(Params(2.0, 0.5, 0.5));
  CHECK_THROWS_AS(Params(1.0, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Params(0.5, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Params(2.0, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Params(2.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Params(2.0, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(2.0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params(std::nan(""), 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("rotation budget tolerates decimal representation error") {
  CHECK(Params(2.0, 0.5, 0.29).rotation_budget(100) == 29);
  CHECK(Params(2.0, 0.5, 0.3).rotation_budget(10) == 3);
  CHECK(Params(2.0, 0.5, 0.5).rotation_budget(1) == 0);
  CHECK(Params(2.0, 0.5, 0.25).rotation_budget(7) == 1);
}

TEST_CASE("rotation_matrix") {
  CHECK(rotation_matrix(0.0) == Mat2::identity());
  CHECK(rotation_matrix(pi / 2) == Mat2{0.0, -1.0, 1.0, 0.0});
  CHECK(approx_equal(rotation_matrix(pi / 3), {0.5, -std::sqrt(3.0) / 2, std::sqrt(3.0) / 2, 0.5}));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-20.0, 20.0);
  for (int i = 0; i < 100; ++i) CHECK(rotation_matrix(angle(rng)).det() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("h_matrix") {
  CHECK(h_matrix(2.0, 1) == Mat2{2.0, 0.0, 0.0, 0.0});
  CHECK(h_matrix(2.0, 3) == Mat2{8.0, 0.0, 0.0, 0.0});
  CHECK(h_matrix(1.5, 2) == Mat2{2.25, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(h_matrix(2.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(h_matrix(2.0, 2000), NumericGuardError);
}

TEST_CASE("word canonical form") {
  const Word w{H(2), H(3), R(0), R(1), R(4), H(1)};
  CHECK(w == Word{H(5), R(5), H(1)});
  CHECK(w.h_total() == 6);
  CHECK(w.r_total() == 5);
  CHECK(Word{R(0), H(0)}.empty());
  CHECK(Word{H(1), R(2)} + Word{R(1), H(3)} == Word{H(1), R(3), H(3)});
}

TEST_CASE("evaluate_word examples") {
  CHECK(evaluate_word(Word{H(1)}, 0.7, 2.0) == Mat2{2.0, 0.0, 0.0, 0.0});
  CHECK(evaluate_word(Word{H(1), R(1), H(1)}, pi / 2, 2.0) == Mat2::zero());
  const Mat2 m = evaluate_word(Word{H(1), R(1)}, pi / 3, 2.0);
  CHECK(approx_equal(m, {1.0, -std::sqrt(3.0), 0.0, 0.0}));
  CHECK(l1_entry_norm(m) == doctest::Approx(2.7320508075688772).epsilon(1e-14));
  CHECK(evaluate_word(Word{}, 1.0, 2.0) == Mat2::identity());
  CHECK_THROWS_AS(evaluate_word(Word{H(1100)}, 0.0, 2.0), NumericGuardError);
}

TEST_CASE("l1_entry_norm") {
  CHECK(l1_entry_norm(Mat2::zero()) == 0.0);
  CHECK(l1_entry_norm(Mat2::identity()) == 2.0);
  CHECK(l1_entry_norm({1.0, -2.0, -3.0, 4.0}) == 10.0);
}

TEST_CASE("l1_entry_norm is subadditive and submultiplicative") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 a{u(rng), u(rng), u(rng), u(rng)};
    const Mat2 b{u(rng), u(rng), u(rng), u(rng)};
    CHECK(l1_entry_norm(a + b) <= l1_entry_norm(a) + l1_entry_norm(b) + 1e-12);
    CHECK(l1_entry_norm(a * b) <= l1_entry_norm(a) * l1_entry_norm(b) * (1 + 1e-12));
  }
}

TEST_CASE("classify") {
  CHECK(classify(Word{H(2), R(1), H(3)}) == WordShape::HH);
  CHECK(classify(Word{R(1), H(5), R(2)}) == WordShape::RR);
  CHECK(classify(Word{H(7)}) == WordShape::PureH);
  CHECK(classify(Word{R(3)}) == WordShape::PureR);
  CHECK(classify(Word{H(1), R(1)}) == WordShape::HR);
  CHECK(classify(Word{R(2), H(1), R(3), H(4)}) == WordShape::RH);
  CHECK_THROWS_WITH_AS(classify(Word{}), "empty word has no shape", std::invalid_argument);
}

TEST_CASE("enumerate_words small cases") {
  const auto one = enumerate_words(1, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Word{H(1)});

  const std::vector<Word> expected{Word{H(2)}, Word{H(2), R(1)}, Word{R(1), H(2)},
                                   Word{H(1), R(1), H(1)}};
  CHECK(enumerate_words(2, 1) == expected);

  const auto words = enumerate_words(1, 2);
  CHECK(words.size() == 6);
  CHECK(std::find(words.begin(), words.end(), Word{R(2), H(1)}) != words.end());
  CHECK(std::find(words.begin(), words.end(), Word{R(1), H(1), R(1)}) != words.end());
}

TEST_CASE("enumerate_words matches letter-sequence oracle without duplicates") {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (std::uint64_t m_max = 0; m_max <= 4; ++m_max) {
      const auto words = enumerate_words(n, m_max);
      std::unordered_set<Word, WordHash> unique(words.begin(), words.end());
      CHECK(unique.size() == words.size());
      std::set<std::string> formatted;
      for (const Word& w : words) {
        CHECK(w.h_total() == n);
        CHECK(w.r_total() <= m_max);
        formatted.insert(format_word(w));
      }
      CHECK(formatted == letter_sequence_oracle(n, m_max));
    }
  }
}

TEST_CASE("evaluate_word respects concatenation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  const auto words = enumerate_words(5, 4);
  for (const Word& w : words) {
    const auto blocks = w.blocks();
    std::uniform_int_distribution<std::size_t> cut(0, blocks.size());
    const std::size_t c = cut(rng);
    const Word left(blocks.first(c));
    const Word right(blocks.subspan(c));
    const double theta = angle(rng);
    const Mat2 whole = evaluate_word(w, theta, 2.0);
    const Mat2 parts = evaluate_word(left, theta, 2.0) * evaluate_word(right, theta, 2.0);
    CHECK(approx_equal(whole, parts, 1e-12 * std::max(1.0, l1_entry_norm(whole))));
  }
}

TEST_CASE("HH and PureH products keep only the (1,1) entry") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (const Word& w : enumerate_words(n, 4)) {
      const Mat2 m = evaluate_word(w, angle(rng), 2.0);
      const WordShape shape = classify(w);
      if (shape == WordShape::HH || shape == WordShape::PureH) {
        CHECK(m.b == 0.0);
        CHECK(m.c == 0.0);
        CHECK(m.d == 0.0);
      }
      CHECK(std::abs(m.det()) <= 1e-12 * std::max(1.0, l1_entry_norm(m) * l1_entry_norm(m)));
    }
  }
}
