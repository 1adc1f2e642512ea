#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "resonant/word.hpp"

namespace resonant {

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: block (',' block)*, block = ('H' | 'R') ':' positive-integer.
// Whitespace around tokens is ignored. Returns the canonical word.
Word parse_word(std::string_view spec);

// Inverse of parse_word on canonical words, e.g. "H:5,R:2,H:9".
std::string format_word(const Word& word);

}  // namespace resonant
