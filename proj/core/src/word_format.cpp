#include "resonant/word_format.hpp"

#include <cctype>
#include <charconv>

namespace resonant {

WordParseError::WordParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Block parse_block(Cursor& cur) {
  cur.skip_space();
  BlockKind kind;
  switch (cur.peek()) {
    case 'H': kind = BlockKind::H; break;
    case 'R': kind = BlockKind::R; break;
    default: throw WordParseError("expected 'H' or 'R'", cur.pos());
  }
  cur.advance();
  cur.skip_space();
  if (cur.peek() != ':') throw WordParseError("expected ':'", cur.pos());
  cur.advance();
  cur.skip_space();

  const std::string_view rest = cur.rest();
  std::uint64_t exponent = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
  if (ec == std::errc::result_out_of_range) throw WordParseError("exponent out of range", cur.pos());
  if (ec != std::errc() || ptr == rest.data()) throw WordParseError("expected exponent", cur.pos());
  if (exponent == 0) throw WordParseError("exponent must be positive", cur.pos());
  cur.advance(static_cast<std::size_t>(ptr - rest.data()));
  return {kind, exponent};
}

}  // namespace

Word parse_word(std::string_view spec) {
  Cursor cur(spec);
  cur.skip_space();
  if (cur.done()) throw WordParseError("empty word specification", 0);

  Word word;
  word.push(parse_block(cur));
  while (true) {
    cur.skip_space();
    if (cur.done()) break;
    if (cur.peek() != ',') throw WordParseError("expected ',' or end of input", cur.pos());
    cur.advance();
    word.push(parse_block(cur));
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (const Block& b : word.blocks()) {
    if (!out.empty()) out += ',';
    out += b.kind == BlockKind::H ? 'H' : 'R';
    out += ':';
    out += std::to_string(b.exponent);
  }
  return out;
}

}  // namespace resonant
