#include "fusedlink/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "fusedlink/errors.hpp"

namespace fusedlink {

std::string to_token(Generator g) {
  char head = g.is_virtual() ? 't' : (g.sign() > 0 ? 's' : 'S');
  return head + std::to_string(g.index());
}

BraidWord::BraidWord(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("strand count must be at least 1");
  for (const auto& g : letters_) {
    if (g.index() < 1 || g.index() > strands_ - 1) {
      throw std::invalid_argument("letter " + to_token(g) + " out of range for " +
                                  std::to_string(strands_) + " strands");
    }
  }
}

bool BraidWord::is_classical() const noexcept {
  return std::none_of(letters_.begin(), letters_.end(),
                      [](const Generator& g) { return g.is_virtual(); });
}

int BraidWord::max_index() const noexcept {
  int best = 0;
  for (const auto& g : letters_) best = std::max(best, g.index());
  return best;
}

namespace {

int parse_positive(std::string_view digits, std::size_t column, std::string_view token) {
  if (digits.empty()) throw ParseError("missing index in token '" + std::string(token) + "'", column);
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("bad index in token '" + std::string(token) + "'", column);
  }
  if (value < 1) {
    throw ParseError("index must be positive in token '" + std::string(token) + "'", column);
  }
  return value;
}

}  // namespace

BraidWord parse_word(std::string_view text) {
  std::vector<Generator> letters;
  int declared = 0;
  std::size_t declared_column = 0;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    std::size_t column = start + 1;
    if (token.starts_with("n=")) {
      if (!first) throw ParseError("strand header 'n=<m>' must be the first token", column);
      declared = parse_positive(token.substr(2), column, token);
      declared_column = column;
    } else {
      char head = token.front();
      int index = parse_positive(token.substr(1), column, token);
      switch (head) {
        case 's': letters.push_back(Generator::sigma(index, 1)); break;
        case 'S': letters.push_back(Generator::sigma(index, -1)); break;
        case 't': letters.push_back(Generator::tau(index)); break;
        default: throw ParseError("unknown token '" + std::string(token) + "'", column);
      }
    }
    first = false;
  }
  int required = 1;
  for (const auto& g : letters) required = std::max(required, g.index() + 1);
  if (declared != 0 && declared < required) {
    throw ParseError("declared strand count " + std::to_string(declared) +
                         " is smaller than the " + std::to_string(required) + " strands required",
                     declared_column);
  }
  return BraidWord(declared != 0 ? declared : required, std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (const auto& g : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_token(g);
  }
  return out;
}

std::string format_word_with_strands(const BraidWord& w) {
  std::string out = "n=" + std::to_string(w.strands());
  if (!w.empty()) out += ' ' + format_word(w);
  return out;
}

BraidWord invert(const BraidWord& w) {
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  std::vector<Generator> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return BraidWord(std::max(a.strands(), b.strands()), std::move(out));
}

BraidWord concat(std::span<const BraidWord> parts) {
  int strands = 1;
  std::vector<Generator> out;
  for (const auto& p : parts) {
    strands = std::max(strands, p.strands());
    out.insert(out.end(), p.letters().begin(), p.letters().end());
  }
  return BraidWord(strands, std::move(out));
}

BraidWord with_strands(const BraidWord& w, int strands) { return BraidWord(strands, w.letters()); }

BraidWord power(const BraidWord& w, int k) {
  const BraidWord base = k < 0 ? invert(w) : w;
  std::vector<Generator> out;
  for (int r = 0; r < (k < 0 ? -k : k); ++r) {
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord subword(const BraidWord& w, std::size_t first, std::size_t count) {
  if (first + count > w.size()) throw std::out_of_range("subword out of range");
  return BraidWord(w.strands(), std::vector<Generator>(w.letters().begin() + first,
                                                       w.letters().begin() + first + count));
}

bool cancels(Generator a, Generator b) noexcept { return a.inverse() == b; }

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Generator> stack;
  stack.reserve(w.size());
  for (const auto& g : w.letters()) {
    if (!stack.empty() && cancels(stack.back(), g)) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

bool is_freely_reduced(const BraidWord& w) noexcept {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (cancels(w[k - 1], w[k])) return false;
  }
  return true;
}

std::string word_key(const BraidWord& w) {
  std::string key;
  key.reserve(w.size() + 1);
  key.push_back(static_cast<char>(w.strands()));
  for (const auto& g : w.letters()) {
    // index in the low 6 bits, kind/sign in the top two
    unsigned code = static_cast<unsigned>(g.index()) & 0x3Fu;
    if (g.is_virtual()) code |= 0x80u;
    else if (g.sign() < 0) code |= 0x40u;
    key.push_back(static_cast<char>(code));
  }
  return key;
}

}  // namespace fusedlink
