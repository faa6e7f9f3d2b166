#include "cuntzcf/word.hpp"

#include <algorithm>
#include <charconv>

#include "cuntzcf/errors.hpp"

namespace cuntzcf {

std::size_t smallest_period(std::span<const Letter> w) {
  if (w.empty()) return 0;
  std::vector<std::size_t> fail(w.size(), 0);
  for (std::size_t i = 1, k = 0; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return w.size() - fail.back();
}

bool is_primitive(std::span<const Letter> w) {
  if (w.empty()) throw EmptyWord("primitivity of the empty word is undefined");
  const std::size_t p = smallest_period(w);
  return p == w.size() || w.size() % p != 0;
}

Word primitive_root(std::span<const Letter> w) {
  const std::size_t p = smallest_period(w);
  if (p == 0 || w.size() % p != 0) return Word(w.begin(), w.end());
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
}

std::size_t least_rotation_index(std::span<const Letter> w) {
  const std::size_t n = w.size();
  // Two-candidate minimum-rotation scan, O(n).
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter x = w[(i + k) % n];
    const Letter y = w[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

Word least_rotation(std::span<const Letter> w) { return rotate_left(w, least_rotation_index(w)); }

Word rotate_left(std::span<const Letter> w, std::size_t k) {
  Word out(w.begin(), w.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return out;
}

bool rotation_equal(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) return false;
  return least_rotation(a) == least_rotation(b);
}

std::string format_word(std::span<const Letter> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const std::size_t comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    Letter value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw ParseError("bad word entry '" + std::string(item) + "'");
    }
    if (value < 1) throw ParseError("word entries must be >= 1");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace cuntzcf
