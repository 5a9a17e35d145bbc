#include "dbmis/words.hpp"

#include <algorithm>

namespace dbmis {

Budgets& budgets() {
  static Budgets b;
  return b;
}

Word make_word(const std::vector<int>& digits) {
  if (digits.size() > kMaxDiameter) fail(Errc::usage, "word longer than supported diameter");
  Word w;
  for (int v : digits) {
    if (v < 0 || v > kMaxAlphabet) fail(Errc::digit_range, "digit out of range");
    w.digit[w.len++] = static_cast<std::uint8_t>(v);
  }
  return w;
}

Word triple(int a, int b, int c) { return Word{a, b, c}; }

Word loop_word(int digit, int len) {
  Word w;
  w.len = static_cast<std::uint8_t>(len);
  for (int i = 0; i < len; ++i) w.digit[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(digit);
  return w;
}

bool is_loop(const Word& w) {
  for (int i = 1; i < w.len; ++i)
    if (w[i] != w[0]) return false;
  return w.len > 0;
}

bool contains_digit(const Word& w, int x) {
  for (int i = 0; i < w.len; ++i)
    if (w[i] == x) return true;
  return false;
}

int max_digit(const Word& w) {
  int m = 0;
  for (int i = 0; i < w.len; ++i) m = std::max(m, static_cast<int>(w[i]));
  return m;
}

Word theta(const Word& w) {
  Word r;
  r.len = w.len;
  for (int i = 0; i + 1 < w.len; ++i) r[i] = w[i + 1];
  if (w.len > 0) r[w.len - 1] = w[0];
  return r;
}

Word shift_append(const Word& w, int z) {
  Word r;
  r.len = w.len;
  for (int i = 0; i + 1 < w.len; ++i) r[i] = w[i + 1];
  if (w.len > 0) r[w.len - 1] = static_cast<std::uint8_t>(z);
  return r;
}

Word repl(const Word& w, int x, int y) {
  Word r = w;
  for (int i = 0; i < r.len; ++i)
    if (r[i] == x) r[i] = static_cast<std::uint8_t>(y);
  return r;
}

Word reversed(const Word& w) {
  Word r;
  r.len = w.len;
  for (int i = 0; i < w.len; ++i) r[i] = w[w.len - 1 - i];
  return r;
}

bool adjacent(const Word& w, const Word& v) {
  if (w.len != v.len) fail(Errc::precondition, "adjacency needs equal word lengths");
  for (int i = 1; i < w.len; ++i)
    if (w[i] != v[i - 1]) return false;
  return true;
}

std::uint64_t pack_word(const Word& w, int d) {
  std::uint64_t key = 0;
  for (int i = 0; i < w.len; ++i) key = key * static_cast<std::uint64_t>(d) + w[i];
  return key;
}

Word unpack_word(std::uint64_t key, int d, int len) {
  Word w;
  w.len = static_cast<std::uint8_t>(len);
  for (int i = len - 1; i >= 0; --i) {
    w[i] = static_cast<std::uint8_t>(key % static_cast<std::uint64_t>(d));
    key /= static_cast<std::uint64_t>(d);
  }
  return w;
}

std::string format_word(const Word& w, int d) {
  std::string s;
  for (int i = 0; i < w.len; ++i) {
    if (d > 10 && i > 0) s += ',';
    s += std::to_string(static_cast<int>(w[i]));
  }
  return s;
}

}  // namespace dbmis
