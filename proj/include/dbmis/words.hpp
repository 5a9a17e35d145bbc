#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "dbmis/error.hpp"

namespace dbmis {

inline constexpr int kMaxDiameter = 16;
inline constexpr int kMaxAlphabet = 255;

// A fixed-length word over the alphabet {0,...,d-1}. The alphabet size d is
// carried by the surrounding graph or set, not by the word. Unused trailing
// slots are kept zero so the defaulted comparison is lexicographic on the
// digit sequence.
struct Word {
  std::array<std::uint8_t, kMaxDiameter> digit{};
  std::uint8_t len = 0;

  Word() = default;
  Word(std::initializer_list<int> ds) {
    if (ds.size() > kMaxDiameter) fail(Errc::usage, "word longer than supported diameter");
    for (int v : ds) digit[len++] = static_cast<std::uint8_t>(v);
  }

  int size() const { return len; }
  std::uint8_t operator[](int i) const { return digit[static_cast<std::size_t>(i)]; }
  std::uint8_t& operator[](int i) { return digit[static_cast<std::size_t>(i)]; }

  auto operator<=>(const Word&) const = default;
};

Word make_word(const std::vector<int>& digits);
Word triple(int a, int b, int c);
// The constant word xx...x of the given length.
Word loop_word(int digit, int len);

bool is_loop(const Word& w);
bool contains_digit(const Word& w, int x);
int max_digit(const Word& w);

// Cyclic left rotation: the shift map on graph nodes. Applying it len times
// is the identity; its fixed points are exactly the loop words.
Word theta(const Word& w);

// Drop the first digit and append z: the out-neighbour of w selected by z.
Word shift_append(const Word& w, int z);

// Replace every occurrence of digit x by y.
Word repl(const Word& w, int x, int y);

Word reversed(const Word& w);

// True iff there is a directed edge w -> v (suffix/prefix overlap). Both
// words must have the same length.
bool adjacent(const Word& w, const Word& v);

// Integer key: digits read as a base-d number. Lexicographic order on words
// of equal length coincides with numeric order of keys.
std::uint64_t pack_word(const Word& w, int d);
Word unpack_word(std::uint64_t key, int d, int len);

// "010" for d <= 10, comma-separated ("0,11,3") above.
std::string format_word(const Word& w, int d);

}  // namespace dbmis
