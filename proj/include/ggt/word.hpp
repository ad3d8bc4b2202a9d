#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ggt {

// A signed letter: +(idx+1) is generator idx, -(idx+1) is its inverse.
using Letter = std::int8_t;

constexpr int kMaxGenerators = 26;

inline int letter_gen(Letter l) { return (l > 0 ? l : -l) - 1; }
inline bool letter_positive(Letter l) { return l > 0; }
inline Letter letter_inverse(Letter l) { return static_cast<Letter>(-l); }
inline Letter make_letter(int gen, bool positive) {
  return static_cast<Letter>(positive ? gen + 1 : -(gen + 1));
}

// Word over a symmetric generator alphabet. Not automatically reduced.
using Word = std::vector<Letter>;

// Generators ordered x1 < x2 < ... with the signed-letter order
// x1^-1 < x2^-1 < ... < xn^-1 < x1 < ... < xn.
class OrderedAlphabet {
 public:
  OrderedAlphabet() = default;
  explicit OrderedAlphabet(int n_generators);
  explicit OrderedAlphabet(std::vector<char> display);

  int size() const { return static_cast<int>(display_.size()); }
  char display_letter(int gen) const { return display_[gen]; }
  const std::vector<char>& display() const { return display_; }

  // Rank of a signed letter in the total order; 0 .. 2n-1.
  int letter_rank(Letter l) const {
    return letter_positive(l) ? size() + letter_gen(l) : letter_gen(l);
  }
  Letter letter_at_rank(int r) const {
    return r < size() ? make_letter(r, false) : make_letter(r - size(), true);
  }

  bool contains(Letter l) const { return letter_gen(l) < size(); }
  bool contains_word(const Word& w) const;

  bool operator==(const OrderedAlphabet& o) const { return display_ == o.display_; }

 private:
  std::vector<char> display_;
};

// ASCII notation: lowercase = generator, uppercase = inverse, "1" = empty.
Word parse_word(const OrderedAlphabet& a, const std::string& s);
std::string word_to_string(const OrderedAlphabet& a, const Word& w);

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
// u * v freely reduced.
Word mul(const Word& u, const Word& v);
Word power(const Word& w, long long n);
// x w x^-1, freely reduced.
Word conjugate(const Word& x, const Word& w);
Word cyclic_shift(const Word& w, int k);

bool shortlex_less(const OrderedAlphabet& a, const Word& u, const Word& v);

// Closure of R under cyclic shifts and inversion; sorted, deduplicated.
// Rejects words that are empty or not cyclically reduced.
std::vector<Word> symmetrize(const OrderedAlphabet& a, const std::vector<Word>& relators);

// First `count` non-empty reduced words in shortlex order.
std::vector<Word> enumerate_reduced_words(const OrderedAlphabet& a, long long count);

// First `count` pairs (w_i, w_j), ranked by (i + j, i) over the
// enumerate_reduced_words ranks.
std::vector<std::pair<Word, Word>> enumerate_pairs(const OrderedAlphabet& a, long long count);

}  // namespace ggt
