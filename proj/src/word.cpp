#include "ggt/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ggt {

OrderedAlphabet::OrderedAlphabet(int n_generators) {
  if (n_generators < 1 || n_generators > kMaxGenerators) {
    throw std::invalid_argument("alphabet size must be between 1 and 26");
  }
  display_.resize(n_generators);
  for (int i = 0; i < n_generators; ++i) display_[i] = static_cast<char>('a' + i);
}

OrderedAlphabet::OrderedAlphabet(std::vector<char> display) : display_(std::move(display)) {
  if (display_.empty() || display_.size() > kMaxGenerators) {
    throw std::invalid_argument("alphabet size must be between 1 and 26");
  }
  std::set<char> seen;
  for (char c : display_) {
    if (c < 'a' || c > 'z') throw std::invalid_argument("generator letters must be lowercase a-z");
    if (!seen.insert(c).second) throw std::invalid_argument("duplicate generator letter");
  }
}

bool OrderedAlphabet::contains_word(const Word& w) const {
  for (Letter l : w) {
    if (!contains(l)) return false;
  }
  return true;
}

Word parse_word(const OrderedAlphabet& a, const std::string& s) {
  if (s == "1") return {};
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    if (c == ' ' || c == '\t') continue;
    bool positive = (c >= 'a' && c <= 'z');
    char low = positive ? c : static_cast<char>(c - 'A' + 'a');
    if (low < 'a' || low > 'z') throw std::invalid_argument("bad character in word: " + s);
    int gen = -1;
    for (int i = 0; i < a.size(); ++i) {
      if (a.display_letter(i) == low) {
        gen = i;
        break;
      }
    }
    if (gen < 0) throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet");
    w.push_back(make_letter(gen, positive));
  }
  return w;
}

std::string word_to_string(const OrderedAlphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) {
    char c = a.display_letter(letter_gen(l));
    s.push_back(letter_positive(l) ? c : static_cast<char>(c - 'a' + 'A'));
  }
  return s;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == letter_inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == letter_inverse(r[j - 1])) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == letter_inverse(w[i - 1])) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  if (w.size() >= 2 && w.front() == letter_inverse(w.back())) return false;
  return true;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inverse(*it));
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word mul(const Word& u, const Word& v) { return free_reduce(concat(u, v)); }

Word power(const Word& w, long long n) {
  Word base = n >= 0 ? w : inverse(w);
  long long k = n >= 0 ? n : -n;
  Word out;
  for (long long i = 0; i < k; ++i) out = concat(out, base);
  return free_reduce(out);
}

Word conjugate(const Word& x, const Word& w) { return mul(mul(x, w), inverse(x)); }

Word cyclic_shift(const Word& w, int k) {
  if (w.empty()) return w;
  int n = static_cast<int>(w.size());
  int s = ((k % n) + n) % n;
  Word out;
  out.reserve(w.size());
  for (int i = 0; i < n; ++i) out.push_back(w[(i + s) % n]);
  return out;
}

bool shortlex_less(const OrderedAlphabet& a, const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    int ru = a.letter_rank(u[i]), rv = a.letter_rank(v[i]);
    if (ru != rv) return ru < rv;
  }
  return false;
}

std::vector<Word> symmetrize(const OrderedAlphabet& a, const std::vector<Word>& relators) {
  std::vector<Word> out;
  for (const Word& r : relators) {
    if (r.empty()) throw std::invalid_argument("empty relator rejected by symmetrize");
    if (!is_cyclically_reduced(r)) {
      throw std::invalid_argument("symmetrize requires cyclically reduced relators");
    }
    for (int s = 0; s < static_cast<int>(r.size()); ++s) {
      out.push_back(cyclic_shift(r, s));
      out.push_back(cyclic_shift(inverse(r), s));
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Word& u, const Word& v) { return shortlex_less(a, u, v); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> enumerate_reduced_words(const OrderedAlphabet& a, long long count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  const int m = 2 * a.size();
  // Odometer over letter ranks, one length at a time, skipping non-reduced words.
  for (int len = 1; static_cast<long long>(out.size()) < count; ++len) {
    std::vector<int> ranks(len, 0);
    bool valid_exists = false;
    // Advance positions like a counter; emit only reduced words.
    while (true) {
      Word w(len);
      bool reduced = true;
      for (int i = 0; i < len; ++i) {
        w[i] = a.letter_at_rank(ranks[i]);
        if (i > 0 && w[i] == letter_inverse(w[i - 1])) {
          reduced = false;
          break;
        }
      }
      if (reduced) {
        valid_exists = true;
        out.push_back(w);
        if (static_cast<long long>(out.size()) == count) return out;
      }
      int pos = len - 1;
      while (pos >= 0 && ranks[pos] == m - 1) {
        ranks[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++ranks[pos];
    }
    if (!valid_exists) break;  // cannot happen for a nonempty alphabet
  }
  return out;
}

std::vector<std::pair<Word, Word>> enumerate_pairs(const OrderedAlphabet& a, long long count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<std::pair<Word, Word>> out;
  out.reserve(static_cast<std::size_t>(count));
  // Ranks are 1-based; pair (i, j) has key (i + j, i).
  long long max_rank = 1;
  std::vector<Word> words = enumerate_reduced_words(a, 2);
  auto word_at = [&](long long rank) -> const Word& {
    if (rank > static_cast<long long>(words.size())) {
      words = enumerate_reduced_words(a, rank);
    }
    return words[static_cast<std::size_t>(rank - 1)];
  };
  for (long long s = 2;; ++s) {
    for (long long i = 1; i < s; ++i) {
      long long j = s - i;
      max_rank = std::max(max_rank, std::max(i, j));
      out.emplace_back(word_at(i), word_at(j));
      if (static_cast<long long>(out.size()) == count) return out;
    }
  }
}

}  // namespace ggt
