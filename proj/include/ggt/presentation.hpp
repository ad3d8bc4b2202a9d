#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ggt/word.hpp"

namespace ggt {

// Generators plus relators. Relators are stored raw (cyclically reduced,
// non-empty); the symmetrized closure is computed on demand.
struct Presentation {
  OrderedAlphabet alphabet;
  std::vector<Word> relators;

  std::vector<Word> symmetrized() const { return symmetrize(alphabet, relators); }
  // max ||R|| over relators; 0 when there are none.
  int max_relator_length() const;
};

Presentation make_presentation(const std::string& generators,
                               const std::vector<std::string>& relator_words);

// Line-oriented format:
//   [generators] a b
//   [relator] abAB
//   # comment
Presentation parse_presentation(std::istream& in);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);
void save_presentation(const Presentation& p, const std::string& path);

}  // namespace ggt
