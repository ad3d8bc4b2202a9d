#include "ggt/presentation.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ggt {

int Presentation::max_relator_length() const {
  int m = 0;
  for (const Word& r : relators) m = std::max(m, static_cast<int>(r.size()));
  return m;
}

Presentation make_presentation(const std::string& generators,
                               const std::vector<std::string>& relator_words) {
  std::vector<char> display;
  for (char c : generators) {
    if (c == ' ') continue;
    display.push_back(c);
  }
  Presentation p;
  p.alphabet = OrderedAlphabet(display);
  for (const std::string& s : relator_words) {
    Word w = parse_word(p.alphabet, s);
    if (w.empty()) throw std::invalid_argument("empty relator");
    if (!is_cyclically_reduced(w)) {
      throw std::invalid_argument("relator not cyclically reduced: " + s);
    }
    p.relators.push_back(w);
  }
  return p;
}

Presentation parse_presentation(std::istream& in) {
  std::string generators;
  std::vector<std::string> relators;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "[generators]") {
      std::string g;
      while (ls >> g) generators += g;
    } else if (tag == "[relator]") {
      std::string w;
      if (!(ls >> w)) throw std::invalid_argument("[relator] line without a word");
      relators.push_back(w);
    } else {
      throw std::invalid_argument("unknown presentation line tag: " + tag);
    }
  }
  if (generators.empty()) throw std::invalid_argument("presentation has no [generators] line");
  return make_presentation(generators, relators);
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file: " + path);
  return parse_presentation(in);
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "[generators]";
  for (int i = 0; i < p.alphabet.size(); ++i) out << ' ' << p.alphabet.display_letter(i);
  out << '\n';
  for (const Word& r : p.relators) {
    out << "[relator] " << word_to_string(p.alphabet, r) << '\n';
  }
  return out.str();
}

void save_presentation(const Presentation& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write presentation file: " + path);
  out << format_presentation(p);
}

}  // namespace ggt
