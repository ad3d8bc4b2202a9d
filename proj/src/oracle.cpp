#include "ggt/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ggt/smallcancel.hpp"

namespace ggt {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "TRIVIAL";
    case Verdict::Nontrivial: return "NONTRIVIAL";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

const char* to_string(Certificate c) {
  return c == Certificate::Certified ? "CERTIFIED" : "BEST_EFFORT";
}

const char* to_string(Backend b) {
  switch (b) {
    case Backend::Free: return "FREE";
    case Backend::FiniteTable: return "FINITE_TABLE";
    case Backend::FreeProduct: return "FREE_PRODUCT";
    case Backend::Dehn: return "DEHN";
    case Backend::BallClosure: return "BALL_CLOSURE";
    case Backend::DirectAbelian: return "DIRECT_ABELIAN";
  }
  return "?";
}

namespace {

void require_alphabet(const GroupOracle& o, const Word& w) {
  if (!o.alphabet().contains_word(w)) {
    throw std::invalid_argument("word uses letters outside the oracle alphabet");
  }
}

class FreeOracle : public GroupOracle {
 public:
  explicit FreeOracle(OrderedAlphabet a) : alphabet_(std::move(a)) {}

  const OrderedAlphabet& alphabet() const override { return alphabet_; }
  Certificate certificate() const override { return Certificate::Certified; }
  Backend backend() const override { return Backend::Free; }

  Verdict is_trivial(const Word& w) const override {
    require_alphabet(*this, w);
    return free_reduce(w).empty() ? Verdict::Trivial : Verdict::Nontrivial;
  }

  std::optional<std::string> canonical_key(const Word& w) const override {
    return word_to_string(alphabet_, free_reduce(w));
  }

  std::optional<int> geodesic_length(const Word& w) const override {
    return static_cast<int>(free_reduce(w).size());
  }

 private:
  OrderedAlphabet alphabet_;
};

class AbelianOracle : public GroupOracle {
 public:
  explicit AbelianOracle(OrderedAlphabet a) : alphabet_(std::move(a)) {}

  const OrderedAlphabet& alphabet() const override { return alphabet_; }
  Certificate certificate() const override { return Certificate::Certified; }
  Backend backend() const override { return Backend::DirectAbelian; }

  std::vector<long long> exponents(const Word& w) const {
    std::vector<long long> e(static_cast<std::size_t>(alphabet_.size()), 0);
    for (Letter l : w) e[static_cast<std::size_t>(letter_gen(l))] += letter_positive(l) ? 1 : -1;
    return e;
  }

  Verdict is_trivial(const Word& w) const override {
    require_alphabet(*this, w);
    auto e = exponents(w);
    bool zero = std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
    return zero ? Verdict::Trivial : Verdict::Nontrivial;
  }

  std::optional<std::string> canonical_key(const Word& w) const override {
    auto e = exponents(w);
    std::ostringstream out;
    for (long long x : e) out << x << ',';
    return out.str();
  }

  std::optional<int> geodesic_length(const Word& w) const override {
    auto e = exponents(w);
    long long s = 0;
    for (long long x : e) s += x < 0 ? -x : x;
    return static_cast<int>(s);
  }

 private:
  OrderedAlphabet alphabet_;
};

class DehnOracle : public GroupOracle {
 public:
  DehnOracle(OrderedAlphabet a, std::vector<Word> symmetrized, bool certified)
      : alphabet_(std::move(a)), symmetrized_(std::move(symmetrized)), certified_(certified) {}

  const OrderedAlphabet& alphabet() const override { return alphabet_; }
  Certificate certificate() const override {
    return certified_ ? Certificate::Certified : Certificate::BestEffort;
  }
  Backend backend() const override { return Backend::Dehn; }

  Verdict is_trivial(const Word& w) const override {
    require_alphabet(*this, w);
    Word t = dehn_reduce(symmetrized_, w);
    if (t.empty()) return Verdict::Trivial;
    return certified_ ? Verdict::Nontrivial : Verdict::Unknown;
  }

 private:
  OrderedAlphabet alphabet_;
  std::vector<Word> symmetrized_;
  bool certified_;
};

}  // namespace

OraclePtr make_free_oracle(const OrderedAlphabet& a) { return std::make_shared<FreeOracle>(a); }

OraclePtr make_abelian_oracle(const Presentation& p) {
  auto oracle = std::make_shared<AbelianOracle>(p.alphabet);
  for (const Word& r : p.relators) {
    if (oracle->is_trivial(r) != Verdict::Trivial) {
      throw std::invalid_argument(
          "abelian backend: relator has non-zero exponent vector (torsion unsupported): " +
          word_to_string(p.alphabet, r));
    }
  }
  return oracle;
}

Word dehn_reduce(const std::vector<Word>& symmetrized, const Word& w) {
  Word cur = cyclic_reduce(w);
  bool changed = true;
  while (changed && !cur.empty()) {
    changed = false;
    // Longest match of a >half-relator prefix anywhere in cur.
    int best_len = 0;
    std::size_t best_pos = 0;
    const Word* best_rel = nullptr;
    for (const Word& r : symmetrized) {
      int half = static_cast<int>(r.size()) / 2;
      for (std::size_t pos = 0; pos < cur.size(); ++pos) {
        int max_here = static_cast<int>(std::min(r.size(), cur.size() - pos));
        int k = 0;
        while (k < max_here && cur[pos + static_cast<std::size_t>(k)] == r[static_cast<std::size_t>(k)]) ++k;
        if (k > half && k > best_len) {
          best_len = k;
          best_pos = pos;
          best_rel = &r;
        }
      }
    }
    if (best_rel != nullptr) {
      // r = p s with p the matched prefix; p =_G s^-1, and |s| < |p|.
      const Word& r = *best_rel;
      Word suffix(r.begin() + best_len, r.end());
      Word replaced(cur.begin(), cur.begin() + static_cast<long>(best_pos));
      Word inv_suffix = inverse(suffix);
      replaced.insert(replaced.end(), inv_suffix.begin(), inv_suffix.end());
      replaced.insert(replaced.end(), cur.begin() + static_cast<long>(best_pos) + best_len,
                      cur.end());
      cur = cyclic_reduce(replaced);
      changed = true;
    }
  }
  return cur;
}

OraclePtr make_dehn_oracle(const Presentation& p) {
  std::vector<Word> sym = p.symmetrized();
  bool certified = false;
  if (!sym.empty()) {
    certified = check_classical(p.alphabet, sym, 1.0 / 6.0).pass;
  }
  return std::make_shared<DehnOracle>(p.alphabet, std::move(sym), certified);
}

FreeProductOracle::FreeProductOracle(std::vector<OraclePtr> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("free product needs at least one factor");
  int total = 0;
  for (const auto& f : factors_) total += f->alphabet().size();
  if (total > kMaxGenerators) {
    throw std::invalid_argument("free product alphabet exceeds 26 generators");
  }
  std::vector<char> display;
  certificate_ = Certificate::Certified;
  for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
    const auto& f = factors_[fi];
    if (f->certificate() == Certificate::BestEffort) certificate_ = Certificate::BestEffort;
    for (int g = 0; g < f->alphabet().size(); ++g) {
      display.push_back(static_cast<char>('a' + display.size()));
      gen_factor_.push_back(static_cast<int>(fi));
      gen_local_.push_back(g);
    }
  }
  alphabet_ = OrderedAlphabet(display);
}

int FreeProductOracle::factor_of_letter(Letter l) const {
  return gen_factor_[static_cast<std::size_t>(letter_gen(l))];
}

Word FreeProductOracle::to_factor_word(int factor, const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    int g = letter_gen(l);
    if (gen_factor_[static_cast<std::size_t>(g)] != factor) {
      throw std::invalid_argument("syllable crosses factor boundary");
    }
    out.push_back(make_letter(gen_local_[static_cast<std::size_t>(g)], letter_positive(l)));
  }
  return out;
}

std::optional<NormalFormSyllables> FreeProductOracle::normal_form(const Word& w) const {
  require_alphabet(*this, w);
  std::vector<NormalFormSyllables::Syllable> stack;
  for (Letter l : free_reduce(w)) {
    int f = factor_of_letter(l);
    Letter local = make_letter(gen_local_[static_cast<std::size_t>(letter_gen(l))],
                               letter_positive(l));
    if (!stack.empty() && stack.back().factor == f) {
      stack.back().element = mul(stack.back().element, Word{local});
    } else {
      stack.push_back({f, Word{local}});
    }
    // Adjacent syllables always lie in distinct factors, so popping a
    // trivial top never creates a same-factor adjacency.
    Verdict v = factors_[static_cast<std::size_t>(f)]->is_trivial(stack.back().element);
    if (v == Verdict::Unknown) return std::nullopt;
    if (v == Verdict::Trivial) stack.pop_back();
  }
  NormalFormSyllables nf;
  nf.syllables = std::move(stack);
  return nf;
}

Verdict FreeProductOracle::is_trivial(const Word& w) const {
  auto nf = normal_form(w);
  if (!nf) return Verdict::Unknown;
  return nf->trivial() ? Verdict::Trivial : Verdict::Nontrivial;
}

std::optional<std::string> FreeProductOracle::canonical_key(const Word& w) const {
  auto nf = normal_form(w);
  if (!nf) return std::nullopt;
  std::ostringstream out;
  for (const auto& syl : nf->syllables) {
    auto key = factors_[static_cast<std::size_t>(syl.factor)]->canonical_key(syl.element);
    if (!key) return std::nullopt;
    out << syl.factor << ':' << *key << '|';
  }
  return out.str();
}

std::optional<int> FreeProductOracle::geodesic_length(const Word& w) const {
  auto nf = normal_form(w);
  if (!nf) return std::nullopt;
  int total = 0;
  for (const auto& syl : nf->syllables) {
    auto len = factors_[static_cast<std::size_t>(syl.factor)]->geodesic_length(syl.element);
    if (!len) return std::nullopt;
    total += *len;
  }
  return total;
}

std::shared_ptr<const FreeProductOracle> make_free_product_oracle(std::vector<OraclePtr> factors) {
  return std::make_shared<FreeProductOracle>(std::move(factors));
}

}  // namespace ggt
