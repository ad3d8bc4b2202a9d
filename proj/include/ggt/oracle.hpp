#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ggt/presentation.hpp"
#include "ggt/word.hpp"

namespace ggt {

enum class Verdict { Trivial, Nontrivial, Unknown };
enum class Certificate { Certified, BestEffort };
enum class Backend { Free, FiniteTable, FreeProduct, Dehn, BallClosure, DirectAbelian };

const char* to_string(Verdict v);
const char* to_string(Certificate c);
const char* to_string(Backend b);

// Alternating (factor, element word) syllables of a free-product element.
struct NormalFormSyllables {
  struct Syllable {
    int factor;
    Word element;  // word over the factor's own alphabet
  };
  std::vector<Syllable> syllables;
  bool trivial() const { return syllables.empty(); }
};

// Word-problem oracle with an explicit soundness certificate.
// Certified oracles never return Unknown and never a wrong verdict;
// best-effort oracles may return Unknown but never a wrong definite verdict.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual const OrderedAlphabet& alphabet() const = 0;
  virtual Certificate certificate() const = 0;
  virtual Backend backend() const = 0;
  virtual Verdict is_trivial(const Word& w) const = 0;

  Verdict equal(const Word& u, const Word& v) const { return is_trivial(mul(u, inverse(v))); }

  // Canonical per-element key, when the backend can produce one.
  virtual std::optional<std::string> canonical_key(const Word& w) const {
    (void)w;
    return std::nullopt;
  }
  // Exact word-metric length of the element represented by w, when the
  // backend knows the full metric.
  virtual std::optional<int> geodesic_length(const Word& w) const {
    (void)w;
    return std::nullopt;
  }
};

using OraclePtr = std::shared_ptr<const GroupOracle>;

// Free group on the given alphabet.
OraclePtr make_free_oracle(const OrderedAlphabet& a);

// Free abelian group on the alphabet. Relators with a non-zero exponent
// vector are rejected; commutator-type relators are accepted and ignored.
OraclePtr make_abelian_oracle(const Presentation& p);

// Dehn's algorithm over the symmetrized relators. Certified when the
// symmetrized set satisfies C'(1/6); otherwise best-effort (Trivial verdicts
// carry a derivation, non-empty terminal words yield Unknown).
OraclePtr make_dehn_oracle(const Presentation& p);

// One Dehn reduction run; returns the terminal word.
Word dehn_reduce(const std::vector<Word>& symmetrized, const Word& w);

// Free product of certified (or best-effort) factor oracles. The product
// alphabet is the concatenation of the factor alphabets, relabeled to fresh
// display letters in order.
class FreeProductOracle : public GroupOracle {
 public:
  explicit FreeProductOracle(std::vector<OraclePtr> factors);

  const OrderedAlphabet& alphabet() const override { return alphabet_; }
  Certificate certificate() const override { return certificate_; }
  Backend backend() const override { return Backend::FreeProduct; }
  Verdict is_trivial(const Word& w) const override;
  std::optional<std::string> canonical_key(const Word& w) const override;
  std::optional<int> geodesic_length(const Word& w) const override;

  // Syllable normal form; nullopt when a factor cannot decide a syllable.
  std::optional<NormalFormSyllables> normal_form(const Word& w) const;

  int factor_of_letter(Letter l) const;
  // Translate a product-alphabet word lying inside one factor into that
  // factor's own alphabet.
  Word to_factor_word(int factor, const Word& w) const;

 private:
  std::vector<OraclePtr> factors_;
  OrderedAlphabet alphabet_;
  std::vector<int> gen_factor_;  // product generator -> factor index
  std::vector<int> gen_local_;   // product generator -> generator within factor
  Certificate certificate_;
};

std::shared_ptr<const FreeProductOracle> make_free_product_oracle(std::vector<OraclePtr> factors);

}  // namespace ggt
