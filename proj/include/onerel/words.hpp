#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace onerel {

/// A signed generator: 1-based symbol index plus a sign.
struct Letter {
  std::uint16_t gen = 1;
  std::int8_t sign = +1;

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in F(S). The reduction invariant is maintained by
/// every constructor and operation; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(int alphabet_size) : alphabet_(alphabet_size) {}
  Word(std::vector<Letter> letters, int alphabet_size);

  static Word generator(int gen, int alphabet_size, int sign = +1);

  int alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(long long e) const;
  /// Conjugation t * w * t^-1.
  Word conjugated_by(const Word& t) const;
  Word rotated(std::size_t offset) const;  // cyclic rotation (drops reduction only if input not cyclically reduced)

  bool cyclically_reduced() const;

  friend bool operator==(const Word&, const Word&);
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
  int alphabet_ = 0;
};

/// Parses the typewriter convention: lowercase = generator, uppercase =
/// inverse. Alphabets larger than 26 use tokens "g<k>" / "G<k>" instead.
Word parse_word(std::string_view text, int alphabet_size);

/// Inverse of parse_word; the empty word renders as "1".
std::string render(const Word& w);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // conjugator * core * conjugator^-1 == input
};
CyclicReduction cyclically_reduce(const Word& w);

struct RootDecomposition {
  Word root;        // cyclically reduced, not a proper power
  int exponent;     // M >= 1
  Word conjugator;  // conjugator * root^M * conjugator^-1 == input
};
RootDecomposition primitive_root(const Word& w);

/// Exponent-sum vector, one entry per generator.
std::vector<long long> abelianize(const Word& w);
bool in_commutator_subgroup(const Word& w);

/// Evaluates an expression over F(S). Grammar: juxtaposition or '*' for
/// products, '^' with an integer for powers, g^h for the conjugate h*g*h^-1,
/// postfix ' for inverses, [g,h] for commutators, parentheses. Identifiers
/// resolve through `bindings` first and fall back to literal words.
Word evaluate(std::string_view expr, const std::map<std::string, Word>& bindings,
              int alphabet_size);

}  // namespace onerel
