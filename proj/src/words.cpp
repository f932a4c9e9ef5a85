#include "onerel/words.hpp"

#include <algorithm>
#include <cctype>

#include "onerel/error.hpp"

namespace onerel {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const Letter& l : in) push_reduced(out, l);
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters, int alphabet_size) : alphabet_(alphabet_size) {
  for (const Letter& l : letters) {
    if (l.gen < 1 || static_cast<int>(l.gen) > alphabet_size)
      fail(Errc::InvalidCharacter, "generator index " + std::to_string(l.gen) +
                                       " outside alphabet of size " + std::to_string(alphabet_size));
    if (l.sign != 1 && l.sign != -1) fail(Errc::InvalidCharacter, "letter sign must be +1 or -1");
  }
  letters_ = free_reduce(letters);
}

Word Word::generator(int gen, int alphabet_size, int sign) {
  return Word({Letter{static_cast<std::uint16_t>(gen), static_cast<std::int8_t>(sign)}},
              alphabet_size);
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  Word w;
  w.letters_ = std::move(out);  // inverse of reduced is reduced
  w.alphabet_ = alphabet_;
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  for (const Letter& l : rhs.letters_) push_reduced(out, l);
  Word w;
  w.letters_ = std::move(out);
  w.alphabet_ = std::max(alphabet_, rhs.alphabet_);
  return w;
}

Word Word::pow(long long e) const {
  Word base = e >= 0 ? *this : inverse();
  long long k = e >= 0 ? e : -e;
  Word acc(alphabet_);
  for (long long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

Word Word::conjugated_by(const Word& t) const { return t * *this * t.inverse(); }

Word Word::rotated(std::size_t offset) const {
  if (letters_.empty()) return *this;
  offset %= letters_.size();
  std::vector<Letter> out(letters_.begin() + offset, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + offset);
  return Word(std::move(out), alphabet_);
}

bool Word::cyclically_reduced() const {
  if (letters_.size() < 2) return true;
  return letters_.front() != letters_.back().inverse();
}

bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return a.letters_ <=> b.letters_;
}

Word parse_word(std::string_view text, int alphabet_size) {
  if (alphabet_size < 1) fail(Errc::InvalidCharacter, "alphabet size must be positive");
  std::vector<Letter> letters;
  if (text == "1") return Word(alphabet_size);
  if (alphabet_size <= 26) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      int sign = std::islower(static_cast<unsigned char>(c)) ? +1 : -1;
      if (!std::isalpha(static_cast<unsigned char>(c)))
        fail(Errc::InvalidCharacter, std::string("non-letter symbol '") + c + "'");
      int gen = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      if (gen > alphabet_size)
        fail(Errc::InvalidCharacter,
             std::string("letter '") + c + "' outside alphabet of size " + std::to_string(alphabet_size));
      letters.push_back({static_cast<std::uint16_t>(gen), static_cast<std::int8_t>(sign)});
    }
  } else {
    // numeric rendering: g<k> / G<k>
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c != 'g' && c != 'G')
        fail(Errc::InvalidCharacter, std::string("expected g<k>/G<k> token, got '") + c + "'");
      int sign = (c == 'g') ? +1 : -1;
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) fail(Errc::InvalidCharacter, "missing generator index after g/G");
      int gen = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
      if (gen < 1 || gen > alphabet_size)
        fail(Errc::InvalidCharacter, "generator index " + std::to_string(gen) + " out of range");
      letters.push_back({static_cast<std::uint16_t>(gen), static_cast<std::int8_t>(sign)});
      i = j;
    }
  }
  return Word(std::move(letters), alphabet_size);
}

std::string render(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (w.alphabet() <= 26) {
      char base = l.sign > 0 ? 'a' : 'A';
      out.push_back(static_cast<char>(base + l.gen - 1));
    } else {
      out.push_back(l.sign > 0 ? 'g' : 'G');
      out += std::to_string(l.gen);
    }
  }
  return out;
}

CyclicReduction cyclically_reduce(const Word& w) {
  std::vector<Letter> core = w.letters();
  std::vector<Letter> conj;
  while (core.size() >= 2 && core.front() == core.back().inverse()) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {Word(std::move(core), w.alphabet()), Word(std::move(conj), w.alphabet())};
}

RootDecomposition primitive_root(const Word& w) {
  if (w.empty()) fail(Errc::EmptyWord, "primitive_root of the identity");
  CyclicReduction cr = cyclically_reduce(w);
  const auto& s = cr.core.letters();
  const std::size_t L = s.size();
  // minimal period via the KMP failure function
  std::vector<std::size_t> f(L + 1, 0);
  for (std::size_t i = 1; i < L; ++i) {
    std::size_t k = f[i];
    while (k > 0 && s[i] != s[k]) k = f[k];
    f[i + 1] = (s[i] == s[k]) ? k + 1 : 0;
  }
  std::size_t p = L - f[L];
  if (L % p != 0) p = L;
  std::vector<Letter> root(s.begin(), s.begin() + p);
  return {Word(std::move(root), w.alphabet()), static_cast<int>(L / p), cr.conjugator};
}

std::vector<long long> abelianize(const Word& w) {
  std::vector<long long> v(w.alphabet(), 0);
  for (const Letter& l : w.letters()) v[l.gen - 1] += l.sign;
  return v;
}

bool in_commutator_subgroup(const Word& w) {
  auto v = abelianize(w);
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// --- expression evaluator -------------------------------------------------

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::map<std::string, Word>& bindings, int alphabet)
      : text_(text), bindings_(bindings), alphabet_(alphabet) {}

  Word parse() {
    Word w = product();
    skip_ws();
    if (pos_ != text_.size())
      fail(Errc::ParseError, "trailing input at offset " + std::to_string(pos_));
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_item(char c) const {
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c));
  }

  Word product() {
    Word acc = postfix();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * postfix();
      } else if (starts_item(c)) {
        acc = acc * postfix();
      } else {
        break;
      }
    }
    return acc;
  }

  Word postfix() {
    Word w = primary();
    for (;;) {
      char c = peek();
      if (c == '\'') {
        ++pos_;
        w = w.inverse();
      } else if (c == '^') {
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() &&
            (text_[pos_] == '-' || text_[pos_] == '+' ||
             std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
          w = w.pow(integer());
        } else {
          Word h = primary();
          w = w.conjugated_by(h);
        }
      } else {
        break;
      }
    }
    return w;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
      fail(Errc::ParseError, "expected integer exponent at offset " + std::to_string(start));
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  Word primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = product();
      if (peek() != ')') fail(Errc::ParseError, "expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word g = product();
      if (peek() != ',') fail(Errc::ParseError, "expected ',' in commutator");
      ++pos_;
      Word h = product();
      if (peek() != ']') fail(Errc::ParseError, "expected ']'");
      ++pos_;
      return g * h * g.inverse() * h.inverse();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
        ++pos_;
      std::string tok(text_.substr(start, pos_ - start));
      if (auto it = bindings_.find(tok); it != bindings_.end()) return it->second;
      if (std::all_of(tok.begin(), tok.end(),
                      [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)); }))
        return parse_word(tok, alphabet_);
      fail(Errc::UnboundName, "'" + tok + "' is not bound and is not a literal word");
    }
    fail(Errc::ParseError, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const std::map<std::string, Word>& bindings_;
  int alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word evaluate(std::string_view expr, const std::map<std::string, Word>& bindings,
              int alphabet_size) {
  return ExprParser(expr, bindings, alphabet_size).parse();
}

}  // namespace onerel
