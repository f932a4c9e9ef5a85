#include "onerel/cancellation.hpp"

#include <algorithm>
#include <set>

#include "onerel/error.hpp"

namespace onerel {

namespace {

int letter_code(const Letter& l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }

/// Z-array: z[i] = LCP(s, s[i..]). Sentinel-free, works on int codes.
std::vector<std::size_t> z_array(const std::vector<int>& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

std::vector<int> codes_of(const Word& w) {
  std::vector<int> v;
  v.reserve(w.size());
  for (const Letter& l : w.letters()) v.push_back(letter_code(l));
  return v;
}

void require_piece_input(const Word& r) {
  if (r.empty()) fail(Errc::EmptyWord, "piece analysis needs a non-empty word");
  if (!r.cyclically_reduced()) fail(Errc::NotCyclicallyReduced, render(r));
  auto rd = primitive_root(r);
  if (rd.exponent != 1)
    fail(Errc::IsProperPower, render(r) + " = (" + render(rd.root) + ")^" +
                                  std::to_string(rd.exponent) +
                                  "; analyse the root and use the proper-power bound");
}

}  // namespace

PieceReport max_piece_length(const Word& r) {
  require_piece_input(r);
  const std::size_t n = r.size();
  PieceReport rep;
  rep.word = r;

  auto scan = [&](const Word& candidate_base, bool inverse_flag) {
    // LCP of r with every rotation of candidate_base via one Z pass over
    // r # base base.
    std::vector<int> s = codes_of(r);
    s.push_back(-1);
    auto base = codes_of(candidate_base);
    s.insert(s.end(), base.begin(), base.end());
    s.insert(s.end(), base.begin(), base.end());
    auto z = z_array(s);
    for (std::size_t k = 0; k < n; ++k) {
      Word rot = candidate_base.rotated(k);
      if (rot == r) continue;  // overlaps with r itself are excluded
      std::size_t lcp = std::min(z[n + 1 + k], n);
      if (lcp > rep.max_piece_length) {
        rep.max_piece_length = lcp;
        rep.witness.rotation = k;
        rep.witness.inverse = inverse_flag;
        std::vector<Letter> piece(r.letters().begin(), r.letters().begin() + lcp);
        rep.witness.piece = Word(std::move(piece), r.alphabet());
      }
    }
  };

  scan(r, false);
  scan(r.inverse(), true);

  rep.c_prime_threshold =
      rep.max_piece_length == 0 ? 0 : static_cast<int>(n / rep.max_piece_length);
  return rep;
}

bool satisfies_c_prime(const Word& r, int N) {
  if (N < 1) fail(Errc::UsageError, "C'(1/N) needs N >= 1");
  PieceReport rep = max_piece_length(r);
  // p <= |r|/N  <=>  p*N <= |r|, exactly
  return rep.max_piece_length * static_cast<std::size_t>(N) <= r.size();
}

BoundReport bound_report(const Word& r, std::optional<Rational> scl) {
  if (r.empty()) fail(Errc::EmptyWord, "bound_report of the identity");
  if (!in_commutator_subgroup(r))
    fail(Errc::NotInCommutatorSubgroup, render(r));
  if (scl && *scl < Rational(1, 2))
    fail(Errc::InvalidScl, "scl must be >= 1/2, got " + to_string(*scl));

  BoundReport rep;
  rep.word = r;
  rep.scl_input = scl;

  if (scl) {
    rep.bounds.push_back({BoundKind::WeakUpper, false, true, false, 4 * *scl,
                          "weak upper bound for simplicial volume"});
  }

  Word core = cyclically_reduce(r).core;
  RootDecomposition rd = primitive_root(core);

  if (rd.exponent == 1) {
    PieceReport pr = max_piece_length(core);
    int N = pr.c_prime_threshold;
    if (N == 0)
      fail(Errc::InternalModelError,
           "zero piece length is impossible for commutator-subgroup words");
    if (N >= 7) {
      Rational rN(N);
      if (scl) {
        rep.bounds.push_back({BoundKind::SmallCancellation, true, false, false,
                              (1 - Rational(6) / rN) * 4 * *scl,
                              "small cancellation C'(1/" + std::to_string(N) + ")"});
      }
      rep.bounds.push_back({BoundKind::SmallCancellationAbs, true, false, false,
                            rN / 3 - 1,
                            "small cancellation C'(1/" + std::to_string(N) + "), unconditional"});
      rep.bounds.push_back({BoundKind::SclLowerFromPieces, true, false, true,
                            (rN - 6) / 12,
                            "scl lower bound from C'(1/" + std::to_string(N) + ")"});
    }
  } else if (rd.exponent >= 7 && scl) {
    Rational rN(rd.exponent);
    rep.bounds.push_back({BoundKind::ProperPower, true, false, false,
                          (1 - Rational(6) / rN) * 4 * *scl,
                          "proper power r'^" + std::to_string(rd.exponent)});
  }
  return rep;
}

std::optional<DecompositionWitness> detect_decomposable(const Word& r) {
  if (!r.cyclically_reduced()) fail(Errc::NotCyclicallyReduced, render(r));
  if (r.empty() || !in_commutator_subgroup(r)) return std::nullopt;
  const std::size_t n = r.size();

  auto support = [](const Word& w) {
    std::set<int> s;
    for (const Letter& l : w.letters()) s.insert(l.gen);
    return s;
  };
  auto disjoint = [](const std::set<int>& a, const std::set<int>& b) {
    return std::none_of(a.begin(), a.end(), [&](int g) { return b.count(g) != 0; });
  };

  for (std::size_t k = 0; k < n; ++k) {
    Word sigma = r.rotated(k);
    const auto& s = sigma.letters();

    // case 1: sigma = r1 r2 with disjoint supports, both in F'
    for (std::size_t m = 1; m < n; ++m) {
      Word r1(std::vector<Letter>(s.begin(), s.begin() + m), r.alphabet());
      Word r2(std::vector<Letter>(s.begin() + m, s.end()), r.alphabet());
      if (!in_commutator_subgroup(r1) || !in_commutator_subgroup(r2)) continue;
      if (!disjoint(support(r1), support(r2))) continue;
      return DecompositionWitness{1, k, r1, r2, std::nullopt};
    }

    // case 2: sigma = r1 t r2 t^-1 with a fresh single-letter t
    if (n >= 4) {
      Letter t = s[n - 1].inverse();
      for (std::size_t i = 1; i + 2 < n; ++i) {
        if (s[i] != t) continue;
        Word r1(std::vector<Letter>(s.begin(), s.begin() + i), r.alphabet());
        Word r2(std::vector<Letter>(s.begin() + i + 1, s.end() - 1), r.alphabet());
        if (!in_commutator_subgroup(r1) || !in_commutator_subgroup(r2)) continue;
        auto supp = support(r1);
        auto s2 = support(r2);
        supp.insert(s2.begin(), s2.end());
        if (supp.count(t.gen)) continue;
        return DecompositionWitness{2, k, r1, r2, t};
      }
    }
  }
  return std::nullopt;
}

}  // namespace onerel
