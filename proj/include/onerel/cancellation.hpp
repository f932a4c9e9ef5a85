#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onerel/rational.hpp"
#include "onerel/words.hpp"

namespace onerel {

struct PieceWitness {
  std::size_t rotation = 0;  // rotation offset of the overlapping conjugate
  bool inverse = false;      // conjugate of r^-1 rather than r
  Word piece;
};

struct PieceReport {
  Word word;
  std::size_t max_piece_length = 0;
  PieceWitness witness;     // meaningful only when max_piece_length > 0
  int c_prime_threshold = 0;  // largest N with C'(1/N); 0 encodes "unbounded"
};

/// Longest common prefix of r with any cyclic conjugate of r or r^-1 other
/// than r itself. Requires r cyclically reduced, non-empty and root-free
/// (powers must go through primitive_root first).
PieceReport max_piece_length(const Word& r);

/// max_piece_length(r) <= |r|/N, compared exactly.
bool satisfies_c_prime(const Word& r, int N);

enum class BoundKind {
  WeakUpper,            // ||G_r|| < 4 scl
  SmallCancellation,    // (1 - 6/N) 4 scl <= ||G_r||
  SmallCancellationAbs, // N/3 - 1 <= ||G_r||
  SclLowerFromPieces,   // scl >= (N-6)/12
  ProperPower,          // (1 - 6/N) 4 scl(r'^N) <= ||G_{r'^N}||
};

struct Bound {
  BoundKind kind;
  bool is_lower;    // lower bound for the quantity, else upper
  bool strict;      // strict inequality
  bool about_scl;   // bounds scl instead of the simplicial volume
  Rational value;
  std::string provenance;
};

struct BoundReport {
  Word word;
  std::optional<Rational> scl_input;
  std::vector<Bound> bounds;
};

/// Structural bounds for ||G_r||. Requires r in the commutator subgroup and,
/// when given, scl >= 1/2.
BoundReport bound_report(const Word& r, std::optional<Rational> scl);

struct DecompositionWitness {
  int kind = 1;          // 1: r1 r2 on disjoint supports; 2: r1 t r2 t^-1
  std::size_t rotation;  // rotation of r realizing the shape
  Word r1, r2;
  std::optional<Letter> t;  // only for kind 2
};

/// Searches all cyclic rotations of r for the two decomposable-relator
/// shapes. With an scl value, ||G_r|| = 4 (scl - 1/2) holds exactly for
/// decomposable relators.
std::optional<DecompositionWitness> detect_decomposable(const Word& r);

}  // namespace onerel
