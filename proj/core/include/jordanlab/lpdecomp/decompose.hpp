#pragma once

#include "jordanlab/groupengine/subgroups.hpp"
#include "jordanlab/lpdecomp/catalog.hpp"
#include "jordanlab/towernum/tower.hpp"

namespace jordanlab {

struct SeriesEntry {
  std::string name;  // "Gamma", "Gamma1", "Gamma2", "Gamma3"
  mpz_class order;
  Subset elements;                                     // inside Gamma
  std::vector<std::size_t> generator_indices;          // inside Gamma
  std::vector<std::vector<std::size_t>> generator_words;
};

struct FactorReport {
  mpz_class order;
  std::vector<std::pair<std::uint64_t, std::size_t>> spectrum;
  std::vector<RecognitionMatch> matches;  // catalog identifications (>= 1)
  bool ambiguous = false;
  std::string tag() const { return matches.empty() ? "?" : matches.front().entry.tag(); }
};

// The certified normal series Gamma3 <= Gamma2 <= Gamma1 <= Gamma with one
// verification record per clause. decompose() never returns an uncertified
// report: any failed check raises VerificationFailedError instead.
struct DecompositionReport {
  mpz_class gamma_order;
  std::uint64_t p = 0;
  std::size_t n = 0;  // matrix size of the realization
  SeriesEntry gamma, gamma1, gamma2, gamma3;

  // clause (a): bounded index
  mpz_class index_gamma1;
  Ordering jprime_verdict = Ordering::UNDECIDED;   // index vs J'(n)
  Ordering collins_verdict = Ordering::UNDECIDED;  // index vs (n+2)!, reference only
  std::string jprime_text;

  // clause (b): product of simple groups of Lie type of characteristic p
  bool gamma1_equals_gamma2 = false;
  std::vector<FactorReport> factors;

  // clause (c): abelian of order coprime to p
  mpz_class abelian_layer_order;
  bool abelian_verified = false;
  bool coprime_verified = false;

  // clause (d): p-group
  mpz_class pcore_order;
  bool p_group_verified = false;
  bool pcore_maximality_certified = false;

  bool gamma3_normal = false, gamma2_normal = false, gamma1_normal = false;
};

struct DecomposeOptions {
  std::size_t group_cap = MatrixGroup::kDefaultCap;
  CompareOptions cmp{};
};

// Builds and certifies the series: Gamma3 = O_p(Gamma); Gamma2 = preimage of
// the centre of the solvable radical of Gamma/Gamma3; Gamma1 = preimage of
// the product of those socle factors of Gamma/Gamma2 that split into
// characteristic-p Lie-type simples.
DecompositionReport decompose(std::shared_ptr<const MatrixGroup> gamma, std::uint64_t p,
                              const DecomposeOptions& opts = {});

}  // namespace jordanlab
