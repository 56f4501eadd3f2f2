#pragma once

#include <gmpxx.h>

#include "jordanlab/groupengine/quotient.hpp"

namespace jordanlab {

// Named subgroup computations. Every result satisfies Lagrange (checked).

Subset center(const GroupView& view);
Subset centralizer(const GroupView& view, const std::vector<std::size_t>& set);
Subset derived_subgroup(const GroupView& view);
Subset normal_closure(const GroupView& view, std::size_t x);
Subset normal_closure_of_set(const GroupView& view, const std::vector<std::size_t>& seeds);

struct SylowResult {
  Subset subgroup;
  std::uint64_t ell = 0;
  std::uint64_t ell_part = 1;  // full ell-part of |G|
  bool prime_divides = true;   // false: ell does not divide |G|, trivial subgroup returned
};

// One Sylow ell-subgroup, grown deterministically from the first ell-element
// in canonical order via normalizer steps.
SylowResult sylow_subgroup(const GroupView& view, std::uint64_t ell);

struct PCoreResult {
  Subset core;
  bool verified_normal = false;
  bool verified_p_group = false;
  bool verified_quotient_core_trivial = false;  // maximality certificate
};

// O_p: intersection of all conjugates of one Sylow p-subgroup. With
// certify = true the maximality certificate (trivial p-core of G/O_p) is
// computed as well; the view must then be owned by a shared_ptr.
PCoreResult p_core(GroupPtr view, std::uint64_t p, bool certify = true);

// All minimal normal subgroups: inclusion-minimal normal closures of
// nontrivial conjugacy class representatives.
std::vector<Subset> minimal_normal_subgroups(const GroupView& view);

struct RadicalResult {
  Subset radical;
  bool verified_solvable = false;
  bool verified_quotient_has_no_abelian_minimal = false;
};

// Largest normal solvable subgroup, by lifting the abelian part of the socle
// through successive quotients. Both certificate bits are always computed.
RadicalResult solvable_radical(GroupPtr view);

struct SimpleFactorInfo {
  Subset elements;              // inside the containing view
  mpz_class order;
  std::vector<std::pair<std::uint64_t, std::size_t>> spectrum;
  bool verified_simple = false;
};

struct SocleFactor {
  Subset elements;
  bool abelian = false;
  std::vector<SimpleFactorInfo> simple_factors;  // for nonabelian factors
};

struct SocleResult {
  Subset socle;
  std::vector<SocleFactor> factors;
};

// Product of all minimal normal subgroups, with each nonabelian factor
// decomposed into its simple direct factors.
SocleResult socle(GroupPtr view);

// Derived series descent to the trivial subgroup (solvability test).
bool is_solvable_subgroup(const GroupView& view, const Subset& sub);

}  // namespace jordanlab
