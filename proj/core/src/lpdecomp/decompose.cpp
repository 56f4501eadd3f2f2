#include "jordanlab/lpdecomp/decompose.hpp"

#include <algorithm>

#include "jordanlab/degcalc/rules.hpp"

namespace jordanlab {

namespace {

SeriesEntry make_entry(const std::string& name, const MatrixGroup& gamma, Subset elems) {
  SeriesEntry e;
  e.name = name;
  e.order = mpz_class(static_cast<unsigned long>(elems.elems.size()));
  e.generator_indices = small_generating_set(gamma, elems);
  for (std::size_t gi : e.generator_indices) e.generator_words.push_back(gamma.word_for(gi));
  e.elements = std::move(elems);
  return e;
}

Subset whole_group(const GroupView& v) {
  std::vector<std::size_t> all(v.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subset::of(v, std::move(all));
}

bool view_is_abelian(const GroupView& v) {
  for (std::size_t a : v.generators()) {
    for (std::size_t b : v.generators()) {
      if (v.mul(a, b) != v.mul(b, a)) return false;
    }
  }
  return true;
}

}  // namespace

DecompositionReport decompose(std::shared_ptr<const MatrixGroup> gamma, std::uint64_t p,
                              const DecomposeOptions& opts) {
  if (!is_prime_u64(p)) throw BadInputError("decompose: p must be prime");
  if (gamma->size() > opts.group_cap) throw CapExceededError("decompose: group exceeds cap");
  DecompositionReport rep;
  rep.gamma_order = mpz_class(static_cast<unsigned long>(gamma->size()));
  rep.p = p;
  rep.n = gamma->matrix_side();
  rep.gamma = make_entry("Gamma", *gamma, whole_group(*gamma));

  // Gamma3 = O_p(Gamma), certified maximal normal p-subgroup
  PCoreResult pc = p_core(gamma, p, /*certify=*/true);
  rep.pcore_maximality_certified = pc.verified_quotient_core_trivial;
  Subset gamma3 = pc.core;

  // Gamma2 = preimage of Z(Rad(Gamma/Gamma3))
  auto q3 = quotient(gamma, gamma3);
  RadicalResult rad = solvable_radical(q3);
  Subset z_in_q3;
  {
    auto radview = std::make_shared<SubgroupView>(q3, rad.radical);
    Subset z_local = center(*radview);
    std::vector<std::size_t> z_elems;
    for (std::size_t loc : z_local.elems) z_elems.push_back(radview->to_parent(loc));
    z_in_q3 = Subset::of(*q3, std::move(z_elems));
  }
  Subset gamma2 = q3->preimage(z_in_q3);

  // Gamma1 = preimage of the characteristic-p Lie part of the socle of
  // Gamma/Gamma2
  auto q2 = quotient(gamma, gamma2);
  Subset gamma1 = gamma2;
  std::vector<FactorReport> factors;
  if (q2->size() > 1) {
    SocleResult soc = socle(q2);
    std::vector<std::size_t> lie_union;
    for (const auto& factor : soc.factors) {
      if (factor.abelian) continue;
      bool all_lie = true;
      std::vector<FactorReport> factor_reports;
      for (const auto& simple : factor.simple_factors) {
        if (!simple.verified_simple) {
          all_lie = false;
          break;
        }
        FactorReport fr;
        fr.order = simple.order;
        fr.spectrum = simple.spectrum;
        if (simple.order < 60) {
          all_lie = false;
          break;
        }
        fr.matches = recognize_simple(simple.order, p, &fr.spectrum);
        if (fr.matches.empty()) {
          all_lie = false;  // simple but not Lie type of characteristic p
          break;
        }
        fr.ambiguous = fr.matches.size() > 1;
        factor_reports.push_back(std::move(fr));
      }
      if (all_lie) {
        lie_union.insert(lie_union.end(), factor.elements.elems.begin(), factor.elements.elems.end());
        for (auto& fr : factor_reports) factors.push_back(std::move(fr));
      }
    }
    if (!lie_union.empty()) {
      Subset n_in_q2 = generated_subgroup(*q2, lie_union);
      gamma1 = q2->preimage(n_in_q2);
      // the product of the selected factors must fill N exactly
      mpz_class prod = 1;
      for (const auto& fr : factors) prod *= fr.order;
      if (prod != mpz_class(static_cast<unsigned long>(n_in_q2.elems.size()))) {
        throw VerificationFailedError("b", "socle factors do not multiply up to the Lie layer");
      }
    }
  }

  // ---- clause verification (the report is only assembled if all pass) ----

  // (d) Gamma3 normal p-group
  rep.gamma3_normal = is_normal_subset(*gamma, gamma3);
  if (!rep.gamma3_normal) throw VerificationFailedError("d", "Gamma3 not normal");
  rep.pcore_order = mpz_class(static_cast<unsigned long>(gamma3.elems.size()));
  {
    std::uint64_t o = gamma3.elems.size();
    while (o % p == 0) o /= p;
    rep.p_group_verified = (o == 1);
  }
  if (!rep.p_group_verified) throw VerificationFailedError("d", "Gamma3 is not a p-group");

  // (c) Gamma2/Gamma3 abelian of order coprime to p
  rep.gamma2_normal = is_normal_subset(*gamma, gamma2);
  if (!rep.gamma2_normal) throw VerificationFailedError("c", "Gamma2 not normal");
  {
    auto g2view = std::make_shared<SubgroupView>(gamma, gamma2);
    std::vector<std::size_t> g3_local;
    for (std::size_t i = 0; i < g2view->size(); ++i) {
      if (gamma3.contains(g2view->to_parent(i))) g3_local.push_back(i);
    }
    auto q23 = quotient(g2view, Subset::of(*g2view, std::move(g3_local)));
    rep.abelian_layer_order = mpz_class(static_cast<unsigned long>(q23->size()));
    rep.abelian_verified = view_is_abelian(*q23);
    if (!rep.abelian_verified) throw VerificationFailedError("c", "Gamma2/Gamma3 not abelian");
    rep.coprime_verified = (q23->size() % p) != 0;
    if (!rep.coprime_verified) throw VerificationFailedError("c", "p divides |Gamma2/Gamma3|");
  }

  // (b) Gamma1/Gamma2 is the recognized product (possibly empty)
  rep.gamma1_normal = is_normal_subset(*gamma, gamma1);
  if (!rep.gamma1_normal) throw VerificationFailedError("b", "Gamma1 not normal");
  rep.gamma1_equals_gamma2 = gamma1.elems == gamma2.elems;
  {
    mpz_class layer = mpz_class(static_cast<unsigned long>(gamma1.elems.size())) /
                      mpz_class(static_cast<unsigned long>(gamma2.elems.size()));
    mpz_class prod = 1;
    for (const auto& fr : factors) prod *= fr.order;
    if (layer != prod) throw VerificationFailedError("b", "Lie layer order mismatch");
  }
  rep.factors = std::move(factors);

  // (a) index bounded by J'(n), with the reference factorial alongside
  rep.index_gamma1 = rep.gamma_order / mpz_class(static_cast<unsigned long>(gamma1.elems.size()));
  {
    RuleParams pj;
    pj.values["n"] = tlit(std::uint64_t(rep.n));
    Tower jn = eval_rule("R27", pj).value();
    rep.jprime_text = to_text(jn);
    Tower idx = tlit(mpz_class(rep.index_gamma1));
    rep.jprime_verdict = compare(idx, jn, opts.cmp);
    if (rep.jprime_verdict != Ordering::LT && rep.jprime_verdict != Ordering::EQ) {
      throw VerificationFailedError("a", "index " + rep.index_gamma1.get_str() + " not below J'(n)");
    }
    rep.collins_verdict = compare(idx, tfact(tlit(std::uint64_t(rep.n) + 2)), opts.cmp);
  }

  rep.gamma3 = make_entry("Gamma3", *gamma, std::move(gamma3));
  rep.gamma2 = make_entry("Gamma2", *gamma, std::move(gamma2));
  rep.gamma1 = make_entry("Gamma1", *gamma, std::move(gamma1));
  return rep;
}

}  // namespace jordanlab
