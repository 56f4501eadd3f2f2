#include "jordanlab/lpdecomp/sandwich.hpp"

#include "jordanlab/groupengine/subgroups.hpp"

namespace jordanlab {

SandwichReport frobenius_sandwich(const MatrixGroup& gamma, const MatrixGroup& ambient,
                                  std::uint64_t q, std::uint64_t dim_g) {
  if (!(gamma.field() == ambient.field()) || gamma.matrix_side() != ambient.matrix_side()) {
    throw BadInputError("frobenius_sandwich: Gamma must be realized over the ambient field");
  }
  SandwichReport rep;
  rep.ambient_order = mpz_class(static_cast<unsigned long>(ambient.size()));
  rep.gamma_order = mpz_class(static_cast<unsigned long>(gamma.size()));

  // G^F: elements with every entry fixed by x -> x^q
  std::vector<std::size_t> fixed;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (ambient.element(i).frobenius(q) == ambient.element(i)) fixed.push_back(i);
  }
  Subset gf = Subset::of(ambient, std::move(fixed));
  rep.fixed_order = mpz_class(static_cast<unsigned long>(gf.elems.size()));

  // Gamma <= G^F, with a witness on failure
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    auto idx = ambient.index_of(gamma.element(i));
    if (!idx || !gf.contains(*idx)) {
      throw InclusionFailedError("frobenius_sandwich: Gamma element not fixed by F: " +
                                 gamma.element(i).to_string());
    }
  }
  rep.gamma_inside_fixed = true;

  // [G^F, G^F] <= Gamma
  auto amb_ptr = ambient.shared_from_this();
  auto gf_view = std::make_shared<SubgroupView>(amb_ptr, gf);
  Subset der_local = derived_subgroup(*gf_view);
  std::vector<std::size_t> der_ambient;
  for (std::size_t loc : der_local.elems) der_ambient.push_back(gf_view->to_parent(loc));
  rep.derived_order = mpz_class(static_cast<unsigned long>(der_ambient.size()));
  for (std::size_t ai : der_ambient) {
    if (!gamma.index_of(ambient.element(ai))) {
      throw InclusionFailedError("frobenius_sandwich: derived element outside Gamma: " +
                                 ambient.element(ai).to_string());
    }
  }
  rep.derived_inside_gamma = true;

  // order bounds for the split form: (q-1)^d <= |G^F| <= q^d
  mpz_class qm1 = mpz_class(static_cast<unsigned long>(q)) - 1;
  mpz_pow_ui(rep.lower_bound.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(dim_g));
  mpz_class qz = mpz_class(static_cast<unsigned long>(q));
  mpz_pow_ui(rep.upper_bound.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(dim_g));
  rep.lower_ok = rep.lower_bound <= rep.fixed_order;
  rep.upper_ok = rep.fixed_order <= rep.upper_bound;
  return rep;
}

}  // namespace jordanlab
