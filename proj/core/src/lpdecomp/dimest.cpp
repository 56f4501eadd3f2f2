#include "jordanlab/lpdecomp/dimest.hpp"

#include <cmath>

#include "jordanlab/degcalc/rules.hpp"
#include "jordanlab/groupengine/subgroups.hpp"

namespace jordanlab {

namespace {

struct FieldOfQ {
  Field field;
  std::uint64_t p;
  std::uint32_t e;
};

FieldOfQ field_of_q(std::uint64_t q) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (!is_prime_u64(p) || q % p != 0) continue;
    std::uint64_t t = q;
    std::uint32_t e = 0;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (t != 1) break;
    return {Field::make(p, e), p, e};
  }
  throw BadInputError("q = " + std::to_string(q) + " is not a prime power");
}

// split regular semisimple element of the realization
MatrixOverF split_torus_element(const Field& f, DimestFamily fam) {
  felt a = primitive_element(f);
  MatrixOverF m(f, 2);
  if (fam == DimestFamily::SL2) {
    m.at(0, 0) = a;
    m.at(1, 1) = f.inv(a);
  } else {
    m.at(0, 0) = 1;
    m.at(1, 1) = a;
  }
  return fam == DimestFamily::SL2 ? m : adjoint_rep(m, LieAlgebra::SL);
}

// companion matrix of an irreducible quadratic (det 1 for SL2)
MatrixOverF nonsplit_torus_element(const Field& f, DimestFamily fam) {
  const std::uint64_t q = f.size();
  for (std::uint64_t c1 = 0; c1 < q; ++c1) {
    for (std::uint64_t c0 = fam == DimestFamily::SL2 ? 1 : 1; c0 < q;
         c0 += (fam == DimestFamily::SL2 ? q : 1)) {
      // t^2 + c1 t + c0, constant term forced to 1 in the SL2 case
      bool has_root = false;
      for (std::uint64_t x = 0; x < q && !has_root; ++x) {
        felt v = f.add(f.add(f.mul(static_cast<felt>(x), static_cast<felt>(x)),
                             f.mul(static_cast<felt>(c1), static_cast<felt>(x))),
                       static_cast<felt>(c0));
        has_root = v == 0;
      }
      if (has_root) continue;
      MatrixOverF m(f, 2);
      m.at(0, 1) = 1;
      m.at(1, 0) = f.neg(static_cast<felt>(c0));
      m.at(1, 1) = f.neg(static_cast<felt>(c1));
      return fam == DimestFamily::SL2 ? m : adjoint_rep(m, LieAlgebra::SL);
    }
  }
  throw Error("nonsplit_torus_element: no irreducible quadratic found");
}

Tower phi_tower(std::uint64_t x, std::uint64_t d, std::uint64_t D, std::uint64_t iota) {
  RuleParams p;
  p.values["x"] = tlit(x);
  p.values["d"] = tlit(d);
  p.values["D"] = tlit(D);
  p.values["iota"] = tlit(iota);
  return eval_rule("R24", p).value();
}

bool leq_towers(const Tower& lhs, const Tower& rhs, const CompareOptions& cmp) {
  Ordering o = compare(lhs, rhs, cmp);
  return o == Ordering::LT || o == Ordering::EQ;
}

}  // namespace

std::vector<DimestRow> dimest_census(DimestFamily family, DimestKind kind,
                                     const std::vector<std::uint64_t>& q_list,
                                     const DimestOptions& opts) {
  std::vector<DimestRow> rows;
  for (std::uint64_t q : q_list) {
    FieldOfQ fq = field_of_q(q);
    if (family == DimestFamily::PGL2 && fq.p == 2) {
      throw UnsupportedTypeError("dimest_census: the adjoint PGL2 realization needs odd q");
    }
    std::shared_ptr<const MatrixGroup> grp =
        family == DimestFamily::SL2 ? make_sl2(fq.field, opts.group_cap)
                                    : make_pgl2_adjoint(fq.field, opts.group_cap);
    GroupRealization real;
    real.family = family == DimestFamily::SL2 ? RealizationFamily::SL : RealizationFamily::PGL_ADJOINT;
    real.n = 2;
    const std::uint64_t d = 3;
    const std::uint64_t D = family == DimestFamily::SL2 ? 2 : 16;  // ambient group degree data
    const std::uint64_t iota = family == DimestFamily::SL2 ? 1 : 3;
    const mpz_class order(static_cast<unsigned long>(grp->size()));

    auto finish_row = [&](DimestRow& row, std::size_t dim_v, const mpz_class& deg_v,
                          const mpz_class& meet) {
      row.q = q;
      row.gamma_order = order;
      row.meet_count = meet;
      row.dim_v = dim_v;
      row.dim_g = d;
      row.deg_v = deg_v;
      RuleParams rp;
      rp.values["d"] = tlit(d);
      rp.values["D"] = tlit(D);
      rp.values["DV"] = tlit(deg_v);
      rp.values["dV"] = tlit(std::uint64_t(dim_v));
      Tower c = eval_rule("R21", rp).value();
      row.constant_text = to_text(c);
      // |Gamma ∩ V| <= C |Gamma|^(dim V / d), integerized to the d-th power
      Tower lhs = tpow(tlit(meet), tlit(d));
      Tower rhs = tmul({tpow(c, tlit(d)), tpow(tlit(order), tlit(std::uint64_t(dim_v)))});
      row.inequality_holds = leq_towers(lhs, rhs, opts.cmp);
      row.fitted_exponent = meet <= 1 ? 0.0
                                      : std::log(meet.get_d()) / std::log(order.get_d());
    };

    auto centralizer_row = [&](const MatrixOverF& x, const std::string& label) {
      DimestRow row;
      row.label = label;
      auto xi = grp->index_of(x);
      if (!xi) throw BadInputError("dimest_census: representative not in the group");
      Subset c = centralizer(*grp, {*xi});
      // dim of the centralizer: fixed space of the adjoint action
      MatrixOverF ad = adjoint_action(x, real);
      MatrixOverF fixed = ad - MatrixOverF::identity(ad.field(), ad.side());
      std::size_t dprime = ad.side() - fixed.rank();
      mpz_class meet(static_cast<unsigned long>(c.elems.size()));
      finish_row(row, dprime, mpz_class(static_cast<unsigned long>(D)), meet);
      // two-sided centralizer bounds, integerized to the d-th power
      row.has_centralizer_bounds = true;
      Tower phi_up = phi_tower(dprime, d, D, iota);
      Tower phi_dn = phi_tower(d - dprime, d, D, iota);
      Tower meet_d = tpow(tlit(meet), tlit(d));
      Tower ord_dp = tpow(tlit(order), tlit(std::uint64_t(dprime)));
      row.phi_upper_ok = leq_towers(meet_d, tmul({tpow(phi_up, tlit(d)), ord_dp}), opts.cmp);
      row.phi_lower_ok = leq_towers(ord_dp, tmul({tpow(phi_dn, tlit(d)), meet_d}), opts.cmp);
      // exact orbit-stabilizer identity
      std::vector<char> seen(grp->size(), 0);
      std::vector<std::size_t> orbit{*xi};
      seen[*xi] = 1;
      for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
        for (std::size_t g : grp->generators()) {
          std::size_t y = grp->conj(g, orbit[qi]);
          if (!seen[y]) {
            seen[y] = 1;
            orbit.push_back(y);
          }
        }
      }
      row.class_size = mpz_class(static_cast<unsigned long>(orbit.size()));
      row.orbit_stabilizer_exact = row.class_size * meet == order;
      return row;
    };

    switch (kind) {
      case DimestKind::UNIPOTENT_CONE: {
        DimestRow row;
        CensusReport census = unipotent_census(*grp, real);
        // the cone is cut by the trace/entry conditions of degree <= 2 inside
        // the group variety
        finish_row(row, 2, mpz_class(2) * (family == DimestFamily::SL2 ? 1 : 16),
                   mpz_class(static_cast<unsigned long>(census.count_unipotent)));
        rows.push_back(std::move(row));
        break;
      }
      case DimestKind::SPLIT_TORUS:
        rows.push_back(centralizer_row(split_torus_element(fq.field, family), "split"));
        break;
      case DimestKind::NONSPLIT_TORUS_CLASS:
        rows.push_back(centralizer_row(nonsplit_torus_element(fq.field, family), "nonsplit"));
        break;
      case DimestKind::CONJ_CLASS: {
        auto classes = conjugacy_classes(*grp);
        for (const auto& cls : classes) {
          rows.push_back(centralizer_row(grp->element(cls[0]),
                                         "class@" + std::to_string(cls[0])));
        }
        break;
      }
    }
  }
  return rows;
}

}  // namespace jordanlab
