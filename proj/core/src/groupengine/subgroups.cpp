#include "jordanlab/groupengine/subgroups.hpp"

#include <algorithm>

namespace jordanlab {

namespace {

void check_lagrange(const GroupView& view, const Subset& sub, const char* what) {
  if (sub.elems.empty() || view.size() % sub.elems.size() != 0) {
    throw Error(std::string(what) + ": result order does not divide the group order");
  }
}

}  // namespace

Subset center(const GroupView& view) {
  std::vector<std::size_t> elems;
  for (std::size_t x = 0; x < view.size(); ++x) {
    bool central = true;
    for (std::size_t g : view.generators()) {
      if (view.mul(x, g) != view.mul(g, x)) {
        central = false;
        break;
      }
    }
    if (central) elems.push_back(x);
  }
  Subset s = Subset::of(view, std::move(elems));
  check_lagrange(view, s, "center");
  return s;
}

Subset centralizer(const GroupView& view, const std::vector<std::size_t>& set) {
  std::vector<std::size_t> elems;
  for (std::size_t x = 0; x < view.size(); ++x) {
    bool ok = true;
    for (std::size_t s : set) {
      if (view.mul(x, s) != view.mul(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) elems.push_back(x);
  }
  Subset s = Subset::of(view, std::move(elems));
  check_lagrange(view, s, "centralizer");
  return s;
}

Subset normal_closure_of_set(const GroupView& view, const std::vector<std::size_t>& seeds) {
  ClosureBuilder cb(view);
  cb.add_all(seeds);
  // close under conjugation by the group generators; every new conjugate is a
  // fresh generator for the subgroup closure
  for (std::size_t qi = 0; qi < cb.elems().size(); ++qi) {
    std::size_t x = cb.elems()[qi];
    for (std::size_t g : view.generators()) {
      std::size_t y = view.conj(g, x);
      if (!cb.contains(y)) cb.add_generator(y);
    }
  }
  Subset s = cb.take(view);
  check_lagrange(view, s, "normal_closure");
  return s;
}

Subset normal_closure(const GroupView& view, std::size_t x) {
  return normal_closure_of_set(view, {x});
}

Subset derived_subgroup(const GroupView& view) {
  std::vector<std::size_t> comms;
  for (std::size_t a : view.generators()) {
    for (std::size_t b : view.generators()) {
      comms.push_back(view.mul(view.inv(view.mul(b, a)), view.mul(a, b)));  // [a,b]
    }
  }
  return normal_closure_of_set(view, comms);
}

SylowResult sylow_subgroup(const GroupView& view, std::uint64_t ell) {
  if (ell < 2 || !is_prime_u64(ell)) throw BadInputError("sylow: ell must be prime");
  SylowResult out;
  out.ell = ell;
  std::uint64_t order = view.size();
  while (order % ell == 0) {
    out.ell_part *= ell;
    order /= ell;
  }
  if (out.ell_part == 1) {
    out.prime_divides = false;
    out.subgroup = Subset::of(view, {view.id()});
    return out;
  }
  std::vector<std::uint64_t> ord = element_orders(view);
  auto is_ell_element = [&](std::size_t x) {
    std::uint64_t o = ord[x];
    while (o % ell == 0) o /= ell;
    return o == 1 && ord[x] > 1;
  };
  ClosureBuilder cb(view);
  std::size_t first = SIZE_MAX;
  for (std::size_t x = 0; x < view.size(); ++x) {
    if (is_ell_element(x)) {
      first = x;
      break;
    }
  }
  if (first == SIZE_MAX) throw Error("sylow: no ell-element found though ell divides |G|");
  cb.add_generator(first);
  while (cb.elems().size() < out.ell_part) {
    // an ell-element normalizing the current subgroup but outside it exists
    // whenever the subgroup is not yet Sylow; take the first in canonical order
    bool grown = false;
    for (std::size_t y = 0; y < view.size() && !grown; ++y) {
      if (!is_ell_element(y) || cb.contains(y)) continue;
      bool normalizes = true;
      for (std::size_t g : cb.essential_generators()) {
        if (!cb.contains(view.conj(view.inv(y), g))) {  // y g y^-1
          normalizes = false;
          break;
        }
      }
      if (normalizes) {
        cb.add_generator(y);
        grown = true;
      }
    }
    if (!grown) throw Error("sylow: growth step found no normalizing ell-element");
  }
  out.subgroup = cb.take(view);
  check_lagrange(view, out.subgroup, "sylow");
  return out;
}

PCoreResult p_core(GroupPtr view, std::uint64_t p, bool certify) {
  PCoreResult out;
  SylowResult syl = sylow_subgroup(*view, p);
  if (!syl.prime_divides) {
    out.core = syl.subgroup;  // trivial
    out.verified_normal = true;
    out.verified_p_group = true;
    out.verified_quotient_core_trivial = true;
    return out;
  }
  // intersect the orbit of the Sylow subgroup under conjugation
  std::vector<char> inter = syl.subgroup.mask;
  std::vector<std::vector<std::size_t>> orbit{syl.subgroup.elems};
  std::unordered_map<std::string, char> seen;
  auto key_of = [](const std::vector<std::size_t>& v) {
    std::string k;
    k.reserve(v.size() * 8);
    for (std::size_t x : v) k.append(reinterpret_cast<const char*>(&x), sizeof(x));
    return k;
  };
  seen[key_of(syl.subgroup.elems)] = 1;
  for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
    for (std::size_t g : view->generators()) {
      std::vector<std::size_t> img;
      img.reserve(orbit[qi].size());
      for (std::size_t x : orbit[qi]) img.push_back(view->conj(g, x));
      std::sort(img.begin(), img.end());
      std::string k = key_of(img);
      if (seen.emplace(std::move(k), 1).second) {
        std::vector<char> m(view->size(), 0);
        for (std::size_t x : img) m[x] = 1;
        for (std::size_t i = 0; i < inter.size(); ++i) inter[i] = inter[i] && m[i];
        orbit.push_back(std::move(img));
      }
    }
  }
  std::vector<std::size_t> elems;
  for (std::size_t i = 0; i < inter.size(); ++i) {
    if (inter[i]) elems.push_back(i);
  }
  out.core = Subset::of(*view, std::move(elems));
  check_lagrange(*view, out.core, "p_core");
  out.verified_normal = is_normal_subset(*view, out.core);
  out.verified_p_group = true;
  for (std::size_t x : out.core.elems) {
    std::uint64_t o = element_order(*view, x);
    while (o % p == 0) o /= p;
    if (o != 1) {
      out.verified_p_group = false;
      break;
    }
  }
  if (!out.verified_normal || !out.verified_p_group) {
    throw Error("p_core: certification failed (normality or p-group check)");
  }
  if (certify) {
    auto q = quotient(view, out.core);
    PCoreResult inner = p_core(q, p, false);
    out.verified_quotient_core_trivial = inner.core.elems.size() == 1;
    if (!out.verified_quotient_core_trivial) {
      throw Error("p_core: maximality certificate failed");
    }
  }
  return out;
}

std::vector<Subset> minimal_normal_subgroups(const GroupView& view) {
  if (view.size() <= 1) throw BadInputError("minimal_normal_subgroups: group must be nontrivial");
  auto classes = conjugacy_classes(view);
  std::vector<Subset> closures;
  std::unordered_map<std::string, char> seen;
  for (const auto& cls : classes) {
    std::size_t rep = cls[0];
    if (rep == view.id() && cls.size() == 1) continue;
    // the normal closure of the representative is generated by its whole class
    Subset ncl = normal_closure(view, rep);
    std::string key;
    key.reserve(ncl.elems.size() * 8);
    for (std::size_t x : ncl.elems) key.append(reinterpret_cast<const char*>(&x), sizeof(x));
    if (seen.emplace(std::move(key), 1).second) closures.push_back(std::move(ncl));
  }
  // keep the inclusion-minimal ones
  std::vector<Subset> minimal;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < closures.size() && is_min; ++j) {
      if (i == j || closures[j].elems.size() >= closures[i].elems.size()) continue;
      bool subset = true;
      for (std::size_t x : closures[j].elems) {
        if (!closures[i].contains(x)) {
          subset = false;
          break;
        }
      }
      if (subset) is_min = false;
    }
    if (is_min) minimal.push_back(closures[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Subset& a, const Subset& b) { return a.elems < b.elems; });
  return minimal;
}

RadicalResult solvable_radical(GroupPtr view) {
  Subset radical = Subset::of(*view, {view->id()});
  for (;;) {
    GroupPtr cur;
    std::shared_ptr<const QuotientView> q;
    if (radical.elems.size() == 1) {
      cur = view;
    } else {
      q = quotient(view, radical);
      cur = q;
    }
    if (cur->size() == 1) break;
    std::vector<Subset> mns = minimal_normal_subgroups(*cur);
    std::vector<std::size_t> abelian_union;
    for (const auto& m : mns) {
      if (is_abelian_subset(*cur, m)) {
        abelian_union.insert(abelian_union.end(), m.elems.begin(), m.elems.end());
      }
    }
    if (abelian_union.empty()) break;
    Subset lifted_in_cur = generated_subgroup(*cur, abelian_union);
    radical = q ? q->preimage(lifted_in_cur) : lifted_in_cur;
  }
  RadicalResult out;
  out.radical = std::move(radical);
  check_lagrange(*view, out.radical, "solvable_radical");
  out.verified_solvable = is_solvable_subgroup(*view, out.radical);
  // by loop exit the quotient has no abelian minimal normal subgroup
  if (out.radical.elems.size() == view->size()) {
    out.verified_quotient_has_no_abelian_minimal = true;
  } else {
    auto q = quotient(view, out.radical);
    bool any_abelian = false;
    if (q->size() > 1) {
      for (const auto& m : minimal_normal_subgroups(*q)) {
        if (is_abelian_subset(*q, m)) {
          any_abelian = true;
          break;
        }
      }
    }
    out.verified_quotient_has_no_abelian_minimal = !any_abelian;
  }
  if (!out.verified_solvable || !out.verified_quotient_has_no_abelian_minimal) {
    throw Error("solvable_radical: certification failed");
  }
  return out;
}

bool is_solvable_subgroup(const GroupView& view, const Subset& sub) {
  GroupPtr self = view.shared_from_this();
  auto sv = std::make_shared<SubgroupView>(self, sub);
  std::shared_ptr<const GroupView> cur = sv;
  std::size_t prev = cur->size();
  for (;;) {
    if (cur->size() == 1) return true;
    Subset d = derived_subgroup(*cur);
    if (d.elems.size() == prev) return false;  // stabilized above trivial
    prev = d.elems.size();
    cur = std::make_shared<SubgroupView>(cur, d);
  }
}

SocleResult socle(GroupPtr view) {
  SocleResult out;
  std::vector<Subset> mns = minimal_normal_subgroups(*view);
  std::vector<std::size_t> all;
  for (const auto& m : mns) all.insert(all.end(), m.elems.begin(), m.elems.end());
  out.socle = generated_subgroup(*view, all);
  check_lagrange(*view, out.socle, "socle");
  for (auto& m : mns) {
    SocleFactor f;
    f.abelian = is_abelian_subset(*view, m);
    if (!f.abelian) {
      auto mv = std::make_shared<SubgroupView>(view, m);
      // a nonabelian minimal normal subgroup is the direct product of its own
      // minimal normal subgroups, which are the simple factors
      std::vector<Subset> simple_parts = minimal_normal_subgroups(*mv);
      mpz_class product_order = 1;
      for (const auto& s : simple_parts) product_order *= mpz_class(static_cast<unsigned long>(s.elems.size()));
      if (product_order != mpz_class(static_cast<unsigned long>(mv->size()))) {
        throw Error("socle: nonabelian minimal normal did not split into its minimal normals");
      }
      for (const auto& s : simple_parts) {
        SimpleFactorInfo info;
        auto sv = std::make_shared<SubgroupView>(mv, s);
        // simplicity: the only minimal normal subgroup is the whole factor
        auto inner = minimal_normal_subgroups(*sv);
        info.verified_simple = inner.size() == 1 && inner[0].elems.size() == sv->size();
        info.order = mpz_class(static_cast<unsigned long>(sv->size()));
        info.spectrum = order_spectrum(*sv);
        // lift the element set back to the outer view
        std::vector<std::size_t> outer;
        for (std::size_t loc : s.elems) outer.push_back(mv->to_parent(loc));
        info.elements = Subset::of(*view, std::move(outer));
        f.simple_factors.push_back(std::move(info));
      }
    }
    f.elements = std::move(m);
    out.factors.push_back(std::move(f));
  }
  return out;
}

}  // namespace jordanlab
