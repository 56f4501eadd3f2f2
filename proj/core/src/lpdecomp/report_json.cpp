#include "jordanlab/io.hpp"

#include <sstream>

namespace jordanlab {

Field field_from_json(const Json& j, std::uint64_t cap) {
  return Field::make(j.at("p").get<std::uint64_t>(), j.at("e").get<std::uint32_t>(), cap);
}

std::shared_ptr<const MatrixGroup> group_from_json(const Json& j, std::size_t cap) {
  Field f = field_from_json(j.at("field"));
  std::size_t n = j.at("n").get<std::size_t>();
  std::vector<MatrixOverF> gens;
  for (const auto& g : j.at("generators")) {
    if (g.size() != n * n) throw BadInputError("group input: generator entry count != n^2");
    MatrixOverF m(f, n);
    for (std::size_t i = 0; i < n * n; ++i) {
      std::int64_t v = g[i].get<std::int64_t>();
      if (v >= 0 && static_cast<std::uint64_t>(v) < f.size()) {
        m.at(i / n, i % n) = static_cast<felt>(v);  // encoded element value
      } else {
        m.at(i / n, i % n) = f.from_int(v);  // integer residue
      }
    }
    gens.push_back(std::move(m));
  }
  return MatrixGroup::close(gens, cap);
}

VarietySpec variety_from_json(const Json& j) {
  VarietySpec v;
  v.field = field_from_json(j.at("field"));
  v.ambient_vars = j.at("vars").get<std::size_t>();
  for (const auto& s : j.at("polys")) {
    v.polys.push_back(Poly::parse(v.field, v.ambient_vars, s.get<std::string>()));
  }
  return v;
}

Json field_to_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"e", f.ext_degree()}};
}

Json matrix_to_json(const MatrixOverF& m) {
  Json row = Json::array();
  for (std::size_t i = 0; i < m.side(); ++i) {
    for (std::size_t j = 0; j < m.side(); ++j) row.push_back(m.at(i, j));
  }
  return row;
}

namespace {

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    case Ordering::GT: return "GT";
    case Ordering::UNDECIDED: return "UNDECIDED";
  }
  return "?";
}

Json series_entry_json(const SeriesEntry& e) {
  Json words = Json::array();
  for (const auto& w : e.generator_words) words.push_back(w);
  return Json{{"name", e.name},
              {"order", e.order.get_str()},
              {"generators_as_words", words}};
}

Json spectrum_json(const std::vector<std::pair<std::uint64_t, std::size_t>>& spec) {
  Json j = Json::object();
  for (const auto& [o, c] : spec) j[std::to_string(o)] = c;
  return j;
}

}  // namespace

Json decomposition_report_json(const DecompositionReport& rep) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "decomposition";
  j["gamma_order"] = rep.gamma_order.get_str();
  j["p"] = rep.p;
  j["n"] = rep.n;
  j["series"] = Json::array({series_entry_json(rep.gamma), series_entry_json(rep.gamma1),
                             series_entry_json(rep.gamma2), series_entry_json(rep.gamma3)});
  Json factors = Json::array();
  for (const auto& f : rep.factors) {
    Json cands = Json::array();
    for (const auto& m : f.matches) cands.push_back(m.entry.tag());
    factors.push_back(Json{{"order", f.order.get_str()},
                           {"catalog", f.tag()},
                           {"ambiguous", f.ambiguous},
                           {"candidates", cands},
                           {"spectrum", spectrum_json(f.spectrum)}});
  }
  j["clauses"] = Json{
      {"a",
       {{"index", rep.index_gamma1.get_str()},
        {"J_prime_verdict", ordering_name(rep.jprime_verdict)},
        {"J_prime", rep.jprime_text},
        {"collins_reference", ordering_name(rep.collins_verdict)}}},
      {"b", {{"factors", factors}, {"gamma1_equals_gamma2", rep.gamma1_equals_gamma2}}},
      {"c",
       {{"order", rep.abelian_layer_order.get_str()},
        {"abelian", rep.abelian_verified},
        {"coprime", rep.coprime_verified}}},
      {"d", {{"order", rep.pcore_order.get_str()}, {"is_p_group", rep.p_group_verified}}}};
  j["certificates"] = Json{{"gamma3_normal", rep.gamma3_normal},
                           {"gamma2_normal", rep.gamma2_normal},
                           {"gamma1_normal", rep.gamma1_normal},
                           {"pcore_maximal", rep.pcore_maximality_certified}};
  return j;
}

Json census_json(const CensusReport& rep, std::uint64_t q, const std::string& family) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "unipotent_census";
  j["family"] = family;
  j["q"] = q;
  j["count_unipotent"] = rep.count_unipotent;
  j["count_regular_unipotent"] = rep.count_regular_unipotent;
  j["ratio"] = rep.ratio;
  j["half_inequality_holds"] = rep.half_inequality_holds;
  j["degenerate"] = rep.degenerate;
  return j;
}

Json sandwich_json(const SandwichReport& rep, std::uint64_t q) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "frobenius_sandwich";
  j["q"] = q;
  j["ambient_order"] = rep.ambient_order.get_str();
  j["fixed_order"] = rep.fixed_order.get_str();
  j["derived_order"] = rep.derived_order.get_str();
  j["gamma_order"] = rep.gamma_order.get_str();
  j["gamma_inside_fixed"] = rep.gamma_inside_fixed;
  j["derived_inside_gamma"] = rep.derived_inside_gamma;
  j["order_bounds"] = Json{{"lower", rep.lower_bound.get_str()},
                           {"upper", rep.upper_bound.get_str()},
                           {"lower_ok", rep.lower_ok},
                           {"upper_ok", rep.upper_ok}};
  return j;
}

Json escape_json(const EscapeResult& rep) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "escape";
  j["branch"] = rep.branch == EscapeResult::Branch::SMALL ? "Small" : "Subgroup";
  j["degree_bound"] = to_text(rep.degree_bound);
  j["degree_bound_value"] = rep.degree_bound_value.get_str();
  j["witness_size"] = rep.witness_size.get_str();
  j["translates_used"] = rep.translates_used;
  j["stabilized_point_count"] = rep.stabilized_point_count;
  j["gamma_contained_verified"] = rep.gamma_contained_verified;
  j["k_test"] = rep.k_test;
  j["dim_was_estimated"] = rep.dim_was_estimated;
  return j;
}

Json field_find_json(const FieldFindResult& rep) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "field_find";
  j["q"] = rep.q;
  j["witness_count"] = rep.witness_count;
  j["regular_unipotent_index"] = rep.regular_unipotent;
  j["corner_values"] = rep.corner_values;
  return j;
}

Json audit_json(const std::vector<AuditResult>& results) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "audit";
  Json arr = Json::array();
  std::size_t pass = 0, fail = 0, undecided = 0, skipped = 0;
  for (const auto& r : results) {
    arr.push_back(Json{{"check", r.check},
                       {"params", r.params},
                       {"verdict", audit_verdict_name(r.verdict)},
                       {"relation", r.relation},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs}});
    switch (r.verdict) {
      case AuditVerdict::PASS: ++pass; break;
      case AuditVerdict::FAIL: ++fail; break;
      case AuditVerdict::UNDECIDED: ++undecided; break;
      case AuditVerdict::SKIPPED: ++skipped; break;
    }
  }
  j["summary"] = Json{{"pass", pass}, {"fail", fail}, {"undecided", undecided}, {"skipped", skipped}};
  j["checks"] = std::move(arr);
  return j;
}

namespace {

Json dimest_row_json(const DimestRow& r) {
  Json j{{"q", r.q},
         {"label", r.label},
         {"gamma_order", r.gamma_order.get_str()},
         {"meet_count", r.meet_count.get_str()},
         {"dim_v", r.dim_v},
         {"dim_g", r.dim_g},
         {"deg_v", r.deg_v.get_str()},
         {"constant", r.constant_text},
         {"inequality_holds", r.inequality_holds},
         {"fitted_exponent", r.fitted_exponent}};
  if (r.has_centralizer_bounds) {
    j["phi_lower_ok"] = r.phi_lower_ok;
    j["phi_upper_ok"] = r.phi_upper_ok;
    j["class_size"] = r.class_size.get_str();
    j["orbit_stabilizer_exact"] = r.orbit_stabilizer_exact;
  }
  return j;
}

}  // namespace

Json dimest_json(const std::vector<DimestRow>& rows, const std::string& family,
                 const std::string& kind) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "dimest";
  j["family"] = family;
  j["variety_kind"] = kind;
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(dimest_row_json(r));
  j["rows"] = std::move(arr);
  return j;
}

std::string dimest_csv(const std::vector<DimestRow>& rows, const std::string& family,
                       const std::string& kind) {
  std::ostringstream os;
  os << "family,kind,q,label,gamma_order,meet_count,dim_v,dim_g,deg_v,inequality_holds,"
        "fitted_exponent,phi_lower_ok,phi_upper_ok,class_size,orbit_stabilizer_exact\n";
  for (const auto& r : rows) {
    os << family << "," << kind << "," << r.q << "," << r.label << "," << r.gamma_order.get_str()
       << "," << r.meet_count.get_str() << "," << r.dim_v << "," << r.dim_g << ","
       << r.deg_v.get_str() << "," << (r.inequality_holds ? 1 : 0) << "," << r.fitted_exponent;
    if (r.has_centralizer_bounds) {
      os << "," << (r.phi_lower_ok ? 1 : 0) << "," << (r.phi_upper_ok ? 1 : 0) << ","
         << r.class_size.get_str() << "," << (r.orbit_stabilizer_exact ? 1 : 0);
    } else {
      os << ",,,,";
    }
    os << "\n";
  }
  return os.str();
}

Json quotient_embed_json(const QuotientEmbedResult& rep) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "quotient_embed";
  j["delta"] = rep.delta;
  j["monomial_count"] = rep.monomial_count.get_str();
  j["monomial_count_n2"] = rep.monomial_count_n2.get_str();
  j["dim_invariant"] = rep.dim_invariant;
  j["dim_vanishing"] = rep.dim_vanishing;
  j["dim_wedge"] = rep.dim_wedge;
  j["group_point_count"] = rep.group_points.size();
  j["h_point_count"] = rep.h_point_count;
  j["kernel_size"] = rep.kernel_point_indices.size();
  j["kernel_equals_h_points"] = rep.kernel_equals_h_points;
  j["homomorphism_checked"] = rep.homomorphism_checked;
  return j;
}

Json catalog_json(const std::vector<LieCatalogEntry>& entries) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "lie_catalog";
  Json arr = Json::array();
  for (const auto& e : entries) {
    arr.push_back(Json{{"tag", e.tag()}, {"family", e.family}, {"rank", e.rank},
                       {"q", e.q}, {"p", e.p}, {"order", e.order.get_str()}});
  }
  j["entries"] = std::move(arr);
  return j;
}

Json recognition_json(const mpz_class& order, std::uint64_t p,
                      const std::vector<RecognitionMatch>& matches) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "recognition";
  j["order"] = order.get_str();
  j["p"] = p;
  Json arr = Json::array();
  for (const auto& m : matches) {
    const char* sc = "unchecked";
    if (m.spectrum == RecognitionMatch::SpectrumCheck::EQUAL) sc = "equal";
    if (m.spectrum == RecognitionMatch::SpectrumCheck::DIFFERENT) sc = "different";
    arr.push_back(Json{{"tag", m.entry.tag()}, {"spectrum", sc}});
  }
  j["matches"] = std::move(arr);
  j["ambiguous"] = matches.size() > 1;
  j["no_match"] = matches.empty();
  return j;
}

}  // namespace jordanlab
