#pragma once

#include <string>

#include "json.hpp"

#include "jordanlab/degcalc/audit.hpp"
#include "jordanlab/lpdecomp/classify.hpp"
#include "jordanlab/lpdecomp/decompose.hpp"
#include "jordanlab/lpdecomp/dimest.hpp"
#include "jordanlab/lpdecomp/escape.hpp"
#include "jordanlab/lpdecomp/field_find.hpp"
#include "jordanlab/lpdecomp/sandwich.hpp"
#include "jordanlab/varlab/quotient_embed.hpp"

namespace jordanlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "jordanlab/1";

// --- input schemas ---
// group: {"field": {"p": P, "e": E}, "n": N,
//         "generators": [[row-major integer coefficient values], ...]}
Field field_from_json(const Json& j, std::uint64_t cap = Field::kDefaultCap);
std::shared_ptr<const MatrixGroup> group_from_json(const Json& j,
                                                   std::size_t cap = MatrixGroup::kDefaultCap);
// variety: {"field": {"p": P, "e": E}, "vars": N, "polys": ["x11*x22-1", ...]}
VarietySpec variety_from_json(const Json& j);

Json field_to_json(const Field& f);
Json matrix_to_json(const MatrixOverF& m);

// --- report documents (all carry "schema": "jordanlab/1") ---
Json decomposition_report_json(const DecompositionReport& rep);
Json census_json(const CensusReport& rep, std::uint64_t q, const std::string& family);
Json sandwich_json(const SandwichReport& rep, std::uint64_t q);
Json escape_json(const EscapeResult& rep);
Json field_find_json(const FieldFindResult& rep);
Json audit_json(const std::vector<AuditResult>& results);
Json dimest_json(const std::vector<DimestRow>& rows, const std::string& family,
                 const std::string& kind);
std::string dimest_csv(const std::vector<DimestRow>& rows, const std::string& family,
                       const std::string& kind);
Json quotient_embed_json(const QuotientEmbedResult& rep);
Json catalog_json(const std::vector<LieCatalogEntry>& entries);
Json recognition_json(const mpz_class& order, std::uint64_t p,
                      const std::vector<RecognitionMatch>& matches);

}  // namespace jordanlab
