#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "jordanlab/errors.hpp"
#include "jordanlab/groupengine/group.hpp"

namespace jordanlab {

// One finite simple group of Lie type, identified by family tag, rank and q.
struct LieCatalogEntry {
  std::string family;  // "A", "2A", "B", "C", "D", "2D", "3D4", "E6", "2E6", "E7", "E8", "F4", "2F4", "G2", "2G2", "2B2"
  std::uint32_t rank = 0;
  std::uint64_t q = 0;
  std::uint64_t p = 0;  // characteristic
  mpz_class order;

  std::string tag() const;  // e.g. "A1(5)"
};

// All simple-group entries with order <= max_order; p = 0 means every
// characteristic. Entries are sorted by (order, family, rank, q) and include
// the known same-order coincidences as separate entries.
std::vector<LieCatalogEntry> lie_catalog(const mpz_class& max_order, std::uint64_t p = 0);

// Save/load the generated catalog (JSON) so repeated runs can reuse it;
// regenerated when the file is missing or was built with smaller bounds.
void save_catalog(const std::vector<LieCatalogEntry>& entries, const std::string& path);
std::vector<LieCatalogEntry> load_or_generate_catalog(const mpz_class& max_order, std::uint64_t p,
                                                      const std::string& path);

struct RecognitionMatch {
  LieCatalogEntry entry;
  // spectrum comparison, when requested and the candidate is enumerable
  enum class SpectrumCheck { UNCHECKED, EQUAL, DIFFERENT } spectrum = SpectrumCheck::UNCHECKED;
};

// Catalog lookup by order and characteristic. Ambiguity (several entries of
// one order) is surfaced, never resolved by fiat; if a spectrum is supplied,
// enumerable candidates are compared against it and re-ranked. An empty
// result means no match (callers treat it as a reportable verdict).
std::vector<RecognitionMatch> recognize_simple(
    const mpz_class& order, std::uint64_t p,
    const std::vector<std::pair<std::uint64_t, std::size_t>>* spectrum = nullptr);

}  // namespace jordanlab
