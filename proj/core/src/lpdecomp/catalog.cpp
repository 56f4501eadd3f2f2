#include "jordanlab/lpdecomp/catalog.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

#include "jordanlab/groupengine/quotient.hpp"
#include "jordanlab/groupengine/subgroups.hpp"
#include "jordanlab/lpdecomp/classify.hpp"

namespace jordanlab {

std::string LieCatalogEntry::tag() const {
  if (family == "A" || family == "2A" || family == "B" || family == "C" || family == "D" ||
      family == "2D") {
    return family + std::to_string(rank) + "(" + std::to_string(q) + ")";
  }
  return family + "(" + std::to_string(q) + ")";
}

namespace {

mpz_class zpow(std::uint64_t q, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return r;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// order formulas for the simple groups; q is always a power of the
// characteristic p, and the non-simple small cases are excluded by callers
mpz_class order_A(std::uint32_t r, std::uint64_t q) {
  mpz_class o = zpow(q, std::uint64_t(r) * (r + 1) / 2);
  for (std::uint32_t i = 2; i <= r + 1; ++i) o *= zpow(q, i) - 1;
  return o / gcd_z(r + 1, mpz_class(static_cast<unsigned long>(q - 1)));
}

mpz_class order_2A(std::uint32_t r, std::uint64_t q) {
  mpz_class o = zpow(q, std::uint64_t(r) * (r + 1) / 2);
  for (std::uint32_t i = 2; i <= r + 1; ++i) {
    o *= zpow(q, i) - (i % 2 == 0 ? 1 : -1);
  }
  return o / gcd_z(r + 1, mpz_class(static_cast<unsigned long>(q + 1)));
}

mpz_class order_BC(std::uint32_t r, std::uint64_t q) {
  mpz_class o = zpow(q, std::uint64_t(r) * r);
  for (std::uint32_t i = 1; i <= r; ++i) o *= zpow(q, 2 * i) - 1;
  return o / gcd_z(2, mpz_class(static_cast<unsigned long>(q - 1)));
}

mpz_class order_D(std::uint32_t r, std::uint64_t q, bool twisted) {
  mpz_class o = zpow(q, std::uint64_t(r) * (r - 1));
  mpz_class qr = zpow(q, r);
  o *= twisted ? mpz_class(qr + 1) : mpz_class(qr - 1);
  for (std::uint32_t i = 1; i + 1 <= r; ++i) o *= zpow(q, 2 * i) - 1;
  return o / gcd_z(4, twisted ? mpz_class(qr + 1) : mpz_class(qr - 1));
}

mpz_class order_G2(std::uint64_t q) { return zpow(q, 6) * (zpow(q, 6) - 1) * (zpow(q, 2) - 1); }

mpz_class order_F4(std::uint64_t q) {
  return zpow(q, 24) * (zpow(q, 12) - 1) * (zpow(q, 8) - 1) * (zpow(q, 6) - 1) * (zpow(q, 2) - 1);
}

mpz_class order_E6(std::uint64_t q, bool twisted) {
  mpz_class o = zpow(q, 36);
  o *= zpow(q, 12) - 1;
  o *= twisted ? mpz_class(zpow(q, 9) + 1) : mpz_class(zpow(q, 9) - 1);
  o *= zpow(q, 8) - 1;
  o *= zpow(q, 6) - 1;
  o *= twisted ? mpz_class(zpow(q, 5) + 1) : mpz_class(zpow(q, 5) - 1);
  o *= zpow(q, 2) - 1;
  return o / gcd_z(3, mpz_class(static_cast<unsigned long>(twisted ? q + 1 : q - 1)));
}

mpz_class order_E7(std::uint64_t q) {
  mpz_class o = zpow(q, 63);
  for (std::uint32_t i : {18, 14, 12, 10, 8, 6, 2}) o *= zpow(q, i) - 1;
  return o / gcd_z(2, mpz_class(static_cast<unsigned long>(q - 1)));
}

mpz_class order_E8(std::uint64_t q) {
  mpz_class o = zpow(q, 120);
  for (std::uint32_t i : {30, 24, 20, 18, 14, 12, 8, 2}) o *= zpow(q, i) - 1;
  return o;
}

mpz_class order_3D4(std::uint64_t q) {
  return zpow(q, 12) * (zpow(q, 8) + zpow(q, 4) + 1) * (zpow(q, 6) - 1) * (zpow(q, 2) - 1);
}

mpz_class order_2B2(std::uint64_t q) {
  return zpow(q, 2) * (zpow(q, 2) + 1) * mpz_class(static_cast<unsigned long>(q - 1));
}

mpz_class order_2G2(std::uint64_t q) {
  return zpow(q, 3) * (zpow(q, 3) + 1) * mpz_class(static_cast<unsigned long>(q - 1));
}

mpz_class order_2F4(std::uint64_t q) {
  return zpow(q, 12) * (zpow(q, 6) + 1) * (zpow(q, 4) - 1) * (zpow(q, 3) + 1) *
         mpz_class(static_cast<unsigned long>(q - 1));
}

// prime powers q = p^e <= limit for one prime
std::vector<std::uint64_t> prime_powers(std::uint64_t p, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = p; q <= limit; ) {
    out.push_back(q);
    if (q > limit / p) break;
    q *= p;
  }
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime_u64(n)) out.push_back(n);
  }
  return out;
}

}  // namespace

std::vector<LieCatalogEntry> lie_catalog(const mpz_class& max_order, std::uint64_t p) {
  if (max_order > mpz_class("1000000000000")) {
    throw BadInputError("lie_catalog: max_order above 10^12 not supported");
  }
  std::vector<LieCatalogEntry> out;
  // PSL_2(q) has the smallest order of any family at a given q, and it is at
  // least (q^3 - q)/2, which is monotone; that caps the q (and p) scan
  std::uint64_t qlimit = 2;
  auto min_order = [](std::uint64_t q) -> mpz_class {
    mpz_class z(static_cast<unsigned long>(q));
    return mpz_class((z * z * z - z) / 2);
  };
  while (min_order(qlimit + 1) <= max_order) ++qlimit;
  std::vector<std::uint64_t> ps = p == 0 ? primes_up_to(qlimit) : std::vector<std::uint64_t>{p};

  auto push = [&](const std::string& fam, std::uint32_t r, std::uint64_t q, std::uint64_t pp,
                  const mpz_class& order) {
    if (order > max_order) return false;
    LieCatalogEntry e;
    e.family = fam;
    e.rank = r;
    e.q = q;
    e.p = pp;
    e.order = order;
    out.push_back(std::move(e));
    return true;
  };

  for (std::uint64_t pp : ps) {
    for (std::uint64_t q : prime_powers(pp, qlimit)) {
      // A_r: PSL_{r+1}(q); A1(2), A1(3) are not simple
      for (std::uint32_t r = 1;; ++r) {
        if (r == 1 && (q == 2 || q == 3)) {
          if (order_A(1, q) > max_order) break;
          continue;
        }
        if (!push("A", r, q, pp, order_A(r, q))) break;
      }
      // 2A_r: PSU_{r+1}(q), r >= 2; 2A2(2) not simple
      for (std::uint32_t r = 2;; ++r) {
        if (r == 2 && q == 2) {
          if (order_2A(2, 2) > max_order) break;
          continue;
        }
        if (!push("2A", r, q, pp, order_2A(r, q))) break;
      }
      // B_r, r >= 2; B2(2) not simple
      for (std::uint32_t r = 2;; ++r) {
        if (r == 2 && q == 2) {
          if (order_BC(2, 2) > max_order) break;
          continue;
        }
        if (!push("B", r, q, pp, order_BC(r, q))) break;
      }
      // C_r, r >= 3
      for (std::uint32_t r = 3;; ++r) {
        if (!push("C", r, q, pp, order_BC(r, q))) break;
      }
      // D_r and 2D_r, r >= 4
      for (std::uint32_t r = 4;; ++r) {
        if (!push("D", r, q, pp, order_D(r, q, false))) break;
      }
      for (std::uint32_t r = 4;; ++r) {
        if (!push("2D", r, q, pp, order_D(r, q, true))) break;
      }
      // exceptional types; G2(2) not simple
      if (q != 2) push("G2", 2, q, pp, order_G2(q));
      push("F4", 4, q, pp, order_F4(q));
      push("E6", 6, q, pp, order_E6(q, false));
      push("2E6", 6, q, pp, order_E6(q, true));
      push("E7", 7, q, pp, order_E7(q));
      push("E8", 8, q, pp, order_E8(q));
      push("3D4", 4, q, pp, order_3D4(q));
      // Suzuki and Ree families need odd powers of 2 resp. 3
      if (pp == 2) {
        bool odd_power = false;
        std::uint64_t t = q;
        std::uint32_t e = 0;
        while (t > 1) {
          t /= 2;
          ++e;
        }
        odd_power = (e % 2 == 1);
        if (odd_power && q >= 8) {
          push("2B2", 1, q, pp, order_2B2(q));
          push("2F4", 2, q, pp, order_2F4(q));
        }
      }
      if (pp == 3) {
        std::uint64_t t = q;
        std::uint32_t e = 0;
        while (t > 1) {
          t /= 3;
          ++e;
        }
        if (e % 2 == 1 && q >= 27) push("2G2", 1, q, pp, order_2G2(q));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const LieCatalogEntry& a, const LieCatalogEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.family != b.family) return a.family < b.family;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.q < b.q;
  });
  return out;
}

void save_catalog(const std::vector<LieCatalogEntry>& entries, const std::string& path) {
  nlohmann::ordered_json j;
  j["schema"] = "jordanlab/1";
  mpz_class max_order = 0;
  for (const auto& e : entries) max_order = std::max(max_order, e.order);
  j["max_order"] = max_order.get_str();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    arr.push_back({{"family", e.family}, {"rank", e.rank}, {"q", e.q}, {"p", e.p},
                   {"order", e.order.get_str()}, {"tag", e.tag()}});
  }
  j["entries"] = std::move(arr);
  std::ofstream os(path);
  os << j.dump(1) << "\n";
}

std::vector<LieCatalogEntry> load_or_generate_catalog(const mpz_class& max_order, std::uint64_t p,
                                                      const std::string& path) {
  std::ifstream is(path);
  if (is) {
    try {
      nlohmann::json j;
      is >> j;
      // the cache is only usable if it was generated for every characteristic
      // with at least the requested order coverage
      if (mpz_class(j.at("max_order").get<std::string>()) >= max_order) {
        std::vector<LieCatalogEntry> entries;
        for (const auto& item : j.at("entries")) {
          LieCatalogEntry e;
          e.family = item.at("family").get<std::string>();
          e.rank = item.at("rank").get<std::uint32_t>();
          e.q = item.at("q").get<std::uint64_t>();
          e.p = item.at("p").get<std::uint64_t>();
          e.order = mpz_class(item.at("order").get<std::string>());
          if (e.order <= max_order && (p == 0 || e.p == p)) entries.push_back(std::move(e));
        }
        return entries;
      }
    } catch (...) {
      // fall through to regeneration
    }
  }
  auto entries = lie_catalog(max_order, 0);
  save_catalog(entries, path);
  if (p == 0) return entries;
  std::vector<LieCatalogEntry> filtered;
  for (const auto& e : entries) {
    if (e.p == p) filtered.push_back(e);
  }
  return filtered;
}

std::vector<RecognitionMatch> recognize_simple(
    const mpz_class& order, std::uint64_t p,
    const std::vector<std::pair<std::uint64_t, std::size_t>>* spectrum) {
  if (order < 60) throw BadInputError("recognize_simple: no nonabelian simple group below order 60");
  std::vector<RecognitionMatch> out;
  for (const auto& e : lie_catalog(order, p)) {
    if (e.order == order) out.push_back(RecognitionMatch{e, RecognitionMatch::SpectrumCheck::UNCHECKED});
  }
  if (spectrum != nullptr && out.size() > 1) {
    for (auto& m : out) {
      // materialize the candidate's spectrum only at desk scale: PSL_2(q)
      if (m.entry.family == "A" && m.entry.rank == 1 && m.entry.q <= 13 && m.entry.q % 2 == 1) {
        Field f = Field::make(m.entry.p, [&] {
          std::uint32_t e = 0;
          std::uint64_t t = m.entry.q;
          while (t > 1) {
            t /= m.entry.p;
            ++e;
          }
          return e;
        }());
        auto psl = make_psl2_adjoint(f);
        auto spec = order_spectrum(*psl);
        m.spectrum = spec == *spectrum ? RecognitionMatch::SpectrumCheck::EQUAL
                                       : RecognitionMatch::SpectrumCheck::DIFFERENT;
      }
    }
    auto score = [](RecognitionMatch::SpectrumCheck s) {
      switch (s) {
        case RecognitionMatch::SpectrumCheck::EQUAL: return 0;
        case RecognitionMatch::SpectrumCheck::UNCHECKED: return 1;
        case RecognitionMatch::SpectrumCheck::DIFFERENT: return 2;
      }
      return 3;
    };
    std::stable_sort(out.begin(), out.end(), [&](const RecognitionMatch& a, const RecognitionMatch& b) {
      return score(a.spectrum) < score(b.spectrum);
    });
  }
  return out;
}

}  // namespace jordanlab
