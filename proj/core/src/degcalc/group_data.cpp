#include "jordanlab/degcalc/group_data.hpp"

namespace jordanlab {

GroupType group_type_from_string(const std::string& s) {
  if (s.empty()) throw BadTypeError("empty group type");
  switch (s[0]) {
    case 'A': return GroupType::A;
    case 'B': return GroupType::B;
    case 'C': return GroupType::C;
    case 'D': return GroupType::D;
    case 'E':
      if (s == "E6") return GroupType::E6;
      if (s == "E7") return GroupType::E7;
      if (s == "E8") return GroupType::E8;
      break;
    case 'F':
      if (s == "F4") return GroupType::F4;
      break;
    case 'G':
      if (s == "G2") return GroupType::G2;
      break;
  }
  throw BadTypeError("unknown group type '" + s + "'");
}

std::string group_type_to_string(GroupType t, std::uint32_t rank) {
  switch (t) {
    case GroupType::A: return "A" + std::to_string(rank);
    case GroupType::B: return "B" + std::to_string(rank);
    case GroupType::C: return "C" + std::to_string(rank);
    case GroupType::D: return "D" + std::to_string(rank);
    case GroupType::E6: return "E6";
    case GroupType::E7: return "E7";
    case GroupType::E8: return "E8";
    case GroupType::F4: return "F4";
    case GroupType::G2: return "G2";
  }
  return "?";
}

namespace {

mpz_class factorial_z(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class pow2_z(std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return r;
}

Tower generic_adjoint_bound(std::uint32_t r) {
  // (2r)^(2^16 r^2)
  return tpow(tlit(2 * std::uint64_t(r)),
              tmul({tpow(tlit(2), tlit(16)), tpow(tlit(std::uint64_t(r)), tlit(2))}));
}

}  // namespace

GroupTypeData group_data(GroupType type, std::uint32_t rank) {
  GroupTypeData out;
  out.type = type;
  out.rank = rank;
  const std::uint64_t r = rank;
  switch (type) {
    case GroupType::A:
      if (rank < 1) throw BadTypeError("A_r needs r >= 1");
      out.dim = r * r + 2 * r;
      out.weyl_order = factorial_z(r + 1);
      break;
    case GroupType::B:
      if (rank < 2) throw BadTypeError("B_r needs r >= 2");
      out.dim = 2 * r * r + r;
      out.weyl_order = pow2_z(r) * factorial_z(r);
      break;
    case GroupType::C:
      if (rank < 3) throw BadTypeError("C_r needs r >= 3");
      out.dim = 2 * r * r + r;
      out.weyl_order = pow2_z(r) * factorial_z(r);
      break;
    case GroupType::D:
      if (rank < 4) throw BadTypeError("D_r needs r >= 4");
      out.dim = 2 * r * r - r;
      out.weyl_order = pow2_z(r - 1) * factorial_z(r);
      break;
    case GroupType::E6:
      if (rank != 6) throw BadTypeError("E6 has rank 6");
      out.dim = 78;
      out.weyl_order = 51840;
      break;
    case GroupType::E7:
      if (rank != 7) throw BadTypeError("E7 has rank 7");
      out.dim = 133;
      out.weyl_order = 2903040;
      break;
    case GroupType::E8:
      if (rank != 8) throw BadTypeError("E8 has rank 8");
      out.dim = 248;
      out.weyl_order = 696729600;
      break;
    case GroupType::F4:
      if (rank != 4) throw BadTypeError("F4 has rank 4");
      out.dim = 52;
      out.weyl_order = 1152;
      break;
    case GroupType::G2:
      if (rank != 2) throw BadTypeError("G2 has rank 2");
      out.dim = 14;
      out.weyl_order = 12;
      break;
  }
  out.adjoint_degree_generic = generic_adjoint_bound(rank);
  if (type == GroupType::A && rank == 1) {
    out.adjoint_degree_bound = tlit(16);
  } else if (type == GroupType::B && rank == 2) {
    out.adjoint_degree_bound = tlit(384);
  } else if (type == GroupType::G2) {
    out.adjoint_degree_bound = tpow(tlit(2), tlit(343));  // 2^(7^3)
  } else {
    out.adjoint_degree_bound = out.adjoint_degree_generic;
  }
  out.fundamental_bound = r + 1;
  return out;
}

std::vector<GroupTypeData> group_data_up_to_rank(std::uint32_t max_rank) {
  std::vector<GroupTypeData> out;
  for (std::uint32_t r = 1; r <= max_rank; ++r) out.push_back(group_data(GroupType::A, r));
  for (std::uint32_t r = 2; r <= max_rank; ++r) out.push_back(group_data(GroupType::B, r));
  for (std::uint32_t r = 3; r <= max_rank; ++r) out.push_back(group_data(GroupType::C, r));
  for (std::uint32_t r = 4; r <= max_rank; ++r) out.push_back(group_data(GroupType::D, r));
  if (max_rank >= 6) out.push_back(group_data(GroupType::E6, 6));
  if (max_rank >= 7) out.push_back(group_data(GroupType::E7, 7));
  if (max_rank >= 8) out.push_back(group_data(GroupType::E8, 8));
  if (max_rank >= 4) out.push_back(group_data(GroupType::F4, 4));
  if (max_rank >= 2) out.push_back(group_data(GroupType::G2, 2));
  return out;
}

}  // namespace jordanlab
