#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jordanlab/errors.hpp"
#include "jordanlab/towernum/tower.hpp"

namespace jordanlab {

// Dynkin types of connected almost simple groups.
enum class GroupType { A, B, C, D, E6, E7, E8, F4, G2 };

GroupType group_type_from_string(const std::string& s);  // "A1", "B2", "E8", ...
std::string group_type_to_string(GroupType t, std::uint32_t rank);

// Classical data for one (type, rank) pair: dimension, Weyl group order, the
// degree bound for the adjoint realization, and the fundamental-group bound.
struct GroupTypeData {
  GroupType type;
  std::uint32_t rank;
  std::uint64_t dim;
  mpz_class weyl_order;
  Tower adjoint_degree_bound;   // refined per-type value where available
  Tower adjoint_degree_generic; // uniform (2r)^(2^16 r^2)
  std::uint64_t fundamental_bound;  // r + 1
};

// Throws BadTypeError on invalid (type, rank) pairs (e.g. C2, D3, E9).
GroupTypeData group_data(GroupType type, std::uint32_t rank);

// All valid (type, rank) pairs with rank <= max_rank, in a fixed order.
std::vector<GroupTypeData> group_data_up_to_rank(std::uint32_t max_rank);

}  // namespace jordanlab
