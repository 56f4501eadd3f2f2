#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jordanlab/ffarith/matrix.hpp"

namespace jordanlab {

// Multiplication oracle over elements indexed 0..size()-1. Matrix groups,
// subgroups and coset quotients all implement this, so the group-theoretic
// algorithms below run uniformly on any of them.
class GroupView : public std::enable_shared_from_this<GroupView> {
 public:
  virtual ~GroupView() = default;
  virtual std::size_t size() const = 0;
  virtual std::size_t mul(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t inv(std::size_t a) const = 0;
  virtual std::size_t id() const = 0;
  // A generating set (indices); identity-free and deduplicated.
  virtual const std::vector<std::size_t>& generators() const = 0;
  virtual std::string describe_element(std::size_t i) const = 0;

  std::size_t conj(std::size_t g, std::size_t x) const {  // g^-1 x g
    return mul(inv(g), mul(x, g));
  }
};

using GroupPtr = std::shared_ptr<const GroupView>;

// Subset of a view, stored as a sorted index list plus a membership mask.
struct Subset {
  std::vector<std::size_t> elems;   // sorted ascending
  std::vector<char> mask;           // size = view.size()

  bool contains(std::size_t i) const { return i < mask.size() && mask[i]; }
  std::size_t size() const { return elems.size(); }
  static Subset of(const GroupView& view, std::vector<std::size_t> elems);
};

// Fully enumerated matrix group, closed under product and inverse. Elements
// are indexed in BFS discovery order from the identity (index 0); ties do not
// arise because generation is sequential. Every element keeps one witness
// word in the generators.
class MatrixGroup : public GroupView {
 public:
  static constexpr std::size_t kDefaultCap = 2000000;

  // Breadth-first closure of the generator list. Throws NotInvertibleError if
  // a generator is singular, CapExceededError past cap.
  static std::shared_ptr<const MatrixGroup> close(const std::vector<MatrixOverF>& gens,
                                                  std::size_t cap = kDefaultCap);

  std::size_t size() const override { return elems_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const override;
  std::size_t inv(std::size_t a) const override { return inverse_[a]; }
  std::size_t id() const override { return 0; }
  const std::vector<std::size_t>& generators() const override { return gen_indices_; }
  std::string describe_element(std::size_t i) const override { return elems_[i].to_string(); }

  const Field& field() const { return field_; }
  std::size_t matrix_side() const { return n_; }
  const MatrixOverF& element(std::size_t i) const { return elems_[i]; }
  const std::vector<MatrixOverF>& elements() const { return elems_; }

  std::optional<std::size_t> index_of(const MatrixOverF& m) const;

  // Witness word (generator indices into the original generator list).
  std::vector<std::size_t> word_for(std::size_t i) const;

 private:
  MatrixGroup() = default;

  Field field_;
  std::size_t n_ = 0;
  std::vector<MatrixOverF> elems_;
  std::vector<std::size_t> inverse_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> gen_indices_;
  // witness words, stored as parent links: elems_[i] = elems_[from_[i]] * gen(via_[i])
  std::vector<std::size_t> from_, via_;
};

// A subgroup re-indexed as a group of its own. Local indices are ascending in
// the parent's indices, so local order is deterministic.
class SubgroupView : public GroupView {
 public:
  SubgroupView(GroupPtr parent, Subset sub);

  std::size_t size() const override { return sub_.elems.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    return local_of(parent_->mul(sub_.elems[a], sub_.elems[b]));
  }
  std::size_t inv(std::size_t a) const override { return local_of(parent_->inv(sub_.elems[a])); }
  std::size_t id() const override { return id_; }
  const std::vector<std::size_t>& generators() const override { return gens_; }
  std::string describe_element(std::size_t i) const override {
    return parent_->describe_element(sub_.elems[i]);
  }

  const GroupPtr& parent() const { return parent_; }
  const Subset& subset() const { return sub_; }
  std::size_t to_parent(std::size_t local) const { return sub_.elems[local]; }

 private:
  std::size_t local_of(std::size_t parent_idx) const;

  GroupPtr parent_;
  Subset sub_;
  std::vector<std::size_t> local_;  // parent index -> local index + 1 (0 = absent)
  std::vector<std::size_t> gens_;
  std::size_t id_ = 0;
};

// Incremental subgroup closure: add_generator() re-closes under the enlarged
// generating set. Finite groups make inverses free (positive words suffice).
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const GroupView& view);
  void add_generator(std::size_t g);
  void add_all(const std::vector<std::size_t>& gs);
  const std::vector<std::size_t>& elems() const { return elems_; }
  bool contains(std::size_t i) const { return mask_[i]; }
  const std::vector<std::size_t>& essential_generators() const { return gens_; }
  Subset take(const GroupView& view) const;

 private:
  const GroupView& view_;
  std::vector<std::size_t> elems_;  // discovery order
  std::vector<char> mask_;
  std::vector<std::size_t> gens_;
};

// Subgroup generated by the seeds (always contains the identity).
Subset generated_subgroup(const GroupView& view, const std::vector<std::size_t>& seeds);

// Greedy small generating sequence for a subgroup (deterministic).
std::vector<std::size_t> small_generating_set(const GroupView& view, const Subset& sub);

// Orders of all elements, sharing work along cyclic subgroups.
std::vector<std::uint64_t> element_orders(const GroupView& view);
std::uint64_t element_order(const GroupView& view, std::size_t x);

// Conjugacy classes, each sorted ascending, listed by their minimal element.
std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupView& view);

bool is_abelian_subset(const GroupView& view, const Subset& sub);
bool is_normal_subset(const GroupView& view, const Subset& sub);

// Exact multiset of element orders, as order -> multiplicity.
std::vector<std::pair<std::uint64_t, std::size_t>> order_spectrum(const GroupView& view);

}  // namespace jordanlab
