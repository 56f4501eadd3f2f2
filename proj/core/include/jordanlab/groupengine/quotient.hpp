#pragma once

#include "jordanlab/groupengine/group.hpp"

namespace jordanlab {

// Coset quotient G/N realized combinatorially: cosets are indexed by their
// minimal-index representative, the projection is a table, and the section
// picks that representative. The projection homomorphism property is checked
// on all generator pairs at construction.
class QuotientView : public GroupView {
 public:
  // Throws NotNormalError if sub is not normal in *parent.
  QuotientView(GroupPtr parent, Subset normal_sub);

  std::size_t size() const override { return reps_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    return coset_of_[parent_->mul(reps_[a], reps_[b])];
  }
  std::size_t inv(std::size_t a) const override { return coset_of_[parent_->inv(reps_[a])]; }
  std::size_t id() const override { return id_; }
  const std::vector<std::size_t>& generators() const override { return gens_; }
  std::string describe_element(std::size_t i) const override {
    return parent_->describe_element(reps_[i]) + "*N";
  }

  const GroupPtr& parent() const { return parent_; }
  const Subset& kernel() const { return kernel_; }

  std::size_t project(std::size_t parent_idx) const { return coset_of_[parent_idx]; }
  std::size_t section(std::size_t coset_idx) const { return reps_[coset_idx]; }

  // Union of the cosets in `sub` back in the parent.
  Subset preimage(const Subset& sub) const;

 private:
  GroupPtr parent_;
  Subset kernel_;
  std::vector<std::size_t> coset_of_;  // parent index -> coset index
  std::vector<std::size_t> reps_;      // coset index -> minimal parent representative
  std::vector<std::size_t> gens_;
  std::size_t id_ = 0;
};

std::shared_ptr<const QuotientView> quotient(GroupPtr parent, const Subset& normal_sub);

}  // namespace jordanlab
