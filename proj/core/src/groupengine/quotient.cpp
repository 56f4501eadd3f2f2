#include "jordanlab/groupengine/quotient.hpp"

#include <algorithm>

namespace jordanlab {

QuotientView::QuotientView(GroupPtr parent, Subset normal_sub)
    : parent_(std::move(parent)), kernel_(std::move(normal_sub)) {
  if (!is_normal_subset(*parent_, kernel_)) {
    throw NotNormalError("quotient: subgroup is not normal");
  }
  const std::size_t n = parent_->size();
  coset_of_.assign(n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of_[x] != SIZE_MAX) continue;
    std::size_t c = reps_.size();
    reps_.push_back(x);  // x is minimal in its coset: earlier members were assigned
    for (std::size_t h : kernel_.elems) coset_of_[parent_->mul(x, h)] = c;
  }
  id_ = coset_of_[parent_->id()];
  for (std::size_t g : parent_->generators()) {
    std::size_t img = coset_of_[g];
    if (img != id_ && std::find(gens_.begin(), gens_.end(), img) == gens_.end()) gens_.push_back(img);
  }
  if (gens_.empty()) gens_.push_back(id_);
  // |Q| * |N| = |G| and the projection is multiplicative on generator pairs
  if (reps_.size() * kernel_.elems.size() != n) {
    throw Error("quotient: coset partition has the wrong size");
  }
  for (std::size_t a : parent_->generators()) {
    for (std::size_t b : parent_->generators()) {
      if (coset_of_[parent_->mul(a, b)] != mul(coset_of_[a], coset_of_[b])) {
        throw Error("quotient: projection is not a homomorphism");
      }
    }
  }
}

Subset QuotientView::preimage(const Subset& sub) const {
  std::vector<std::size_t> elems;
  elems.reserve(sub.elems.size() * kernel_.elems.size());
  for (std::size_t c : sub.elems) {
    std::size_t rep = reps_[c];
    for (std::size_t h : kernel_.elems) elems.push_back(parent_->mul(rep, h));
  }
  return Subset::of(*parent_, std::move(elems));
}

std::shared_ptr<const QuotientView> quotient(GroupPtr parent, const Subset& normal_sub) {
  return std::make_shared<QuotientView>(std::move(parent), normal_sub);
}

}  // namespace jordanlab
