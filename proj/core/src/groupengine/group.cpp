#include "jordanlab/groupengine/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace jordanlab {

Subset Subset::of(const GroupView& view, std::vector<std::size_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subset s;
  s.mask.assign(view.size(), 0);
  for (std::size_t i : elems) s.mask[i] = 1;
  s.elems = std::move(elems);
  return s;
}

std::shared_ptr<const MatrixGroup> MatrixGroup::close(const std::vector<MatrixOverF>& gens,
                                                      std::size_t cap) {
  if (gens.empty()) throw BadInputError("close: at least one generator required");
  const Field f = gens[0].field();
  const std::size_t n = gens[0].side();
  for (const auto& g : gens) {
    if (!g.field().same_as(f) || g.side() != n) {
      throw BadInputError("close: generators must share one field and size");
    }
    if (g.det() == 0) throw NotInvertibleError("close: singular generator");
  }
  auto grp = std::shared_ptr<MatrixGroup>(new MatrixGroup());
  grp->field_ = f;
  grp->n_ = n;

  auto push = [&grp](const MatrixOverF& m, std::size_t from, std::size_t via) -> std::size_t {
    std::string key = m.canonical_bytes();
    auto it = grp->index_.find(key);
    if (it != grp->index_.end()) return it->second;
    std::size_t idx = grp->elems_.size();
    grp->elems_.push_back(m);
    grp->index_.emplace(std::move(key), idx);
    grp->from_.push_back(from);
    grp->via_.push_back(via);
    return idx;
  };

  push(MatrixOverF::identity(f, n), 0, SIZE_MAX);
  for (std::size_t qi = 0; qi < grp->elems_.size(); ++qi) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      MatrixOverF prod = grp->elems_[qi] * gens[gi];
      std::size_t before = grp->elems_.size();
      std::size_t idx = push(prod, qi, gi);
      if (idx == before && grp->elems_.size() > cap) {
        throw CapExceededError("close: group order exceeds cap " + std::to_string(cap));
      }
    }
  }

  grp->gen_indices_.clear();
  for (const auto& g : gens) {
    std::size_t idx = grp->index_.at(g.canonical_bytes());
    if (idx != 0 && std::find(grp->gen_indices_.begin(), grp->gen_indices_.end(), idx) ==
                        grp->gen_indices_.end()) {
      grp->gen_indices_.push_back(idx);
    }
  }
  if (grp->gen_indices_.empty()) grp->gen_indices_.push_back(0);  // trivial group

  grp->inverse_.resize(grp->elems_.size());
  for (std::size_t i = 0; i < grp->elems_.size(); ++i) {
    grp->inverse_[i] = grp->index_.at(grp->elems_[i].inverse().canonical_bytes());
  }
  return grp;
}

std::size_t MatrixGroup::mul(std::size_t a, std::size_t b) const {
  return index_.at((elems_[a] * elems_[b]).canonical_bytes());
}

std::optional<std::size_t> MatrixGroup::index_of(const MatrixOverF& m) const {
  auto it = index_.find(m.canonical_bytes());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> MatrixGroup::word_for(std::size_t i) const {
  std::vector<std::size_t> word;
  while (i != 0) {
    word.push_back(via_[i]);
    i = from_[i];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

SubgroupView::SubgroupView(GroupPtr parent, Subset sub) : parent_(std::move(parent)), sub_(std::move(sub)) {
  local_.assign(parent_->size(), 0);
  for (std::size_t i = 0; i < sub_.elems.size(); ++i) local_[sub_.elems[i]] = i + 1;
  std::size_t pid = parent_->id();
  if (!sub_.contains(pid)) throw BadInputError("subgroup view must contain the identity");
  id_ = local_of(pid);
  for (std::size_t g : small_generating_set(*parent_, sub_)) gens_.push_back(local_of(g));
  if (gens_.empty()) gens_.push_back(id_);
}

std::size_t SubgroupView::local_of(std::size_t parent_idx) const {
  std::size_t v = local_[parent_idx];
  if (v == 0) throw BadInputError("subgroup view: product left the subset (not a subgroup?)");
  return v - 1;
}

ClosureBuilder::ClosureBuilder(const GroupView& view) : view_(view) {
  mask_.assign(view.size(), 0);
  std::size_t e = view.id();
  mask_[e] = 1;
  elems_.push_back(e);
}

void ClosureBuilder::add_generator(std::size_t g) {
  if (mask_[g]) return;
  gens_.push_back(g);
  mask_[g] = 1;
  elems_.push_back(g);
  // re-run BFS over every element with the enlarged generating set
  for (std::size_t qi = 0; qi < elems_.size(); ++qi) {
    for (std::size_t gen : gens_) {
      std::size_t p = view_.mul(elems_[qi], gen);
      if (!mask_[p]) {
        mask_[p] = 1;
        elems_.push_back(p);
      }
    }
  }
}

void ClosureBuilder::add_all(const std::vector<std::size_t>& gs) {
  for (std::size_t g : gs) add_generator(g);
}

Subset ClosureBuilder::take(const GroupView& view) const { return Subset::of(view, elems_); }

Subset generated_subgroup(const GroupView& view, const std::vector<std::size_t>& seeds) {
  ClosureBuilder cb(view);
  cb.add_all(seeds);
  return cb.take(view);
}

std::vector<std::size_t> small_generating_set(const GroupView& view, const Subset& sub) {
  ClosureBuilder cb(view);
  std::vector<std::size_t> gens;
  for (std::size_t e : sub.elems) {
    if (!cb.contains(e)) {
      cb.add_generator(e);
      gens.push_back(e);
      if (cb.elems().size() == sub.elems.size()) break;
    }
  }
  return gens;
}

std::vector<std::uint64_t> element_orders(const GroupView& view) {
  const std::size_t n = view.size();
  std::vector<std::uint64_t> ord(n, 0);
  ord[view.id()] = 1;
  std::vector<std::size_t> cycle;
  for (std::size_t x = 0; x < n; ++x) {
    if (ord[x] != 0) continue;
    cycle.clear();
    std::size_t cur = x;
    while (cur != view.id()) {
      cycle.push_back(cur);
      cur = view.mul(cur, x);
    }
    std::uint64_t m = cycle.size() + 1;  // order of x
    for (std::size_t k = 1; k <= cycle.size(); ++k) {
      std::size_t el = cycle[k - 1];  // el = x^k
      if (ord[el] == 0) ord[el] = m / std::gcd<std::uint64_t>(m, k);
    }
  }
  return ord;
}

std::uint64_t element_order(const GroupView& view, std::size_t x) {
  std::uint64_t n = 1;
  std::size_t cur = x;
  while (cur != view.id()) {
    cur = view.mul(cur, x);
    ++n;
  }
  return n;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupView& view) {
  const std::size_t n = view.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> orbit{x};
    seen[x] = 1;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (std::size_t g : view.generators()) {
        std::size_t y = view.conj(g, orbit[qi]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

bool is_abelian_subset(const GroupView& view, const Subset& sub) {
  std::vector<std::size_t> gens = small_generating_set(view, sub);
  for (std::size_t a : gens) {
    for (std::size_t b : gens) {
      if (view.mul(a, b) != view.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_normal_subset(const GroupView& view, const Subset& sub) {
  std::vector<std::size_t> gens = small_generating_set(view, sub);
  for (std::size_t g : view.generators()) {
    for (std::size_t x : gens) {
      if (!sub.contains(view.conj(g, x))) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::size_t>> order_spectrum(const GroupView& view) {
  std::vector<std::uint64_t> ord = element_orders(view);
  std::map<std::uint64_t, std::size_t> hist;
  for (std::uint64_t o : ord) hist[o]++;
  return {hist.begin(), hist.end()};
}

}  // namespace jordanlab
