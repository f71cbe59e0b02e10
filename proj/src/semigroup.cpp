#include "affsg/semigroup.hpp"

#include <algorithm>
#include <set>

#include "affsg/errors.hpp"

namespace affsg {

namespace {

// Memo values: generator index subtracted on the witness path, or the
// sentinel below.
constexpr int kNotMember = -1;

} // namespace

struct AffineSemigroup::Cache {
  std::mutex mu;
  std::map<IntVec, int> memo;
};

AffineSemigroup::AffineSemigroup(std::size_t dim, std::vector<IntVec> gens)
    : dim_(dim),
      gens_(std::move(gens)),
      cone_(Cone::of(dim, gens_)),
      grading_(positive_functional(cone_)),
      cache_(std::make_shared<Cache>()) {
  if (dim_ == 0) throw input_error("semigroup: dimension must be positive");
  std::set<IntVec> seen;
  for (const IntVec& g : gens_) {
    if (g.size() != dim_)
      throw input_error("semigroup: generator dimension mismatch");
    if (vec_is_zero(g)) throw input_error("semigroup: zero generator");
    if (!vec_is_nonneg(g))
      throw input_error("semigroup: generator with negative entry");
    if (!seen.insert(g).second)
      throw input_error("semigroup: duplicate generator " + vec_str(g));
  }
}

MembershipResult AffineSemigroup::member(const IntVec& x) const {
  if (x.size() != dim_) throw input_error("member: dimension mismatch");
  MembershipResult res;
  if (!vec_is_nonneg(x)) return res;
  if (vec_is_zero(x)) {
    res.member = true;
    res.witness = IntVec(gens_.size(), 0);
    return res;
  }
  if (!cone_.contains(x)) return res;

  Int min_level = 0;
  for (const IntVec& g : gens_) {
    Int v = grading_value(g);
    if (min_level == 0 || v < min_level) min_level = v;
  }
  if (min_level == 0) return res; // no generators
  res.explored_levels = grading_value(x) / min_level;

  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& memo = cache_->memo;

  // Iterative depth-first search; each frame scans generators in order so
  // memoized answers never depend on query order.
  struct Frame {
    IntVec residual;
    std::size_t next_gen = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({x, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_gen == 0 && memo.count(f.residual)) {
      stack.pop_back();
      continue;
    }
    bool descended = false;
    int verdict = kNotMember;
    while (f.next_gen < gens_.size()) {
      const std::size_t i = f.next_gen;
      IntVec r = vec_sub(f.residual, gens_[i]);
      if (!vec_is_nonneg(r) || !cone_.contains(r)) {
        ++f.next_gen;
        continue;
      }
      if (vec_is_zero(r)) {
        verdict = static_cast<int>(i);
        break;
      }
      auto it = memo.find(r);
      if (it == memo.end()) {
        stack.push_back({std::move(r), 0});
        descended = true;
        break;
      }
      if (it->second != kNotMember) {
        verdict = static_cast<int>(i);
        break;
      }
      ++f.next_gen;
    }
    if (descended) continue;
    memo[f.residual] = verdict;
    stack.pop_back();
  }

  res.member = memo.at(x) != kNotMember;
  if (res.member) {
    IntVec witness(gens_.size(), 0);
    IntVec cur = x;
    while (!vec_is_zero(cur)) {
      int i = memo.at(cur);
      witness[static_cast<std::size_t>(i)] += 1;
      cur = vec_sub(cur, gens_[static_cast<std::size_t>(i)]);
    }
    res.witness = std::move(witness);
    res.explored_levels = 0;
  }
  return res;
}

std::vector<IntVec> AffineSemigroup::minimal_generators() const {
  std::vector<IntVec> mins = gens_;
  for (std::size_t i = 0; i < mins.size();) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < mins.size(); ++j)
      if (j != i) others.push_back(mins[j]);
    if (!others.empty() &&
        AffineSemigroup(dim_, others).contains(mins[i])) {
      mins.erase(mins.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return mins;
}

Lattice AffineSemigroup::group() const {
  return Lattice::from_generators(dim_, gens_);
}

bool AffineSemigroup::leq(const IntVec& x, const IntVec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw input_error("leq: dimension mismatch");
  return contains(vec_sub(y, x));
}

std::vector<IntVec> AffineSemigroup::maximals(
    const std::vector<IntVec>& f) const {
  std::vector<IntVec> elems = f;
  canonicalize(elems);
  std::vector<IntVec> out;
  for (const IntVec& m : elems) {
    bool maximal = true;
    for (const IntVec& g : elems) {
      if (g == m) continue;
      if (leq(m, g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

std::vector<IntVec> AffineSemigroup::enumerate_upto(const IntVec& box) const {
  if (box.size() != dim_) throw input_error("enumerate_upto: dimension mismatch");
  if (!vec_is_nonneg(box)) throw input_error("enumerate_upto: negative box");
  std::vector<IntVec> out;
  BoxIter it(box);
  IntVec x;
  while (it.next(x)) {
    if (contains(x)) out.push_back(x);
  }
  canonicalize(out);
  return out;
}

IntVec multiplicity_vector(const AffineSemigroup& s) {
  if (s.gens().empty())
    throw precondition_error("multiplicity: empty generator list");
  IntVec m = s.gens()[0];
  for (const IntVec& g : s.gens())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (g[i] < m[i]) m[i] = g[i];
  return m;
}

bool is_pi_monoid_core(const AffineSemigroup& s) {
  if (s.gens().empty()) return false;
  IntVec m = multiplicity_vector(s);
  if (vec_is_zero(m) || !s.contains(m)) return false;
  std::vector<IntVec> mins = s.minimal_generators();
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i; j < mins.size(); ++j) {
      IntVec x = vec_sub(vec_add(mins[i], mins[j]), m);
      if (!s.contains(x)) return false;
    }
  }
  return true;
}

BoxIter::BoxIter(const IntVec& box) : box_(box), cur_(box.size(), 0) {
  for (const Int& b : box_)
    if (b < 0) done_ = true;
}

bool BoxIter::next(IntVec& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    out = cur_;
    return true;
  }
  std::size_t i = 0;
  while (i < cur_.size()) {
    if (cur_[i] < box_[i]) {
      cur_[i] += 1;
      for (std::size_t j = 0; j < i; ++j) cur_[j] = 0;
      out = cur_;
      return true;
    }
    ++i;
  }
  done_ = true;
  return false;
}

} // namespace affsg
