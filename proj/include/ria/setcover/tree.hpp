#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ria/setcover/instance.hpp"
#include "ria/setcover/rand_sc.hpp"

namespace ria::setcover {

// Complete binary trees of depth D, one per phase, over disjoint universes.
// Inside a tree, node v (heap numbering, root 1, children 2v and 2v + 1) is
// element offset + v, and set i is the root-to-leaf path ending at leaf
// 2^D + i. Every element of depth t lies in 2^(D - t) sets; d = 2^D.
struct TreeShape {
  std::size_t depth = 0;
  std::size_t phases = 1;

  std::size_t leaves() const noexcept { return std::size_t{1} << depth; }
  std::size_t nodes() const noexcept { return 2 * leaves() - 1; }
  std::size_t universe() const noexcept { return phases * nodes(); }

  Element element(std::size_t phase, std::size_t node) const {
    return static_cast<Element>(phase * nodes() + node);
  }
  SetId set(std::size_t phase, std::size_t leaf_index) const { return phase * leaves() + leaf_index; }
};

inline SetCoverInstance tree_instance(std::size_t depth, std::size_t phases = 1) {
  if (phases < 1) throw std::invalid_argument("tree instance needs at least one phase");
  if (depth > 20) throw std::invalid_argument("tree depth too large");
  const TreeShape shape{depth, phases};
  SetCoverInstance inst;
  inst.n = shape.universe();
  inst.name = "sc-tree-D" + std::to_string(depth) + "-P" + std::to_string(phases);
  inst.family.reserve(phases * shape.leaves());
  for (std::size_t p = 0; p < phases; ++p) {
    for (std::size_t i = 0; i < shape.leaves(); ++i) {
      std::vector<Element> path;
      for (std::size_t v = shape.leaves() + i; v >= 1; v /= 2) path.push_back(shape.element(p, v));
      std::reverse(path.begin(), path.end());
      inst.family.push_back(std::move(path));
    }
  }
  return inst;
}

// Which distribution the adversary reads the probability mass from.
enum class MassMode {
  kUnadvised,  // the rounding alone (alpha = 0)
  kMixed,      // alpha-mixture with the boost oracle
};

struct TreeAdversaryOptions {
  MassMode mode = MassMode::kUnadvised;
  double alpha = 0.0;
  double c = 3.0;
};

// Descends each tree from the root, requesting at every step the child whose
// covering sets carry at least as much selection mass as its sibling's (ties
// go left). Masses are exact marginals of the rounding with deterministic
// gating, so the sequence never depends on realized coins. In kMixed mode the
// advised cover is the lexicographically smallest optimal cover of the
// prefix: the leftmost leaf under the current node.
inline SetCoverInstance phased_tree_adversary(std::size_t depth, std::size_t phases,
                                              TreeAdversaryOptions opts = {}) {
  SetCoverInstance inst = tree_instance(depth, phases);
  const TreeShape shape{depth, phases};
  RandSc shadow(SetSystem::build(inst), RandScOptions{opts.c, false, Gate::kFractional});
  const double alpha = opts.mode == MassMode::kMixed ? opts.alpha : 0.0;

  auto emit = [&](std::size_t p, std::size_t v) {
    const ElementRef r{inst.sequence.size(), shape.element(p, v)};
    inst.sequence.push_back(r.element);
    shadow.commit(r, shadow.domain(r), ScAnswer{});
  };
  // Sets covering node v of phase p are the leaves of its subtree.
  auto mass = [&](std::size_t p, std::size_t v, SetId advised) {
    std::size_t lo = v, hi = v;
    while (lo < shape.leaves()) {
      lo = 2 * lo;
      hi = 2 * hi + 1;
    }
    double m = 0.0;
    for (std::size_t leaf = lo; leaf <= hi; ++leaf) {
      const SetId s = shape.set(p, leaf - shape.leaves());
      m += marginal_inclusion(shadow.log(), s, alpha, s == advised);
    }
    return m;
  };

  for (std::size_t p = 0; p < phases; ++p) {
    std::size_t v = 1;
    emit(p, v);
    while (v < shape.leaves()) {
      std::size_t leftmost = v;
      while (leftmost < shape.leaves()) leftmost *= 2;
      const SetId advised = shape.set(p, leftmost - shape.leaves());
      const double left = mass(p, 2 * v, advised);
      const double right = mass(p, 2 * v + 1, advised);
      v = right > left ? 2 * v + 1 : 2 * v;
      emit(p, v);
    }
  }
  inst.name = "sc-tree-adversary-D" + std::to_string(depth) + "-P" + std::to_string(phases);
  return inst;
}

inline SetCoverInstance tree_adversary(std::size_t depth, TreeAdversaryOptions opts = {}) {
  return phased_tree_adversary(depth, 1, opts);
}

}  // namespace ria::setcover
