#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ria/core/errors.hpp"

namespace ria::setcover {

// Elements are numbered 1..n; sets are 0-based indices into the family.
using Element = std::uint32_t;
using SetId = std::size_t;

struct ElementRef {
  std::size_t round = 0;
  Element element = 0;
};

struct SetCoverInstance {
  std::size_t n = 1;
  std::vector<std::vector<Element>> family;
  std::vector<Element> sequence;
  std::string name = "setcover";

  std::size_t size() const noexcept { return sequence.size(); }
  ElementRef request(std::size_t i) const { return {i, sequence[i]}; }
  std::size_t sets() const noexcept { return family.size(); }

  void validate() const {
    if (n < 1) throw InvalidInstance("setcover: empty universe");
    if (family.empty()) throw InvalidInstance("setcover: empty family");
    std::vector<char> covered(n + 1, 0);
    for (std::size_t s = 0; s < family.size(); ++s) {
      if (family[s].empty()) throw InvalidInstance("setcover: set " + std::to_string(s) + " is empty");
      for (Element e : family[s]) {
        if (e < 1 || e > n) {
          throw InvalidInstance("setcover: element " + std::to_string(e) + " outside [1, n]");
        }
        covered[e] = 1;
      }
    }
    for (Element e = 1; e <= n; ++e) {
      if (!covered[e]) throw InvalidInstance("setcover: element " + std::to_string(e) + " is in no set");
    }
    for (Element e : sequence) {
      if (e < 1 || e > n) {
        throw InvalidInstance("setcover: request " + std::to_string(e) + " outside [1, n]");
      }
    }
  }
};

inline const char* problem_name(const SetCoverInstance&) { return "setcover"; }

// Family indexed by element: F(e) lists the sets containing e in increasing
// index order. Built once per instance and shared by every run on it.
class SetSystem {
 public:
  static std::shared_ptr<const SetSystem> build(const SetCoverInstance& inst) {
    inst.validate();
    auto sys = std::make_shared<SetSystem>();
    sys->n_ = inst.n;
    sys->family_ = inst.family;
    sys->covering_.assign(inst.n + 1, {});
    for (SetId s = 0; s < inst.family.size(); ++s) {
      auto& members = sys->family_[s];
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      for (Element e : members) sys->covering_[e].push_back(s);
    }
    return sys;
  }

  std::size_t universe() const noexcept { return n_; }
  std::size_t sets() const noexcept { return family_.size(); }
  const std::vector<Element>& members(SetId s) const { return family_[s]; }

  const std::vector<SetId>& covering(Element e) const {
    if (e < 1 || e > n_) throw InvalidInstance("setcover: element " + std::to_string(e) + " outside [1, n]");
    if (covering_[e].empty()) {
      throw InvalidInstance("setcover: element " + std::to_string(e) + " is in no set");
    }
    return covering_[e];
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Element>> family_;
  std::vector<std::vector<SetId>> covering_;
};

// Maximum |F(e)| over the elements that actually arrive.
inline std::size_t element_degree(const SetCoverInstance& inst) {
  std::vector<std::size_t> deg(inst.n + 1, 0);
  for (const auto& set : inst.family) {
    for (Element e : set) {
      if (e >= 1 && e <= inst.n) ++deg[e];
    }
  }
  std::size_t d = 0;
  for (Element e : inst.sequence) d = std::max(d, deg[e]);
  return std::max<std::size_t>(d, 1);
}

// Distinct arrived elements, ascending.
inline std::vector<Element> arrived_elements(const SetCoverInstance& inst) {
  std::vector<Element> out = inst.sequence;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ria::setcover
