#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hitchin2/rational.hpp"

namespace hitchin2 {

// Ordered set of variable names. The order is fixed at construction and
// drives the canonical (graded lexicographic) monomial order everywhere.
class VarUniverse {
 public:
  explicit VarUniverse(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
      auto [it, fresh] = index_.emplace(names_[i], i);
      if (!fresh) throw universe_error("duplicate variable name '" + names_[i] + "'");
    }
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool contains(const std::string& v) const { return index_.count(v) != 0; }

  size_t index_of(const std::string& v) const {
    auto it = index_.find(v);
    if (it == index_.end())
      throw universe_error("unknown variable '" + v + "'");
    return it->second;
  }

  bool operator==(const VarUniverse& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, size_t> index_;
};

using UniversePtr = std::shared_ptr<const VarUniverse>;

inline UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<const VarUniverse>(std::move(names));
}

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

inline void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) throw universe_error("variable universe mismatch");
}

}  // namespace hitchin2
