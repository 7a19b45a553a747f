// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conelift {

// Ordered list of distinct variable names. The order is fixed for the
// lifetime of every value that references the set.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("variable set must be nonempty");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }

  // prefix1, prefix2, ..., prefixN
  static VarSet numbered(const std::string& prefix, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return VarSet(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  VarSet extended(std::string name) const {
    std::vector<std::string> names = names_;
    names.push_back(std::move(name));
    return VarSet(std::move(names));
  }

  // First of stem, stem_, stem__, ... not already taken.
  std::string fresh_name(std::string stem) const {
    while (contains(stem)) stem += "_";
    return stem;
  }

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace conelift
