#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2crystal/errors.hpp"

namespace g2crystal {

inline constexpr std::size_t kMaxVars = 16;

inline constexpr std::array<std::string_view, kMaxVars> kAllowedVarNames = {
    "x0", "x1", "x2", "x3", "x4", "x5", "y0", "y1",
    "y2", "y3", "y4", "y5", "c",  "c1", "c2", "t"};

/// Ordered, duplicate-free list of variable names. Polynomials store
/// exponent vectors positionally against one of these.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars) throw StructuralError("VarTable: too many variables");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (std::find(kAllowedVarNames.begin(), kAllowedVarNames.end(), n) == kAllowedVarNames.end()) {
        throw StructuralError("VarTable: unknown variable name '" + n + "'");
      }
      if (std::find(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(i), n) !=
          names_.begin() + static_cast<std::ptrdiff_t>(i)) {
        throw StructuralError("VarTable: duplicate variable '" + n + "'");
      }
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> index_of(std::string_view n) const {
    const auto it = std::find(names_.begin(), names_.end(), n);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::size_t require(std::string_view n) const {
    if (auto i = index_of(n)) return *i;
    throw StructuralError("VarTable: no variable '" + std::string(n) + "'");
  }

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_var_table(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_table(const VarTablePtr& a, const VarTablePtr& b, std::string_view op) {
  if (!same_table(a, b)) {
    throw StructuralError(std::string(op) + ": variable-table mismatch");
  }
}

}  // namespace g2crystal
