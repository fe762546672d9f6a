#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edgeideal {

// An ordered set of variable names.  The order is the canonical variable
// order used everywhere else (exponent vectors, lexicographic comparisons,
// printing).  Immutable once constructed; shared between ideals via
// shared_ptr so that ambient-compatibility checks are cheap.
class VarSet {
 public:
  // Throws ValidationError on empty list, empty/duplicate names, or names
  // that do not match [A-Za-z_][A-Za-z0-9_]*.
  explicit VarSet(std::vector<std::string> names);

  static std::shared_ptr<const VarSet> make(std::vector<std::string> names);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<int> find(std::string_view name) const;

  bool operator==(const VarSet& other) const noexcept {
    return names_ == other.names_;
  }

  // True iff `name` is usable as a variable identifier.
  static bool valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// True if both ideals/objects live in literally the same ordered name list.
inline bool same_ambient(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace edgeideal
