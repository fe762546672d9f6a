#include "edgeideal/varset.hpp"

#include <cctype>
#include <utility>

#include "edgeideal/errors.hpp"

namespace edgeideal {

bool VarSet::valid_name(std::string_view name) {
  if (name.empty()) return false;
  unsigned char first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : name) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (!std::isalnum(uc) && uc != '_') return false;
  }
  return true;
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw ValidationError("variable set must contain at least one name");
  }
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    const std::string& n = names_[i];
    if (!valid_name(n)) {
      throw ValidationError("invalid variable name '" + n + "'");
    }
    auto [it, inserted] = index_.emplace(n, i);
    (void)it;
    if (!inserted) {
      throw ValidationError("duplicate variable name '" + n + "'");
    }
  }
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

std::optional<int> VarSet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace edgeideal
