#include "phyloag/vars.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>

#include "phyloag/error.hpp"

namespace phyloag {

VarTable& VarTable::global() {
  static VarTable table;
  return table;
}

VarId VarTable::intern(std::string_view name) {
  {
    std::shared_lock lock(mutex_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
  }
  if (!is_valid_var_name(name)) {
    throw ValidationError("invalid variable name '" + std::string(name) + "'");
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = ids_.emplace(std::string(name), static_cast<VarId>(names_.size()));
  if (inserted) names_.emplace_back(name);
  return it->second;
}

std::optional<VarId> VarTable::find(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& VarTable::name(VarId id) const {
  std::shared_lock lock(mutex_);
  if (id >= names_.size()) throw std::out_of_range("unknown variable id");
  return names_[id];
}

std::size_t VarTable::size() const {
  std::shared_lock lock(mutex_);
  return names_.size();
}

bool is_valid_var_name(std::string_view name) {
  if (name.empty()) return false;
  auto ok_first = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto ok_rest = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  if (!ok_first(name.front())) return false;
  for (char c : name.substr(1)) {
    if (!ok_rest(c)) return false;
  }
  return true;
}

}  // namespace phyloag
