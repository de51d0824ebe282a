#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace phyloag {

using VarId = std::uint32_t;

// Session-wide variable name table. Ids are handed out in registration
// order and never reused; the id order defines the polynomial term order.
// Reads may run concurrently, registrations are serialized.
class VarTable {
 public:
  static VarTable& global();

  VarId intern(std::string_view name);
  std::optional<VarId> find(std::string_view name) const;
  // Reference stays valid for the lifetime of the table.
  const std::string& name(VarId id) const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, VarId> ids_;
};

inline VarId var(std::string_view name) { return VarTable::global().intern(name); }
inline const std::string& var_name(VarId id) { return VarTable::global().name(id); }

// True for names usable in the polynomial text format: [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_var_name(std::string_view name);

}  // namespace phyloag
