#include "bgnf/symbols.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "bgnf/error.hpp"

namespace bgnf::symbols {
namespace {

struct Entry {
  std::string name;
  SymbolId conjugate;
};

struct Table {
  std::shared_mutex mutex;
  std::deque<Entry> entries;  // stable references
  std::unordered_map<std::string, SymbolId> ids;
};

Table& table() {
  static Table t;
  return t;
}

// Splits "a7c" into "a7"; returns empty when the name is not a conjugate name.
std::string conjugate_base(std::string_view name) {
  if (name.size() < 3 || name.back() != 'c') return {};
  std::size_t end = name.size() - 1;
  std::size_t digits = end;
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(name[digits - 1]))) --digits;
  if (digits == end || digits == 0) return {};
  return std::string(name.substr(0, end));
}

SymbolId insert_locked(Table& t, const std::string& name) {
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  auto id = static_cast<SymbolId>(t.entries.size());
  t.entries.push_back({name, id});
  t.ids.emplace(name, id);
  return id;
}

}  // namespace

bool is_valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return name != "i";
}

std::pair<SymbolId, SymbolId> intern_complex(std::string_view base) {
  if (!is_valid_name(base)) throw argument_error("invalid parameter name '" + std::string(base) + "'");
  Table& t = table();
  std::unique_lock lock(t.mutex);
  SymbolId a = insert_locked(t, std::string(base));
  SymbolId b = insert_locked(t, std::string(base) + "c");
  t.entries[a].conjugate = b;
  t.entries[b].conjugate = a;
  return {a, b};
}

SymbolId intern(std::string_view name) {
  if (!is_valid_name(name)) throw argument_error("invalid parameter name '" + std::string(name) + "'");
  std::string base = conjugate_base(name);
  if (!base.empty()) return intern_complex(base).second;
  Table& t = table();
  {
    std::shared_lock lock(t.mutex);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return it->second;
  }
  std::unique_lock lock(t.mutex);
  return insert_locked(t, std::string(name));
}

const std::string& name(SymbolId id) {
  Table& t = table();
  std::shared_lock lock(t.mutex);
  return t.entries.at(id).name;
}

SymbolId conjugate(SymbolId id) {
  Table& t = table();
  std::shared_lock lock(t.mutex);
  return t.entries.at(id).conjugate;
}

}  // namespace bgnf::symbols
