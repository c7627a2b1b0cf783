#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace bgnf {

using SymbolId = std::uint32_t;

/// Process-wide table of parameter symbols (f1, mu, a7, a7c, ...).
///
/// A name of the form `<letters><digits>c` is the complex conjugate of
/// `<letters><digits>`; interning either one links the pair both ways.
/// Every other symbol is real and is its own conjugate. The table is
/// append-only and safe to use from several threads.
namespace symbols {

SymbolId intern(std::string_view name);

/// Interns `name` and `name + "c"` as a conjugate pair; returns (name, conj).
std::pair<SymbolId, SymbolId> intern_complex(std::string_view name);

const std::string& name(SymbolId id);
SymbolId conjugate(SymbolId id);
bool is_valid_name(std::string_view name);

}  // namespace symbols
}  // namespace bgnf
