#pragma once

#include <optional>
#include <string>

#include "fmr/factor_system.hpp"

namespace fmr {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A factor-system file: the certified system plus the declared s for
/// binary/coboundary generators (absent for explicit tables unless the
/// file names one).
struct SystemFile {
    FactorSystem sys;
    std::optional<Int> s;
};

/// File schema:
///   {"ring": {"kind": "modular", "m": 4} | {"kind": "integers"},
///    "n": 2,
///    "factors": {"type": "explicit", "table": [[[...]]]}      // table[i][j][k] = s_(i+1,j+1,k+1)
///            | {"type": "binary", "s": 2, "classes": [1, 2]}  // classes[i] = label of index i+1
///            | {"type": "coboundary", "s": 2, "g": [[0,1],[0,0]]}}
/// JSON arrays are 0-based; the in-memory API is 1-based.
SystemFile load_system(const std::string& path);
SystemFile parse_system(const std::string& json_text);

/// Like parse_system, but a well-formed explicit table that fails the
/// factor-system relations comes back as the Violation instead of a
/// ParseError; ParseError is reserved for malformed files.
std::variant<SystemFile, Violation> parse_system_checked(const std::string& json_text);
std::variant<SystemFile, Violation> load_system_checked(const std::string& path);

std::string system_to_json(const FactorSystem& sys, std::optional<Int> s = std::nullopt);
void save_system(const std::string& path, const FactorSystem& sys,
                 std::optional<Int> s = std::nullopt);

BaseRing parse_ring_descriptor(const std::string& text);  // "mod:8", "int", "Z"

}  // namespace fmr
