#pragma once

#include <stdexcept>
#include <string>

#include "sgds/family.hpp"
#include "sgds/system.hpp"

namespace sgds {

/// Malformed input text (maps to CLI exit code 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// System file: lines `point <id>` and `map <src> <dst>`, `#` comments,
/// blank lines ignored. Every id must be declared by `point` before use;
/// each map source appears at most once.
SgdsMap parse_system(const std::string& text);
std::string serialize_system(const SgdsMap& sys);

/// Fiber file: lines `fiber <point> <set>` or `class <repr> <set>` (the
/// shorthand assigns the whole orbit class of <repr>). Set syntax is the
/// CircleSet grammar: full | empty | points t1 t2 ... | arcs a b , c d ...
/// Every point must end up assigned exactly once.
AdmissibleFamily parse_fibers(const SgdsMap& sys, const std::string& text);
std::string serialize_fibers(const SgdsMap& sys, const AdmissibleFamily& y);

std::string read_file(const std::string& path);

}  // namespace sgds
