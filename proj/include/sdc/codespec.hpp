#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sdc/algebra.hpp"

namespace sdc {

// One [code NAME] section of a spec file: key = value lines.
struct CodeSpec {
    std::string name;
    Ring ring = Ring::F2;
    std::string construction;  // four_circulant | matrix | lift | extension
    std::map<std::string, std::string> fields;
    size_t line = 0;  // section start, for diagnostics
};

std::vector<CodeSpec> parse_spec_file(std::istream& in);
std::string format_spec(const CodeSpec& s);

// Looks up a base code by name; may recurse into the same file's earlier
// sections or a built-in registry. Names may be wrapped: psi(NAME),
// phi(NAME), mu(NAME) apply the corresponding map to the resolved code.
using Resolver = std::function<RingCode(const std::string&)>;

RingCode build_from_spec(const CodeSpec& s, const Resolver& resolve_base);

// Inverse: a spec that rebuilds the given code (requires full provenance).
CodeSpec spec_of(const RingCode& c);

// Applies psi(...) / phi(...) / mu(...) wrappers around a plain-name
// resolver.
RingCode resolve_wrapped(const std::string& name, const Resolver& plain);

}  // namespace sdc
