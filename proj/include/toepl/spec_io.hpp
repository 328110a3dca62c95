#pragma once

#include <string>
#include <variant>

#include "toepl/coding.hpp"

namespace toepl {

using AnySpec = std::variant<CodingSpec, SturmianSpec>;

// Parses a spec file. Coding specs carry {alphabet, a, n, r?, tail?},
// Sturmian specs {cf, tail?}; see the README for the exact schema.
// Violations raise SpecError with the offending field in the message.
AnySpec load_spec_file(const std::string& path);
AnySpec parse_spec_json(const std::string& text, const std::string& origin = "<string>");

std::string describe_spec(const AnySpec& spec);

}  // namespace toepl
