#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "metacode/group.hpp"

namespace metacode {

// exit codes
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitClaimFailed = 2;

// {"N":..,"M":..,"r":..,"s":..,"name":..}, {"named":"D:14"} or
// {"product":[spec, spec], "coprime": true}. Throws SchemaError or
// InconsistentPresentation.
Group group_from_json_text(const std::string& text);
Group load_spec(const std::string& path);

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metacode
