#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace xrj {

// Command-line driver. Returns 0 on success, 1 when a requested check ran
// and failed, 2 on error (with a one-line JSON diagnostic on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xrj
