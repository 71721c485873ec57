#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homcover::cli {

// Exit codes: 0 success, 1 negative verdict, 2 usage, parse or domain error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace homcover::cli
