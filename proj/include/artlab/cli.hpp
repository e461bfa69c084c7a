#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "artlab/galmod.hpp"

namespace artlab {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInvalidInput = 2,
  kExitResourceLimit = 3,
};

/// Parse a module description file ({"name", "factors", "galois"}).
ModuleDescription load_module_description(const std::filesystem::path& path);
ModuleDescription parse_module_description(const std::string& text);

/// Full command line including the program name. Reports go to `out`,
/// diagnostics and usage text to `err`.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace artlab
