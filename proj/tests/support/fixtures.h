#pragma once

#include <filesystem>
#include <string>

namespace tagnav::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(TAGNAV_FIXTURES) / name;
}

}  // namespace tagnav::testing
