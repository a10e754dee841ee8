#pragma once

// Path helpers for the C API test binary, which deliberately links the
// shared library alone and therefore cannot use the core's helpers.

#include <fstream>
#include <sstream>
#include <string>

namespace selfie::test {

inline std::string data_path(const std::string& name) {
  return std::string(SELFIE_TEST_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace selfie::test
