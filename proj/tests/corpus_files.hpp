#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace folw::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(FOLW_CORPUS_DIR) + "/" + name;
}

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + corpus_path(name));
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline constexpr const char* kScripts[] = {
    "russell-refuted.hil", "self-application.hil", "distinctness.hil",
    "russell-consistent.hil", "extensionality.hil",
};

}  // namespace folw::testing
