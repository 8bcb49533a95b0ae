#include <algorithm>

#include "folw/model/model.hpp"

namespace folw::model {

namespace {

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

FreeVariableError::FreeVariableError(std::vector<std::string> names)
    : Error("free variables: " + join_names(names)), names_(std::move(names)) {}

Interpretation::Interpretation(int size) : size_(size) {
  if (size < 1) throw Error("domain size must be at least 1");
  cells_.assign(static_cast<std::size_t>(size * size), 0);
}

Interpretation Interpretation::from_index(int size, std::uint64_t index) {
  Interpretation m(size);
  const std::size_t cells = m.cells_.size();
  for (std::size_t k = 0; k < cells; ++k) m.cells_[k] = static_cast<std::uint8_t>((index >> (cells - 1 - k)) & 1);
  return m;
}

std::uint64_t Interpretation::index() const {
  std::uint64_t index = 0;
  for (auto c : cells_) index = (index << 1) | c;
  return index;
}

std::size_t Interpretation::cell(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) throw Error("element out of range");
  return static_cast<std::size_t>(i * size_ + j);
}

std::string Interpretation::dump() const {
  std::string out;
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) out += member(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace folw::model
