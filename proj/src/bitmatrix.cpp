#include "meccount/bitmatrix.hpp"

#include <bit>

namespace meccount {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

bool BitMatrix::or_row(std::size_t r, const BitMatrix& other, std::size_t src) {
  std::uint64_t* d = row(r);
  const std::uint64_t* s = other.row(src);
  bool changed = false;
  for (std::size_t k = 0; k < wpr_; ++k) {
    std::uint64_t nv = d[k] | s[k];
    changed |= nv != d[k];
    d[k] = nv;
  }
  return changed;
}

bool BitMatrix::row_empty(std::size_t r) const {
  const std::uint64_t* w = row(r);
  for (std::size_t k = 0; k < wpr_; ++k)
    if (w[k]) return false;
  return true;
}

std::size_t BitMatrix::row_count(std::size_t r) const {
  std::size_t c = 0;
  const std::uint64_t* w = row(r);
  for (std::size_t k = 0; k < wpr_; ++k) c += std::popcount(w[k]);
  return c;
}

std::size_t BitMatrix::count() const {
  std::size_t c = 0;
  for (auto w : data_) c += std::popcount(w);
  return c;
}

}  // namespace meccount
