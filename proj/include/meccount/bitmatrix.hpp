#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace meccount {

// rows x cols bits, row-major, 64-bit words
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c) { data_[r * wpr_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void clear(std::size_t r, std::size_t c) { data_[r * wpr_ + c / 64] &= ~(std::uint64_t{1} << (c % 64)); }

  std::uint64_t* row(std::size_t r) { return data_.data() + r * wpr_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * wpr_; }

  // dst row |= src row of `other` (same width); returns true if dst changed
  bool or_row(std::size_t r, const BitMatrix& other, std::size_t src);
  bool row_empty(std::size_t r) const;
  std::size_t row_count(std::size_t r) const;
  std::size_t count() const;

  template <typename F>
  void for_each_in_row(std::size_t r, F&& f) const {
    const std::uint64_t* w = row(r);
    for (std::size_t k = 0; k < wpr_; ++k) {
      std::uint64_t x = w[k];
      while (x) {
        f(k * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace meccount
