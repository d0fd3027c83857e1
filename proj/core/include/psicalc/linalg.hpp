#pragma once

// Exact integer linear algebra. Ranks are computed over the rationals by
// fraction-free (division-exact) elimination on arbitrary-precision
// integers, or over a prime field by modular elimination. No floating
// point anywhere; results are deterministic.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace psicalc {

class IntMatrix {
 public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimensions");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  long long at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (long long v : data_)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<long long> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

bool is_prime(long long n);

// characteristic 0 computes the rational rank, a prime p the rank over
// F_p. Composite characteristics are rejected with std::domain_error.
int rank(const IntMatrix& m, long long characteristic);

void check_characteristic(long long characteristic);

}  // namespace psicalc
