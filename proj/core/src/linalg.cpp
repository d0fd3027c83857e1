#include "psicalc/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace psicalc {

using boost::multiprecision::cpp_int;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in multiply");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const long long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

void check_characteristic(long long characteristic) {
  if (characteristic == 0) return;
  if (characteristic > (1LL << 31))
    throw std::domain_error("characteristic too large");
  if (!is_prime(characteristic))
    throw std::domain_error("characteristic must be 0 or a prime, got " +
                            std::to_string(characteristic));
}

namespace {

// Fraction-free Gaussian elimination (Bareiss): every intermediate entry
// is a minor of the input, so divisions are exact.
int rank_rational(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  int row = 0;
  cpp_int prev = 1;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[row]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

int rank_mod_p(const IntMatrix& m, long long p) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = ((m.at(i, j) % p) + p) % p;

  auto inv_mod = [p](long long x) {
    long long result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[row]);
    const long long inv = inv_mod(a[row][col]);
    for (int j = col; j < cols; ++j) a[row][j] = a[row][j] * inv % p;
    for (int i = row + 1; i < rows; ++i) {
      const long long f = a[i][col];
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
    }
    ++row;
  }
  return row;
}

}  // namespace

int rank(const IntMatrix& m, long long characteristic) {
  check_characteristic(characteristic);
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (characteristic == 0) return rank_rational(m);
  return rank_mod_p(m, characteristic);
}

}  // namespace psicalc
