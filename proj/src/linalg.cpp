#include "edgeideal/linalg.hpp"

#include <limits>
#include <utility>

#include "edgeideal/errors.hpp"

namespace edgeideal {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

long long checked_narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw LimitError("integer overflow during exact elimination");
  }
  return static_cast<long long>(v);
}

long long mod_norm(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

// Inverse of a modulo prime p, via extended Euclid.
long long mod_inverse(long long a, long long p) {
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_norm(t, p);
}

}  // namespace

int rank_char0(IntMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  int rank = 0;
  int row = 0;
  long long prev_pivot = 1;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = col; c < cols; ++c) {
        std::swap(m.at(row, c), m.at(pivot, c));
      }
    }
    const long long piv = m.at(row, col);
    for (int r = row + 1; r < rows; ++r) {
      const long long factor = m.at(r, col);
      for (int c = col + 1; c < cols; ++c) {
        __int128 num = static_cast<__int128>(piv) * m.at(r, c) -
                       static_cast<__int128>(factor) * m.at(row, c);
        // Bareiss: the previous pivot divides exactly.
        m.at(r, c) = checked_narrow(num / prev_pivot);
      }
      m.at(r, col) = 0;
    }
    prev_pivot = piv;
    ++row;
    ++rank;
  }
  return rank;
}

int rank_mod_p(IntMatrix m, long long p) {
  if (!is_prime(p)) {
    throw ValidationError("field characteristic must be 0 or a prime");
  }
  if (p >= (1LL << 31)) {
    // Keeps products of two reduced entries inside 64 bits.
    throw ValidationError("field characteristic too large (must be < 2^31)");
  }
  const int rows = m.rows();
  const int cols = m.cols();
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = mod_norm(m.at(r, c), p);
    }
  }
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = col; c < cols; ++c) {
        std::swap(m.at(row, c), m.at(pivot, c));
      }
    }
    const long long inv = mod_inverse(m.at(row, col), p);
    for (int r = row + 1; r < rows; ++r) {
      if (m.at(r, col) == 0) continue;
      const long long factor = mod_norm(m.at(r, col) * inv % p, p);
      for (int c = col; c < cols; ++c) {
        long long delta = factor * m.at(row, c) % p;
        m.at(r, c) = mod_norm(m.at(r, c) - delta, p);
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

int exact_rank(IntMatrix m, long long field_char) {
  if (field_char == 0) return rank_char0(std::move(m));
  return rank_mod_p(std::move(m), field_char);
}

}  // namespace edgeideal
