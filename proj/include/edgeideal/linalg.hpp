#pragma once

#include <cstdint>
#include <vector>

namespace edgeideal {

// A dense integer matrix, row-major.  Only as big as homological strand
// differentials need; exactness matters more than speed here.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  long long& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  long long at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

 private:
  int rows_;
  int cols_;
  std::vector<long long> data_;
};

// True for primes; deterministic trial division (matrix entries and
// characteristics here are small).
bool is_prime(long long p);

// Rational rank via fraction-free (division-exact) integer elimination.
// Throws LimitError if an intermediate value leaves the 64-bit range.
int rank_char0(IntMatrix m);

// Rank over the prime field F_p.  Throws ValidationError if p is not prime.
int rank_mod_p(IntMatrix m, long long p);

// Dispatch on field characteristic: 0 -> rational, prime p -> F_p.
int exact_rank(IntMatrix m, long long field_char);

}  // namespace edgeideal
