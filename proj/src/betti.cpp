#include "edgeideal/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "edgeideal/errors.hpp"
#include "edgeideal/linalg.hpp"

namespace edgeideal {

long long BettiTable::pd() const {
  if (entries.empty()) {
    throw ZeroIdealError("resolution invariants of the zero ideal are undefined");
  }
  long long best = 0;
  for (const auto& [key, count] : entries) {
    (void)count;
    best = std::max(best, key.first);
  }
  return best;
}

long long BettiTable::reg() const {
  if (entries.empty()) {
    throw ZeroIdealError("resolution invariants of the zero ideal are undefined");
  }
  long long best = std::numeric_limits<long long>::min();
  for (const auto& [key, count] : entries) {
    (void)count;
    best = std::max(best, key.second - key.first);
  }
  return best;
}

long long BettiTable::depth() const { return nvars - pd(); }

Invariants invariants_from_table(const BettiTable& table) {
  return Invariants{table.pd(), table.reg(), table.depth()};
}

namespace {

// All data of one multidegree strand: the subset masks sharing an exact lcm,
// bucketed by cardinality.
struct Strand {
  long long degree = 0;
  // level[c] = masks of popcount c present in the strand, ascending.
  std::map<int, std::vector<std::uint32_t>> levels;
};

int rank_of_differential(const std::vector<std::uint32_t>& upper,
                         const std::vector<std::uint32_t>& lower,
                         long long field_char) {
  if (upper.empty() || lower.empty()) return 0;
  std::unordered_map<std::uint32_t, int> lower_index;
  lower_index.reserve(lower.size());
  for (int i = 0; i < static_cast<int>(lower.size()); ++i) {
    lower_index.emplace(lower[i], i);
  }
  IntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  bool any = false;
  for (int col = 0; col < static_cast<int>(upper.size()); ++col) {
    std::uint32_t s = upper[col];
    int pos = 0;
    for (std::uint32_t bits = s; bits != 0; bits &= bits - 1) {
      std::uint32_t low = bits & (~bits + 1);
      std::uint32_t t = s & ~low;
      auto it = lower_index.find(t);
      if (it != lower_index.end()) {
        m.at(it->second, col) = (pos % 2 == 0) ? 1 : -1;
        any = true;
      }
      ++pos;
    }
  }
  if (!any) return 0;
  return exact_rank(std::move(m), field_char);
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const OracleOptions& opts) {
  if (opts.field_char != 0 && !is_prime(opts.field_char)) {
    throw ValidationError("field characteristic must be 0 or a prime");
  }
  BettiTable table;
  table.nvars = ideal.nvars();
  table.field_char = opts.field_char;
  const auto& gens = ideal.generators();
  const int m = static_cast<int>(gens.size());
  if (m == 0) return table;
  if (m > opts.generator_cap) {
    throw LimitError("ideal has " + std::to_string(m) +
                     " minimal generators, above the cap of " +
                     std::to_string(opts.generator_cap) +
                     "; raise the cap to insist");
  }
  if (m > 30) {
    throw LimitError("more than 30 generators is outside this oracle's range");
  }

  const int nv = ideal.nvars();
  const std::uint32_t total = (1u << m) - 1;

  // lcm exponent vectors for every nonempty subset, in one flat buffer.
  std::vector<int> lcms(static_cast<std::size_t>(total) * nv);
  std::vector<int> single(static_cast<std::size_t>(m) * nv);
  for (int g = 0; g < m; ++g) {
    for (int v = 0; v < nv; ++v) single[g * nv + v] = gens[g].exponent(v);
  }
  for (std::uint32_t s = 1; s <= total; ++s) {
    int* dst = lcms.data() + static_cast<std::size_t>(s - 1) * nv;
    std::uint32_t rest = s & (s - 1);
    int top = std::countr_zero(static_cast<std::uint32_t>(s & ~rest));
    if (rest == 0) {
      std::copy_n(single.data() + top * nv, nv, dst);
    } else {
      const int* prev = lcms.data() + static_cast<std::size_t>(rest - 1) * nv;
      const int* add = single.data() + top * nv;
      for (int v = 0; v < nv; ++v) dst[v] = std::max(prev[v], add[v]);
    }
  }

  // Sort subsets by (multidegree, mask); equal-multidegree runs are strands.
  std::vector<std::uint32_t> order(total);
  std::iota(order.begin(), order.end(), 1u);
  auto key = [&](std::uint32_t s) {
    return lcms.data() + static_cast<std::size_t>(s - 1) * nv;
  };
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int* ka = key(a);
    const int* kb = key(b);
    for (int v = 0; v < nv; ++v) {
      if (ka[v] != kb[v]) return ka[v] < kb[v];
    }
    return a < b;
  });

  std::size_t run_start = 0;
  while (run_start < order.size()) {
    std::size_t run_end = run_start + 1;
    const int* k0 = key(order[run_start]);
    while (run_end < order.size() &&
           std::equal(k0, k0 + nv, key(order[run_end]))) {
      ++run_end;
    }

    Strand strand;
    strand.degree = std::accumulate(k0, k0 + nv, 0LL);
    for (std::size_t i = run_start; i < run_end; ++i) {
      std::uint32_t s = order[i];
      strand.levels[std::popcount(s)].push_back(s);
    }

    static const std::vector<std::uint32_t> kEmpty;
    for (auto& [c, masks] : strand.levels) {
      auto below_it = strand.levels.find(c - 1);
      const auto& below = below_it == strand.levels.end() ? kEmpty : below_it->second;
      auto above_it = strand.levels.find(c + 1);
      const auto& above = above_it == strand.levels.end() ? kEmpty : above_it->second;
      int rank_down = rank_of_differential(masks, below, opts.field_char);
      int rank_in = rank_of_differential(above, masks, opts.field_char);
      long long beta = static_cast<long long>(masks.size()) - rank_down - rank_in;
      if (beta > 0) {
        table.entries[{c - 1, strand.degree}] += beta;
      }
    }
    run_start = run_end;
  }
  return table;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const OracleOptions& opts) {
  if (ideal.is_zero()) {
    throw ZeroIdealError("linear resolution of the zero ideal is undefined");
  }
  const long long d = ideal.generators().front().degree();
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() != d) return false;
  }
  BettiTable table = betti_table(ideal, opts);
  for (const auto& [key, count] : table.entries) {
    (void)count;
    if (key.second != key.first + d) return false;
  }
  return true;
}

std::string render_betti_grid(const BettiTable& table) {
  if (table.entries.empty()) return "(zero ideal: empty table)\n";
  long long max_i = 0;
  long long min_r = std::numeric_limits<long long>::max();
  long long max_r = std::numeric_limits<long long>::min();
  for (const auto& [key, count] : table.entries) {
    (void)count;
    max_i = std::max(max_i, key.first);
    min_r = std::min(min_r, key.second - key.first);
    max_r = std::max(max_r, key.second - key.first);
  }
  std::size_t width = 1;
  for (const auto& [key, count] : table.entries) {
    (void)key;
    width = std::max(width, std::to_string(count).size());
  }
  for (long long i = 0; i <= max_i; ++i) {
    width = std::max(width, std::to_string(i).size());
  }
  std::size_t label = std::to_string(max_r).size() +
                      std::to_string(min_r).size();  // generous
  label = std::max<std::size_t>(label, 4);

  auto cell = [&](const std::string& s) {
    std::string out(width + 2 - std::min(width + 2, s.size() + 2), ' ');
    return out + "  " + s;
  };
  std::string out(label, ' ');
  for (long long i = 0; i <= max_i; ++i) {
    out += cell(std::to_string(i));
  }
  out += '\n';
  for (long long r = min_r; r <= max_r; ++r) {
    std::string lab = std::to_string(r) + ":";
    out += std::string(label - std::min(label, lab.size()), ' ') + lab;
    for (long long i = 0; i <= max_i; ++i) {
      auto it = table.entries.find({i, i + r});
      out += cell(it == table.entries.end() ? "." : std::to_string(it->second));
    }
    out += '\n';
  }
  return out;
}

}  // namespace edgeideal
