#include "surfcolor/heawood.hpp"

#include <algorithm>
#include <string>

#include "surfcolor/errors.hpp"

namespace surfcolor {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw PreconditionError("isqrt of a negative number");
  std::int64_t lo = 0;
  std::int64_t hi = std::min<std::int64_t>(n, 3037000499) + 1;
  // Invariant: lo^2 <= n < hi^2. mid <= n / mid avoids overflow.
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (mid <= n / mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

int heawood_number(int eps) {
  if (eps < 1) throw PreconditionError("Heawood number needs Euler genus >= 1, got " + std::to_string(eps));
  // floor((7 + sqrt(x)) / 2) == floor((7 + floor(sqrt(x))) / 2) for integer x.
  return static_cast<int>((7 + isqrt(24 * static_cast<std::int64_t>(eps) + 1)) / 2);
}

int inverse_genus(int n) {
  if (n < 5) throw PreconditionError("inverse genus needs n >= 5, got " + std::to_string(n));
  const std::int64_t num = static_cast<std::int64_t>(n - 3) * (n - 4);
  return static_cast<int>((num + 5) / 6);
}

EmbeddingParameters embedding_parameters(int eps) {
  EmbeddingParameters p;
  p.genus = eps;
  p.heawood = heawood_number(eps);
  p.edge_count = p.heawood * (p.heawood - 1) / 2;
  p.face_count = 2 - eps - p.heawood + p.edge_count;
  p.max_face_size = 2 * p.edge_count - 3 * p.face_count + 3;
  p.class_index = (p.heawood - 3) / 3;
  return p;
}

bool requires_two_cell(int eps) { return inverse_genus(heawood_number(eps)) == eps; }

bool dk_feasible(int eps) {
  const int h = heawood_number(eps);
  if (h % 3 != 1) return false;
  const int i = (h - 4) / 3;
  return 2 * eps == 3 * i * i + 3 * i;
}

std::vector<EmbeddingParameters> heawood_table(int max_genus) {
  std::vector<EmbeddingParameters> rows;
  for (int eps = 1; eps <= max_genus; ++eps) rows.push_back(embedding_parameters(eps));
  return rows;
}

}  // namespace surfcolor
