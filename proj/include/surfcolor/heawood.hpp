#pragma once

// Closed-form arithmetic around the Heawood number. Integer-only throughout.

#include <cstdint>
#include <vector>

namespace surfcolor {

/// Parameters of a 2-cell embedding of K_{H(eps)} on the surface of Euler genus eps.
struct EmbeddingParameters {
  int genus = 0;
  int heawood = 0;
  int edge_count = 0;
  int face_count = 0;
  /// Upper bound on the size of a face; not necessarily attained.
  int max_face_size = 0;
  /// i with heawood in {3i+3, 3i+4, 3i+5}.
  int class_index = 0;

  bool operator==(const EmbeddingParameters&) const = default;
};

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);

/// floor((7 + sqrt(24 eps + 1)) / 2); eps >= 1.
int heawood_number(int eps);

/// ceil((n-3)(n-4)/6): the least Euler genus on which K_n embeds; n >= 5.
int inverse_genus(int n);

EmbeddingParameters embedding_parameters(int eps);

/// True iff the surface is the genus surface of K_{H(eps)}, i.e. every
/// embedding of K_{H(eps)} there is 2-cell.
bool requires_two_cell(int eps);

/// True iff K_{H(eps)} may embed with an (H-1)-region admitting a second copy
/// (DK_H): H = 3i+4 and eps = (3i^2+3i)/2.
bool dk_feasible(int eps);

/// Rows for eps = 1..max_genus.
std::vector<EmbeddingParameters> heawood_table(int max_genus);

}  // namespace surfcolor
