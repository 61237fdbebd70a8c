#include "hornlr/tableaux.hpp"

#include <functional>
#include <utility>

namespace hornlr {

namespace {

// Shared letter-by-letter transfer. `shapes` lists every admissible
// intermediate shape (including the empty one and the target), and
// `layer_weight(kappa, rho)` counts the ways to fill rho / kappa with a single
// letter. The coefficient of x^v is the number of chains
// empty = s_0 < s_1 < ... < s_N = target with |s_i / s_{i-1}| = v_i,
// weighted by the product of layer weights.
template <class Shape, class LayerWeight>
MonomialMap fill_by_letters(const std::vector<Shape>& shapes,
                            const Shape& target, int variables,
                            LayerWeight&& layer_weight) {
  MonomialMap out(variables);
  const std::size_t count = shapes.size();
  std::size_t target_index = count;
  std::size_t empty_index = count;
  for (std::size_t k = 0; k < count; ++k) {
    if (shapes[k] == target) target_index = k;
    if (shapes[k].empty()) empty_index = k;
  }
  if (target_index == count || empty_index == count) {
    throw InconsistencyError("shape list misses the empty or target shape");
  }

  // Dense transfer matrix; shapes here number at most a few hundred.
  std::vector<std::int64_t> weight(count * count, 0);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (shapes[a].weight() > shapes[b].weight()) continue;
      weight[a * count + b] = layer_weight(shapes[a], shapes[b]);
    }
  }

  for (const auto& content : exponent_partitions(target.weight(), variables)) {
    std::vector<std::int64_t> ways(count, 0);
    ways[empty_index] = 1;
    for (int letter = 0; letter < variables; ++letter) {
      const int add = content[static_cast<std::size_t>(letter)];
      std::vector<std::int64_t> next(count, 0);
      for (std::size_t a = 0; a < count; ++a) {
        if (ways[a] == 0) continue;
        const int size = shapes[a].weight() + add;
        for (std::size_t b = 0; b < count; ++b) {
          if (shapes[b].weight() != size) continue;
          const std::int64_t w = weight[a * count + b];
          if (w == 0) continue;
          next[b] = checked_add(next[b], checked_mul(ways[a], w));
        }
      }
      ways = std::move(next);
    }
    out.add(content, ways[target_index]);
  }
  return out;
}

enum class Mark : std::uint8_t { none, primed, unprimed };

}  // namespace

MonomialMap ssyt_polynomial(const Partition& lambda, int variables) {
  auto shapes = subdiagrams(lambda);
  return fill_by_letters(
      shapes, lambda, variables,
      [](const Partition& kappa, const Partition& rho) -> std::int64_t {
        if (!is_subdiagram(kappa, rho)) return 0;
        // One letter per column: row j+1 of the layer may not reach under
        // a layer box of row j, i.e. rho_{j+1} <= kappa_j.
        for (int j = 1; j < rho.length(); ++j) {
          if (rho[j + 1] > kappa[j]) return 0;
        }
        return 1;
      });
}

std::int64_t layer_markings(const StrictPartition& kappa,
                            const StrictPartition& rho, DiagonalRule rule) {
  if (!is_subdiagram(kappa.as_partition(), rho.as_partition())) return 0;
  // Shifted coordinates: row j occupies columns j .. j + rho_j - 1; the layer
  // holds columns j + kappa_j .. j + rho_j - 1.
  const int rows = rho.length();
  auto in_layer = [&](int row, int col) {
    if (row < 1 || row > rows) return false;
    return col >= row + kappa[row] && col <= row + rho[row] - 1;
  };
  std::vector<std::pair<int, int>> boxes;
  int width = 0;
  for (int j = 1; j <= rows; ++j) {
    for (int col = j + kappa[j]; col <= j + rho[j] - 1; ++col) {
      boxes.emplace_back(j, col);
      width = std::max(width, col);
    }
  }
  if (boxes.empty()) return 1;

  std::vector<Mark> marks(static_cast<std::size_t>((rows + 1) * (width + 1)),
                          Mark::none);
  auto mark_at = [&](int row, int col) -> Mark& {
    return marks[static_cast<std::size_t>(row * (width + 1) + col)];
  };

  // Within one letter: along a row the entries read i'? i*, along a column
  // i'* i?. So a primed box may not follow any box on its left, an unprimed
  // box may not sit under an unprimed box, and a primed box may not sit
  // under an unprimed box.
  auto admissible = [&](int row, int col, Mark m) {
    if (rule == DiagonalRule::unprimed && col == row && m == Mark::primed) {
      return false;
    }
    if (in_layer(row, col - 1) && m == Mark::primed) return false;
    if (in_layer(row - 1, col) && mark_at(row - 1, col) == Mark::unprimed) {
      return false;
    }
    return true;
  };

  std::int64_t total = 0;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == boxes.size()) {
      ++total;
      return;
    }
    auto [row, col] = boxes[k];
    for (Mark m : {Mark::primed, Mark::unprimed}) {
      if (!admissible(row, col, m)) continue;
      mark_at(row, col) = m;
      place(k + 1);
      mark_at(row, col) = Mark::none;
    }
  };
  place(0);
  return total;
}

MonomialMap marked_shifted_polynomial(const StrictPartition& lambda,
                                      int variables, DiagonalRule rule) {
  std::vector<StrictPartition> shapes;
  for (const auto& p : subdiagrams(lambda.as_partition())) {
    bool strict = true;
    for (int i = 1; i < p.length(); ++i) strict = strict && p[i] > p[i + 1];
    if (strict) shapes.emplace_back(p);
  }
  return fill_by_letters(shapes, lambda, variables,
                         [rule](const StrictPartition& kappa,
                                const StrictPartition& rho) {
                           return layer_markings(kappa, rho, rule);
                         });
}

}  // namespace hornlr
