#include "hornlr/horn_statistics.hpp"

#include <algorithm>
#include <array>

namespace hornlr {

IndexSet::IndexSet(int ambient, std::vector<int> elements)
    : ambient_(ambient), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > ambient_) {
      throw InvalidArgument("index set element out of range");
    }
    if (i > 0 && elements_[i] <= elements_[i - 1]) {
      throw InvalidArgument("index set must be strictly increasing");
    }
  }
}

bool IndexSet::contains(int k) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), k);
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

IndexSet index_set(const Partition& alpha, int ambient, int r) {
  if (r < 0 || r > ambient) {
    throw InvalidArgument("index set size r=" + std::to_string(r) +
                          " outside 0..N=" + std::to_string(ambient));
  }
  if (alpha.length() > r || alpha.largest() > ambient - r) {
    throw InvalidArgument("alpha=" + alpha.to_string() + " does not fit in " +
                          std::to_string(r) + "x" +
                          std::to_string(ambient - r));
  }
  std::vector<int> elements(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    elements[static_cast<std::size_t>(i - 1)] = ambient - r + i - alpha[i];
  }
  return IndexSet(ambient, std::move(elements));
}

Partition partition_of(const IndexSet& set) {
  const int r = set.size();
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    parts[static_cast<std::size_t>(i - 1)] =
        set.ambient() - r + i - set.elements()[static_cast<std::size_t>(i - 1)];
  }
  return Partition(std::move(parts));
}

CrossingDiagram::CrossingDiagram(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      cells_(static_cast<std::size_t>(rows * cols), Cell::outside) {}

CrossingDiagram::Cell CrossingDiagram::at(int row, int col) const {
  return cells_.at(static_cast<std::size_t>((row - 1) * cols_ + (col - 1)));
}

void CrossingDiagram::set(int row, int col, Cell c) {
  cells_.at(static_cast<std::size_t>((row - 1) * cols_ + (col - 1))) = c;
}

int CrossingDiagram::surviving() const noexcept {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), Cell::kept));
}

std::string CrossingDiagram::render(const std::vector<int>& row_labels) const {
  std::size_t label_width = 0;
  for (int label : row_labels) {
    label_width = std::max(label_width, std::to_string(label).size());
  }
  std::string out;
  for (int row = 1; row <= rows_; ++row) {
    if (!row_labels.empty()) {
      auto label = std::to_string(row_labels.at(static_cast<std::size_t>(row - 1)));
      out += std::string(label_width - label.size(), ' ') + label + ' ';
    }
    std::string line;
    for (int col = 1; col <= cols_; ++col) {
      switch (at(row, col)) {
        case Cell::outside: line += ' '; break;
        case Cell::vacant: line += '.'; break;
        case Cell::vacant_crossed: line += '-'; break;
        case Cell::kept: line += 'o'; break;
        case Cell::crossed: line += 'x'; break;
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

namespace {

using Cell = CrossingDiagram::Cell;

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

std::string dims(int a, int b) {
  return std::to_string(a) + "x" + std::to_string(b);
}

// Fixed-size crossing masks; index 0 unused. Shapes handled here are tiny,
// and anything larger is rejected by the callers' range checks.
constexpr int kMaxSide = 64;
using LineMask = std::array<bool, kMaxSide + 2>;

void require_side(int side) {
  require(side <= kMaxSide,
          "shape side " + std::to_string(side) + " exceeds " +
              std::to_string(kMaxSide));
}

// Calls visit(row, col, in_lambda, crossed) for every box of the n x m
// rectangle, with lambda placed in the upper-right corner.
template <class Visit>
void visit_rectangle(const Partition& lambda, Rectangle box,
                     const LineMask& row_crossed, const LineMask& col_crossed,
                     Visit&& visit) {
  for (int i = 1; i <= box.n; ++i) {
    const int first = box.m - lambda[i] + 1;
    for (int col = 1; col <= box.m; ++col) {
      visit(i, col, col >= first, row_crossed[static_cast<std::size_t>(i)] ||
                                      col_crossed[static_cast<std::size_t>(col)]);
    }
  }
}

// Same for the staircase: matrix row i spans columns 1..n+1-i and lambda_i
// fills the rightmost lambda_i of them.
template <class Visit>
void visit_staircase(const StrictPartition& lambda, Staircase s,
                     const LineMask& row_crossed, const LineMask& col_crossed,
                     Visit&& visit) {
  for (int i = 1; i <= s.n; ++i) {
    const int last = s.n + 1 - i;
    const int first = last - lambda[i] + 1;
    for (int col = 1; col <= last; ++col) {
      visit(i, col, col >= first, row_crossed[static_cast<std::size_t>(i)] ||
                                      col_crossed[static_cast<std::size_t>(col)]);
    }
  }
}

template <class Visitor>
int count_kept(Visitor&& walk) {
  int kept = 0;
  walk([&](int, int, bool in_lambda, bool crossed) {
    if (in_lambda && !crossed) ++kept;
  });
  return kept;
}

template <class Visitor>
CrossingDiagram draw(int rows, int cols, Visitor&& walk) {
  CrossingDiagram d(rows, cols);
  walk([&](int row, int col, bool in_lambda, bool crossed) {
    Cell c = in_lambda ? (crossed ? Cell::crossed : Cell::kept)
                       : (crossed ? Cell::vacant_crossed : Cell::vacant);
    d.set(row, col, c);
  });
  return d;
}

struct RectCrossing {
  LineMask rows{};
  LineMask cols{};
};

RectCrossing rows_crossing(const Partition& lambda, Rectangle box,
                           const Partition& alpha, int r) {
  require_side(std::max(box.n, box.m));
  require(contains(lambda, box), "lambda=" + lambda.to_string() +
                                     " does not fit in " + dims(box.n, box.m));
  require(0 < r && r < box.n, "need 0 < r < n, got r=" + std::to_string(r) +
                                  ", n=" + std::to_string(box.n));
  RectCrossing x;
  // Cartesian row e is matrix row n+1-e.
  const IndexSet rows = index_set(alpha, box.n, r);
  for (int e : rows.elements()) {
    x.rows[static_cast<std::size_t>(box.n + 1 - e)] = true;
  }
  return x;
}

RectCrossing rows_cols_crossing(const Partition& lambda, Rectangle box,
                                const Partition& alpha,
                                const Partition& alpha_prime, int r) {
  require(r < std::min(box.n, box.m),
          "need 0 < r < min(n, m), got r=" + std::to_string(r));
  RectCrossing x = rows_crossing(lambda, box, alpha, r);
  const IndexSet cols = index_set(alpha_prime, box.m, r);
  for (int e : cols.elements()) {
    x.cols[static_cast<std::size_t>(e)] = true;
  }
  return x;
}

RectCrossing inner_crossing(const StrictPartition& lambda, Staircase s,
                            const Partition& alpha, int r) {
  require_side(s.n);
  require(contains(lambda, s), "lambda=" + lambda.to_string() +
                                   " does not fit in the staircase of side " +
                                   std::to_string(s.n));
  require(0 < r && r < s.n, "need 0 < r < n, got r=" + std::to_string(r) +
                                ", n=" + std::to_string(s.n));
  RectCrossing x;
  const IndexSet corners = index_set(alpha, s.n, r);
  for (int k : corners.elements()) {
    x.rows[static_cast<std::size_t>(s.n + 1 - k)] = true;
    x.cols[static_cast<std::size_t>(k)] = true;
  }
  return x;
}

RectCrossing outer_crossing(const StrictPartition& lambda, Staircase s,
                            const Partition& alpha, int r) {
  require_side(s.n);
  require(contains(lambda, s), "lambda=" + lambda.to_string() +
                                   " does not fit in the staircase of side " +
                                   std::to_string(s.n));
  require(0 < r && r < s.n + 1, "need 0 < r < n+1, got r=" +
                                    std::to_string(r) +
                                    ", n=" + std::to_string(s.n));
  RectCrossing x;
  const IndexSet corners = index_set(alpha, s.n + 1, r);
  for (int j : corners.elements()) {
    // Corner 1 has no row inside the staircase; corner n+1 has no column.
    if (j >= 2) x.rows[static_cast<std::size_t>(s.n + 2 - j)] = true;
    if (j <= s.n) x.cols[static_cast<std::size_t>(j)] = true;
  }
  return x;
}

}  // namespace

int rows_stat(const Partition& lambda, Rectangle box, const Partition& alpha,
              int r) {
  auto x = rows_crossing(lambda, box, alpha, r);
  return count_kept([&](auto&& f) { visit_rectangle(lambda, box, x.rows, x.cols, f); });
}

CrossingDiagram rows_diagram(const Partition& lambda, Rectangle box,
                             const Partition& alpha, int r) {
  auto x = rows_crossing(lambda, box, alpha, r);
  return draw(box.n, box.m, [&](auto&& f) {
    visit_rectangle(lambda, box, x.rows, x.cols, f);
  });
}

int rows_cols_stat(const Partition& lambda, Rectangle box,
                   const Partition& alpha, const Partition& alpha_prime,
                   int r) {
  auto x = rows_cols_crossing(lambda, box, alpha, alpha_prime, r);
  return count_kept([&](auto&& f) { visit_rectangle(lambda, box, x.rows, x.cols, f); });
}

CrossingDiagram rows_cols_diagram(const Partition& lambda, Rectangle box,
                                  const Partition& alpha,
                                  const Partition& alpha_prime, int r) {
  auto x = rows_cols_crossing(lambda, box, alpha, alpha_prime, r);
  return draw(box.n, box.m, [&](auto&& f) {
    visit_rectangle(lambda, box, x.rows, x.cols, f);
  });
}

int inner_corner_stat(const StrictPartition& lambda, Staircase s,
                      const Partition& alpha, int r) {
  auto x = inner_crossing(lambda, s, alpha, r);
  return count_kept([&](auto&& f) { visit_staircase(lambda, s, x.rows, x.cols, f); });
}

CrossingDiagram inner_corner_diagram(const StrictPartition& lambda,
                                     Staircase s, const Partition& alpha,
                                     int r) {
  auto x = inner_crossing(lambda, s, alpha, r);
  return draw(s.n, s.n, [&](auto&& f) {
    visit_staircase(lambda, s, x.rows, x.cols, f);
  });
}

int outer_corner_stat(const StrictPartition& lambda, Staircase s,
                      const Partition& alpha, int r) {
  auto x = outer_crossing(lambda, s, alpha, r);
  return count_kept([&](auto&& f) { visit_staircase(lambda, s, x.rows, x.cols, f); });
}

CrossingDiagram outer_corner_diagram(const StrictPartition& lambda,
                                     Staircase s, const Partition& alpha,
                                     int r) {
  auto x = outer_crossing(lambda, s, alpha, r);
  return draw(s.n, s.n, [&](auto&& f) {
    visit_staircase(lambda, s, x.rows, x.cols, f);
  });
}

}  // namespace hornlr
