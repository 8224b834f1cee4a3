#pragma once

#include <cstdint>
#include <vector>

#include "irreps/permutation.hpp"
#include "irreps/rng.hpp"

namespace irreps {

inline constexpr int kDefaultSytCap = 12;  // boxes

// Weakly decreasing positive row lengths.
struct YoungDiagram {
  std::vector<int> rows;

  int boxes() const;
  int row_count() const { return static_cast<int>(rows.size()); }

  bool operator==(const YoungDiagram&) const = default;
};

bool is_valid_diagram(const YoungDiagram& d);
void validate_diagram(const YoungDiagram& d);

YoungDiagram conjugate_diagram(const YoungDiagram& d);
bool is_self_conjugate(const YoungDiagram& d);
int diagonal_length(const YoungDiagram& d);

// Standard filling: entries strictly increase along rows and down columns,
// each of 1..n used once. entries[r][c] is 0-based in both grid coordinates.
struct StandardTableau {
  YoungDiagram shape;
  std::vector<std::vector<int>> entries;

  bool operator==(const StandardTableau&) const = default;
};

bool is_valid_tableau(const StandardTableau& t);
void validate_tableau(const StandardTableau& t);

// pos[label-1] = (row, col), 0-based.
std::vector<std::pair<int, int>> cell_positions(const StandardTableau& t);

// Rows concatenated top to bottom; canonical external identifier.
std::vector<int> row_reading_word(const StandardTableau& t);
StandardTableau tableau_from_row_word(const YoungDiagram& shape, const std::vector<int>& word);

// All standard tableaux of the shape, ordered lexicographically by row
// reading word. Throws std::length_error when boxes exceed the cap.
std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape, int cap = kDefaultSytCap);

// Hook length formula.
std::uint64_t syt_count(const YoungDiagram& shape);

// Uniform random standard tableau by the hook walk: repeatedly start at a
// uniform cell, walk to uniform cells of the current hook until a corner is
// reached, place the largest remaining label there, shrink, repeat.
StandardTableau hook_walk_sample(const YoungDiagram& shape, Rng& rng);

// Signed hop count from box i+1 to box i (down or left +1, up or right -1);
// equals content(i+1) - content(i) with content = col - row. Never zero.
int axial_distance(const StandardTableau& t, int i);

StandardTableau conjugate_tableau(const StandardTableau& t);

// The unique tableau numbering boxes left-to-right along consecutive rows.
StandardTableau typewriter_tableau(const YoungDiagram& shape);

struct TypewriterData {
  Permutation w;  // relabels t into the typewriter tableau: w(label) = typewriter index
  int sign;
};

TypewriterData typewriter_data(const StandardTableau& t);

}  // namespace irreps
