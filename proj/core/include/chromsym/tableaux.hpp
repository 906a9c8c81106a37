#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromsym/numeric.hpp"
#include "chromsym/partition.hpp"

namespace chromsym {

/// A filling of a skew shape. rows[r] holds the entries of row r left to
/// right, one per cell. Validity (SSYT conditions) is checked by is_ssyt.
struct Tableau {
    SkewDiagram shape;
    std::vector<std::vector<int>> rows;

    /// Entry at 1-based (row, column); the cell must belong to the shape.
    int entry(int r, int c) const;

    /// Occurrence counts of 1..max entry, trailing zeros trimmed.
    std::vector<int> content() const;

    /// Rows of integers with '.' for skipped inner cells.
    std::string to_string() const;
};

/// Rows weakly increase, columns strictly increase, every cell filled.
bool is_ssyt(const Tableau& t);

/// Reverse reading word (right to left, top to bottom) keeps #i >= #(i+1)
/// on every prefix, for all i >= 1.
bool is_lattice(const Tableau& t);

/// Number of SSYT of the given (possibly skew) shape and content, by
/// exhaustive row-major backtracking. Throws std::domain_error when
/// |shape| != |content|.
Integer kostka(const SkewDiagram& shape, const Partition& content);

/// Littlewood-Richardson expansion: for each nu of |D| cells, the number of
/// lattice SSYT of shape D and content nu. Zero counts omitted.
std::map<Partition, Integer> lr_expand(const SkewDiagram& d);

}  // namespace chromsym
