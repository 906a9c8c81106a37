#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chromsym/numeric.hpp"

namespace chromsym {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is a valid value of size 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Sum of the parts.
    int size() const noexcept { return size_; }
    /// Number of parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// i-th part, 0-based; 0 past the end.
    int part(int i) const noexcept {
        return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }

    /// True when `inner` fits inside this partition rowwise.
    bool contains(const Partition& inner) const;

    /// Column lengths; an involution.
    Partition conjugate() const;

    /// "[2,1]"; the empty partition prints "[]".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Canonical total order: size ascending, then reverse-lexicographic on
    /// the part sequence. Extends dominance order within each size.
    friend bool operator<(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in the canonical order.
std::vector<Partition> partitions_of(int n);

/// z_lambda = prod_i i^{m_i} m_i! over the part multiplicities m_i.
Integer z(const Partition& lambda);

/// A skew diagram outer/inner, stored as the nested pair; the cell set is
/// derived. Construction validates containment.
class SkewDiagram {
public:
    SkewDiagram(Partition outer, Partition inner);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.size() - inner_.size(); }
    int rows() const noexcept { return outer_.length(); }

    /// Row r (0-based) occupies 1-based columns (row_begin(r), row_end(r)].
    int row_begin(int r) const noexcept { return inner_.part(r); }
    int row_end(int r) const noexcept { return outer_.part(r); }
    int row_cells(int r) const noexcept { return row_end(r) - row_begin(r); }

    bool contains_cell(int r, int c) const noexcept {
        return r >= 0 && r < rows() && c > row_begin(r) && c <= row_end(r);
    }

    /// 1-based (row, column) pairs, row-major.
    std::vector<std::pair<int, int>> cells() const;

    SkewDiagram transpose() const;

    /// "[6,4,4,1]/[3,2]".
    std::string to_string() const;

    friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;
    friend bool operator<(const SkewDiagram& a, const SkewDiagram& b) {
        return a.outer_ < b.outer_ || (a.outer_ == b.outer_ && a.inner_ < b.inner_);
    }

private:
    Partition outer_;
    Partition inner_;
};

enum class StripKind { horizontal, vertical, both, neither };

struct StripClassification {
    StripKind kind = StripKind::neither;
    /// Per-row cell counts over nonempty rows; meaningful when kind is
    /// horizontal or both.
    std::vector<int> row_profile;
    /// Per-column cell counts over nonempty columns; meaningful when kind is
    /// vertical or both.
    std::vector<int> col_profile;
};

/// Horizontal iff no column holds two cells; vertical iff no row does.
StripClassification classify_strip(const SkewDiagram& d);

}  // namespace chromsym
