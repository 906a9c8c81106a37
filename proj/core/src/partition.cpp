#include "chromsym/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chromsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(static_cast<size_t>(parts_[0]));
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
    }
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    // Reverse-lexicographic: the lexicographically larger sequence comes first.
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending-first recursion emits reverse-lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

Integer z(const Partition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    Integer r = 1;
    for (auto [value, m] : mult) {
        for (int i = 0; i < m; ++i) r *= value;
        r *= factorial(m);
    }
    return r;
}

SkewDiagram::SkewDiagram(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::domain_error("skew diagram: inner partition " + inner_.to_string() +
                                " does not fit inside outer " + outer_.to_string());
}

std::vector<std::pair<int, int>> SkewDiagram::cells() const {
    std::vector<std::pair<int, int>> cs;
    cs.reserve(static_cast<size_t>(size()));
    for (int r = 0; r < rows(); ++r)
        for (int c = row_begin(r) + 1; c <= row_end(r); ++c)
            cs.emplace_back(r + 1, c);
    return cs;
}

SkewDiagram SkewDiagram::transpose() const {
    return SkewDiagram(outer_.conjugate(), inner_.conjugate());
}

std::string SkewDiagram::to_string() const {
    return outer_.to_string() + "/" + inner_.to_string();
}

StripClassification classify_strip(const SkewDiagram& d) {
    const int ncols = d.outer().part(0);
    std::vector<int> col_count(static_cast<size_t>(ncols), 0);
    std::vector<int> row_count(static_cast<size_t>(d.rows()), 0);
    for (int r = 0; r < d.rows(); ++r) {
        row_count[static_cast<size_t>(r)] = d.row_cells(r);
        for (int c = d.row_begin(r) + 1; c <= d.row_end(r); ++c)
            ++col_count[static_cast<size_t>(c - 1)];
    }
    const bool horizontal =
        std::all_of(col_count.begin(), col_count.end(), [](int c) { return c <= 1; });
    const bool vertical =
        std::all_of(row_count.begin(), row_count.end(), [](int c) { return c <= 1; });

    StripClassification sc;
    if (horizontal && vertical) sc.kind = StripKind::both;
    else if (horizontal) sc.kind = StripKind::horizontal;
    else if (vertical) sc.kind = StripKind::vertical;
    else sc.kind = StripKind::neither;

    if (horizontal)
        for (int c : row_count)
            if (c > 0) sc.row_profile.push_back(c);
    if (vertical)
        for (int c : col_count)
            if (c > 0) sc.col_profile.push_back(c);
    return sc;
}

}  // namespace chromsym
