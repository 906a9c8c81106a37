#include "chromsym/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chromsym {

int Tableau::entry(int r, int c) const {
    if (!shape.contains_cell(r - 1, c))
        throw std::domain_error("tableau: cell outside shape");
    return rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - shape.row_begin(r - 1) - 1)];
}

std::vector<int> Tableau::content() const {
    std::vector<int> counts;
    for (const auto& row : rows)
        for (int v : row) {
            if (v > static_cast<int>(counts.size())) counts.resize(static_cast<size_t>(v), 0);
            ++counts[static_cast<size_t>(v - 1)];
        }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < shape.rows(); ++r) {
        if (r) os << '\n';
        for (int c = 1; c <= shape.row_end(r); ++c) {
            if (c > 1) os << ' ';
            if (c <= shape.row_begin(r)) os << '.';
            else os << rows[static_cast<size_t>(r)][static_cast<size_t>(c - shape.row_begin(r) - 1)];
        }
    }
    return os.str();
}

bool is_ssyt(const Tableau& t) {
    const SkewDiagram& d = t.shape;
    if (static_cast<int>(t.rows.size()) != d.rows()) return false;
    for (int r = 0; r < d.rows(); ++r) {
        if (static_cast<int>(t.rows[static_cast<size_t>(r)].size()) != d.row_cells(r))
            return false;
        for (int c = d.row_begin(r) + 1; c <= d.row_end(r); ++c) {
            const int v = t.entry(r + 1, c);
            if (v < 1) return false;
            if (d.contains_cell(r, c - 1) && t.entry(r + 1, c - 1) > v) return false;
            if (d.contains_cell(r - 1, c) && t.entry(r, c) >= v) return false;
        }
    }
    return true;
}

bool is_lattice(const Tableau& t) {
    std::vector<int> counts;
    const SkewDiagram& d = t.shape;
    for (int r = 0; r < d.rows(); ++r) {
        for (int c = d.row_end(r); c > d.row_begin(r); --c) {
            const int v = t.entry(r + 1, c);
            if (v > static_cast<int>(counts.size())) counts.resize(static_cast<size_t>(v), 0);
            ++counts[static_cast<size_t>(v - 1)];
            if (v > 1 && counts[static_cast<size_t>(v - 1)] > counts[static_cast<size_t>(v - 2)])
                return false;
        }
    }
    return true;
}

namespace {

// Shared backtracking grid: entries indexed by (row, col-1), 0 = unfilled.
struct Grid {
    const SkewDiagram& d;
    std::vector<std::vector<int>> g;

    explicit Grid(const SkewDiagram& dia)
        : d(dia),
          g(static_cast<size_t>(dia.rows()),
            std::vector<int>(static_cast<size_t>(dia.outer().part(0)), 0)) {}

    int at(int r, int c) const {  // 0-based row, 1-based col
        return d.contains_cell(r, c) ? g[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] : 0;
    }
    void set(int r, int c, int v) { g[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] = v; }
};

}  // namespace

Integer kostka(const SkewDiagram& shape, const Partition& content) {
    if (shape.size() != content.size())
        throw std::domain_error("kostka: |shape| != |content|");
    const auto cells = shape.cells();  // row-major
    std::vector<int> remaining(content.parts());
    Grid grid(shape);
    Integer count = 0;

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const int r = cells[idx].first - 1;
        const int c = cells[idx].second;
        const int left = grid.at(r, c - 1);
        const int above = grid.at(r - 1, c);
        for (int v = std::max(left, above + 1); v <= content.length(); ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            grid.set(r, c, v);
            self(self, idx + 1);
            grid.set(r, c, 0);
            ++remaining[static_cast<size_t>(v - 1)];
        }
    };
    rec(rec, 0);
    return count;
}

std::map<Partition, Integer> lr_expand(const SkewDiagram& d) {
    // Cells in reading order: rows top to bottom, right to left within a row.
    std::vector<std::pair<int, int>> order;  // (0-based row, 1-based col)
    for (int r = 0; r < d.rows(); ++r)
        for (int c = d.row_end(r); c > d.row_begin(r); --c) order.emplace_back(r, c);

    std::map<Partition, Integer> out;
    if (order.empty()) {
        out[Partition()] = 1;
        return out;
    }

    Grid grid(d);
    std::vector<int> counts(static_cast<size_t>(d.rows()), 0);

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == order.size()) {
            std::vector<int> parts(counts);
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            // Full-word lattice condition makes the content weakly decreasing.
            out[Partition(std::move(parts))] += 1;
            return;
        }
        const auto [r, c] = order[idx];
        const int above = grid.at(r - 1, c);
        const int right = grid.at(r, c + 1);
        const int hi = right > 0 ? std::min(right, r + 1) : r + 1;
        for (int v = above + 1; v <= hi; ++v) {
            // Lattice prefix check: placing v needs count[v-1] > count[v] so far.
            if (v > 1 && counts[static_cast<size_t>(v - 2)] <= counts[static_cast<size_t>(v - 1)])
                continue;
            ++counts[static_cast<size_t>(v - 1)];
            grid.set(r, c, v);
            self(self, idx + 1);
            grid.set(r, c, 0);
            --counts[static_cast<size_t>(v - 1)];
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace chromsym
