#pragma once

// Compare presentation matrices up to the bookkeeping freedom a printed
// matrix can differ by: the order rows (crossings) and columns (arcs) were
// discovered in.  Optionally also up to per-row "flips" — reading a crossing
// relation against the opposite strand direction, which swaps the column
// carrying the t-symbol with the column carrying the bare -1.  For constant
// labelings the symbols themselves are unchanged by a flip, so it is a pure
// column swap within the row; flips are only sound for kei-variant modules.

#include <algorithm>
#include <numeric>
#include <vector>

#include "invariant.hpp"

namespace matchsup {

// Swap the t-entry and the pure "-1" entry of one row, in place.  Returns
// false when the row does not have the clean one-t/one-s/one-minus-one shape
// (e.g. a kink accumulated two symbols in one column).
inline bool flip_row(std::vector<keikit::PresentationEntry>& row) {
    int tcol = -1, mcol = -1;
    for (size_t j = 0; j < row.size(); ++j) {
        const auto& e = row[j];
        if (e.terms.size() == 1 && e.terms[0].kind == 'T' && e.constant == 0) {
            if (tcol >= 0) return false;
            tcol = static_cast<int>(j);
        } else if (e.terms.empty() && e.constant == -1) {
            if (mcol >= 0) return false;
            mcol = static_cast<int>(j);
        }
    }
    if (tcol < 0 || mcol < 0) return false;
    std::swap(row[tcol], row[mcol]);
    return true;
}

// Does some row permutation + column permutation (+ per-row flips when
// allowed) carry `a` onto `b`?  Brute force; fine for the 4-arc fixtures.
inline bool matches_up_to_relabeling(const keikit::PresentationMatrix& a,
                                     const keikit::PresentationMatrix& b, bool allow_flips) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    const int n = a.rows, c = a.cols;

    std::vector<int> colperm(static_cast<size_t>(c));
    std::iota(colperm.begin(), colperm.end(), 0);
    do {
        // Rows of `a` with columns shuffled, in both unflipped and flipped form.
        std::vector<std::vector<keikit::PresentationEntry>> plain, flipped;
        for (int i = 0; i < n; ++i) {
            std::vector<keikit::PresentationEntry> row(static_cast<size_t>(c));
            for (int j = 0; j < c; ++j) row[static_cast<size_t>(colperm[j])] = a.at(i, j);
            flipped.push_back(row);
            bool ok = flip_row(flipped.back());
            if (!ok) flipped.back().clear();
            plain.push_back(std::move(row));
        }
        // Greedy bipartite matching is overkill at n=4: try all row perms.
        std::vector<int> rowperm(static_cast<size_t>(n));
        std::iota(rowperm.begin(), rowperm.end(), 0);
        do {
            bool all = true;
            for (int i = 0; i < n && all; ++i) {
                const auto& src = plain[static_cast<size_t>(rowperm[i])];
                std::vector<keikit::PresentationEntry> want(static_cast<size_t>(c));
                for (int j = 0; j < c; ++j) want[static_cast<size_t>(j)] = b.at(i, j);
                if (src == want) continue;
                const auto& alt = flipped[static_cast<size_t>(rowperm[i])];
                if (!(allow_flips && !alt.empty() && alt == want)) all = false;
            }
            if (all) return true;
        } while (std::next_permutation(rowperm.begin(), rowperm.end()));
    } while (std::next_permutation(colperm.begin(), colperm.end()));
    return false;
}

// Convenience builders for expected matrices written down entry by entry.
inline keikit::PresentationEntry sym(char kind, int x, int y) {
    keikit::PresentationEntry e;
    e.add_symbol(kind, x, y, 1);
    return e;
}

inline keikit::PresentationEntry lit(long long v) {
    keikit::PresentationEntry e;
    e.constant = v;
    return e;
}

inline keikit::PresentationMatrix build(const std::vector<std::vector<keikit::PresentationEntry>>& rows) {
    keikit::PresentationMatrix m(static_cast<int>(rows.size()),
                                 static_cast<int>(rows.at(0).size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

} // namespace matchsup
