#pragma once

// Deliberately naive reference implementations the real code is tested
// against. Everything here is exponential and only fit for tiny inputs.

#include <cstdint>
#include <numeric>
#include <vector>

#include "diagram.hpp"
#include "kei.hpp"
#include "labeling.hpp"
#include "modarith.hpp"

namespace oracles {

// #{x in (Z_m)^cols : A x = 0}, by trying every vector.
inline long long brute_count_solutions(const keikit::IntMatrix& a, long long m) {
    long long total = 1;
    for (int j = 0; j < a.cols; ++j) total *= m;
    long long count = 0;
    std::vector<long long> x(static_cast<size_t>(a.cols), 0);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int j = 0; j < a.cols; ++j) {
            x[j] = c % m;
            c /= m;
        }
        bool ok = true;
        for (int i = 0; i < a.rows && ok; ++i) {
            long long dot = 0;
            for (int j = 0; j < a.cols; ++j) dot += a.at(i, j) * x[j];
            ok = keikit::mod_reduce(dot, m) == 0;
        }
        if (ok) ++count;
    }
    return count;
}

// Cofactor expansion; fine for the <= 4x4 matrices used in tests.
inline long long laplace_det(const keikit::IntMatrix& a) {
    if (a.rows != a.cols) return 0;
    if (a.rows == 0) return 1;
    if (a.rows == 1) return a.at(0, 0);
    long long det = 0, sign = 1;
    for (int j = 0; j < a.cols; ++j) {
        keikit::IntMatrix minor(a.rows - 1, a.cols - 1);
        for (int i = 1; i < a.rows; ++i)
            for (int jj = 0, k = 0; jj < a.cols; ++jj)
                if (jj != j) minor.at(i - 1, k++) = a.at(i, jj);
        det += sign * a.at(0, j) * laplace_det(minor);
        sign = -sign;
    }
    return det;
}

// Every assignment arcs -> kei elements, filtered by the crossing relations.
inline std::vector<keikit::Labeling> brute_labelings(const keikit::LinkDiagram& d,
                                                     const keikit::FiniteKei& k) {
    std::vector<keikit::Labeling> out;
    const int n = k.order();
    long long total = 1;
    for (int a = 0; a < d.arcs; ++a) total *= n;
    for (long long code = 0; code < total; ++code) {
        keikit::Labeling f(static_cast<size_t>(d.arcs) + 1, 0);
        long long c = code;
        for (int a = d.arcs; a >= 1; --a) { // arc 1 varies slowest: lex order
            f[a] = 1 + static_cast<int>(c % n);
            c /= n;
        }
        if (keikit::is_kei_labeling(d, k, f)) out.push_back(std::move(f));
    }
    return out;
}

// Census of (t, s) pairs on the one-element kei, straight from the relation
// list. The slide relations collapse to t*s = s*t (trivial) and
// s = s*s + t*s; the kei variant adds t^2 = 1 and s(t + 1) = 0.
inline int brute_order1_census(long long m, bool kei_variant) {
    auto r = [m](long long v) { return keikit::mod_reduce(v, m); };
    int count = 0;
    for (long long t = 0; t < m; ++t)
        for (long long s = 0; s < m; ++s) {
            bool ok = r(t + s - 1) == 0           // diagonal
                      && r(t * t - t * t) == 0    // tt-slide
                      && r(t * s - s * t) == 0    // ts-slide
                      && r(s - s * s - t * s) == 0; // ss-slide
            if (kei_variant)
                ok = ok && r(t * t - 1) == 0 && r(t * s + s) == 0;
            else
                ok = ok && std::gcd(r(t), m) == 1;
            if (ok) ++count;
        }
    return count;
}

// All |Y|^|X| maps [1,|X|] -> [1,|Y|] as 1-indexed vectors.
inline std::vector<std::vector<int>> all_maps(int domain, int codomain) {
    std::vector<std::vector<int>> out;
    long long total = 1;
    for (int i = 0; i < domain; ++i) total *= codomain;
    for (long long code = 0; code < total; ++code) {
        std::vector<int> f(static_cast<size_t>(domain));
        long long c = code;
        for (int i = 0; i < domain; ++i) {
            f[i] = 1 + static_cast<int>(c % codomain);
            c /= codomain;
        }
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace oracles
