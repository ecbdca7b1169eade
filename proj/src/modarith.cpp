#include "modarith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace keikit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows = static_cast<int>(init.size());
    cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
    a.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols)
            throw DomainError("ragged matrix initializer");
        a.insert(a.end(), row.begin(), row.end());
    }
}

Modulus::Modulus(long long m) : m_(m) {
    if (m < 2)
        throw DomainError("modulus must be at least 2, got " + std::to_string(m));
    if (m > (1LL << 31)) // keeps residue products inside long long
        throw DomainError("modulus too large, supported range is [2, 2^31]");
    prime_ = true;
    if (m == 2) return;
    if (m % 2 == 0) { prime_ = false; return; }
    for (long long d = 3; d * d <= m; d += 2)
        if (m % d == 0) { prime_ = false; return; }
}

long long mod_reduce(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

// Extended Euclid.
long long mod_inverse(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = mod_reduce(a, m);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1)
        throw DomainError(std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return mod_reduce(t, m);
}

namespace {

// Entries can grow far past 64 bits during elimination, so the working
// matrix is arbitrary-precision.
struct BigMatrix {
    int rows, cols;
    std::vector<mpz_class> a;
    explicit BigMatrix(const IntMatrix& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
        for (size_t i = 0; i < m.a.size(); ++i) a[i] = static_cast<long>(m.a[i]);
    }
    mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Diagonal entries up to `count` -> invariant factors: pairwise gcd/lcm
// normalization (diag(a,b) is equivalent to diag(gcd, lcm)), absolute
// values, zeros stripped, ascending order.
std::vector<mpz_class> finalize_diagonal(const BigMatrix& w, int count) {
    std::vector<mpz_class> d;
    d.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) d.push_back(abs(w.at(i, i)));
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) {
                mpz_class g = gcd(d[i], d[j]);
                mpz_class l = (g == 0) ? mpz_class(0) : mpz_class(d[i] / g * d[j]);
                if (d[i] != g || d[j] != l) { d[i] = g; d[j] = l; changed = true; }
            }
    }
    std::erase(d, mpz_class(0));
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

RrefResult rref_mod_p(const IntMatrix& m, const Modulus& p) {
    if (!p.is_prime())
        throw DomainError("rref requires a prime modulus, got " + std::to_string(p.value()));
    const long long q = p.value();
    IntMatrix r = m;
    for (auto& v : r.a) v = mod_reduce(v, q);

    int rank = 0;
    for (int col = 0; col < r.cols && rank < r.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < r.rows; ++i)
            if (r.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < r.cols; ++j)
            std::swap(r.at(rank, j), r.at(pivot, j));
        long long inv = mod_inverse(r.at(rank, col), q);
        for (int j = 0; j < r.cols; ++j)
            r.at(rank, j) = mod_reduce(r.at(rank, j) * inv, q);
        for (int i = 0; i < r.rows; ++i) {
            if (i == rank || r.at(i, col) == 0) continue;
            long long f = r.at(i, col);
            for (int j = 0; j < r.cols; ++j)
                r.at(i, j) = mod_reduce(r.at(i, j) - f * r.at(rank, j), q);
        }
        ++rank;
    }
    return {std::move(r), rank};
}

std::vector<mpz_class> smith_normal_form(const IntMatrix& m) {
    BigMatrix w(m);
    const int n = std::min(w.rows, w.cols);
    for (int r = 0; r < n; ++r) {
        // Move a minimal-magnitude nonzero entry of the trailing block to
        // (r, r), then shrink the rest of its row and column by division
        // with remainder until both are clear. Each retry strictly reduces
        // the pivot magnitude, so this terminates.
        while (true) {
            int pi = -1, pj = -1;
            mpz_class best = 0;
            for (int i = r; i < w.rows; ++i)
                for (int j = r; j < w.cols; ++j) {
                    mpz_class v = abs(w.at(i, j));
                    if (v != 0 && (pi < 0 || v < best)) { pi = i; pj = j; best = v; }
                }
            if (pi < 0) return finalize_diagonal(w, r);
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(pi, j));
            for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, r), w.at(i, pj));

            bool clean = true;
            for (int i = r + 1; i < w.rows && clean; ++i)
                if (w.at(i, r) != 0) {
                    mpz_class f = w.at(i, r) / w.at(r, r);
                    for (int j = r; j < w.cols; ++j)
                        w.at(i, j) -= f * w.at(r, j);
                    if (w.at(i, r) != 0) clean = false;
                }
            for (int j = r + 1; j < w.cols && clean; ++j)
                if (w.at(r, j) != 0) {
                    mpz_class f = w.at(r, j) / w.at(r, r);
                    for (int i = r; i < w.rows; ++i)
                        w.at(i, j) -= f * w.at(i, r);
                    if (w.at(r, j) != 0) clean = false;
                }
            if (clean) break;
        }
    }
    return finalize_diagonal(w, n);
}

mpz_class count_homogeneous_solutions(const IntMatrix& m, const Modulus& mod) {
    std::vector<mpz_class> d = smith_normal_form(m);
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(mod.value()),
                  static_cast<unsigned long>(m.cols - static_cast<int>(d.size())));
    const mpz_class mv = static_cast<long>(mod.value());
    for (const mpz_class& di : d)
        count *= gcd(di, mv);
    return count;
}

} // namespace keikit
