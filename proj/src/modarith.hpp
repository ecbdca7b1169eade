#pragma once

#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace keikit {

// Dense integer matrix, row-major. Entries are plain machine integers;
// inputs in this project stay small (presentation matrices hold values
// in (-m, m)). Elimination work happens in arbitrary precision.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const IntMatrix& o) const = default;
};

// A validated modulus m >= 2 with a cached primality flag.
class Modulus {
public:
    explicit Modulus(long long m);
    long long value() const { return m_; }
    bool is_prime() const { return prime_; }

private:
    long long m_;
    bool prime_;
};

// Residue of v in [0, m).
long long mod_reduce(long long v, long long m);

// Inverse of a mod m; DomainError when gcd(a, m) != 1.
long long mod_inverse(long long a, long long m);

struct RrefResult {
    IntMatrix rref;
    int rank = 0;
};

// Reduced row echelon form over the field Z_p. Rejects composite p.
RrefResult rref_mod_p(const IntMatrix& m, const Modulus& p);

// Invariant factors d_1 | d_2 | ... of an integer matrix, zeros stripped.
// An empty result means the zero matrix (or an empty one).
std::vector<mpz_class> smith_normal_form(const IntMatrix& m);

// |{x in (Z_m)^cols : A x == 0 (mod m)}|, via the Smith normal form:
// m^(cols - r) * prod_i gcd(d_i, m).
mpz_class count_homogeneous_solutions(const IntMatrix& m, const Modulus& mod);

} // namespace keikit
