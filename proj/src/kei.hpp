#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace keikit {

// One failed axiom instance. Axiom ids: "idempotence" (x>x = x),
// "involution" ((x>y)>y = x), "self-distributivity"
// ((x>y)>z = (x>z)>(y>z)), "range" (entry outside 1..n).
struct AxiomViolation {
    std::string axiom;
    int x = 0;
    int y = 0;
    int z = 0; // 0 when the axiom involves fewer than three elements

    bool operator==(const AxiomViolation&) const = default;
};

std::string format_violations(const std::vector<AxiomViolation>& v);

// Thrown by kei_from_table; carries the full violation list.
struct KeiValidationError : DomainError {
    std::vector<AxiomViolation> violations;
    explicit KeiValidationError(std::vector<AxiomViolation> v)
        : DomainError(format_violations(v)), violations(std::move(v)) {}
};

// A finite kei (involutory quandle) given by its operation table.
// Elements are 1-indexed; table()[i-1][j-1] = k means x_i > x_j = x_k,
// matching the usual matrix presentation.
class FiniteKei {
public:
    FiniteKei(int n, std::vector<int> flat_table) : n_(n), t_(std::move(flat_table)) {}

    int order() const { return n_; }
    int op(int i, int j) const { return t_[static_cast<size_t>(i - 1) * n_ + (j - 1)]; }
    const std::vector<int>& flat() const { return t_; }

    bool operator==(const FiniteKei&) const = default;

private:
    int n_;
    std::vector<int> t_; // row-major, values in 1..n
};

// All axiom violations of a candidate table (empty means valid).
// Out-of-range entries are reported as "range" and suppress axiom checks
// that would read through them.
std::vector<AxiomViolation> validate_kei_table(int n, const std::vector<int>& flat_table);

// Validated constructor: throws KeiValidationError listing every violation.
FiniteKei kei_from_table(int n, std::vector<int> flat_table);

// Takasaki kei on Z_n: x > y = 2y - x (mod n), element x_{i+1} <-> residue i.
FiniteKei takasaki_kei(int n);

// Alexander kei on Z_n: x > y = t x + (1 - t) y (mod n). Requires t^2 = 1 (mod n).
FiniteKei alexander_kei(int n, long long t);

// f maps elements of x into y (f[i-1] in 1..y.order()); true iff
// f(a > b) = f(a) > f(b) for all pairs.
bool is_homomorphism(const std::vector<int>& f, const FiniteKei& x, const FiniteKei& y);

// File formats: JSON {"order": n, "table": [[...]]} or plain text
// (n lines of n integers). Sniffs on leading '{'.
FiniteKei parse_kei(const std::string& text);
std::string kei_to_json(const FiniteKei& k);

} // namespace keikit
