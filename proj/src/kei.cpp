#include "kei.hpp"

#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace keikit {

std::string format_violations(const std::vector<AxiomViolation>& v) {
    std::ostringstream os;
    os << "invalid kei table: " << v.size() << " violation(s)";
    for (const auto& av : v) {
        os << "\n  " << av.axiom << " at (" << av.x;
        if (av.y) os << ", " << av.y;
        if (av.z) os << ", " << av.z;
        os << ")";
    }
    return os.str();
}

std::vector<AxiomViolation> validate_kei_table(int n, const std::vector<int>& t) {
    if (n < 1)
        throw DomainError("kei order must be positive");
    if (t.size() != static_cast<size_t>(n) * n)
        throw DomainError("kei table size does not match order");

    std::vector<AxiomViolation> out;
    auto raw = [&](int i, int j) { return t[static_cast<size_t>(i - 1) * n + (j - 1)]; };
    bool in_range = true;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (raw(i, j) < 1 || raw(i, j) > n) {
                out.push_back({"range", i, j, 0});
                in_range = false;
            }
    if (!in_range) return out;

    for (int x = 1; x <= n; ++x)
        if (raw(x, x) != x) out.push_back({"idempotence", x, 0, 0});
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (raw(raw(x, y), y) != x) out.push_back({"involution", x, y, 0});
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                if (raw(raw(x, y), z) != raw(raw(x, z), raw(y, z)))
                    out.push_back({"self-distributivity", x, y, z});
    return out;
}

FiniteKei kei_from_table(int n, std::vector<int> flat_table) {
    auto violations = validate_kei_table(n, flat_table);
    if (!violations.empty())
        throw KeiValidationError(std::move(violations));
    return FiniteKei(n, std::move(flat_table));
}

FiniteKei takasaki_kei(int n) {
    if (n < 1)
        throw DomainError("takasaki kei needs order >= 1");
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[static_cast<size_t>(i) * n + j] = static_cast<int>(((2 * j - i) % n + n) % n) + 1;
    return FiniteKei(n, std::move(t));
}

FiniteKei alexander_kei(int n, long long t) {
    if (n < 1)
        throw DomainError("alexander kei needs order >= 1");
    auto norm = [&](long long v) { return static_cast<int>((v % n + n) % n); };
    if (norm(t * t) != norm(1))
        throw DomainError("alexander kei needs t^2 = 1 mod n, got t = " + std::to_string(t) +
                          " with n = " + std::to_string(n));
    std::vector<int> tab(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            tab[static_cast<size_t>(i) * n + j] = norm(t * i + (1 - t) * j) + 1;
    return FiniteKei(n, std::move(tab));
}

bool is_homomorphism(const std::vector<int>& f, const FiniteKei& x, const FiniteKei& y) {
    if (f.size() != static_cast<size_t>(x.order()))
        throw DomainError("map size does not match source kei order");
    for (int v : f)
        if (v < 1 || v > y.order())
            throw DomainError("map value out of range");
    for (int a = 1; a <= x.order(); ++a)
        for (int b = 1; b <= x.order(); ++b)
            if (f[x.op(a, b) - 1] != y.op(f[a - 1], f[b - 1]))
                return false;
    return true;
}

FiniteKei parse_kei(const std::string& text) {
    int n = 0;
    std::vector<int> flat;
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad kei JSON: ") + e.what());
        }
        if (!j.contains("order") || !j.contains("table"))
            throw ParseError("kei JSON needs \"order\" and \"table\"");
        n = j["order"].get<int>();
        if (!j["table"].is_array() || static_cast<int>(j["table"].size()) != n)
            throw ParseError("kei table must have `order` rows");
        for (const auto& row : j["table"]) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError("kei table must be square");
            for (const auto& v : row) flat.push_back(v.get<int>());
        }
    } else {
        std::istringstream is(text);
        std::string line;
        std::vector<std::vector<int>> rows;
        while (std::getline(is, line)) {
            std::istringstream ls(line);
            std::vector<int> row;
            int v;
            while (ls >> v) row.push_back(v);
            if (!ls.eof())
                throw ParseError("kei text table: non-integer token");
            if (!row.empty()) rows.push_back(std::move(row));
        }
        n = static_cast<int>(rows.size());
        if (n == 0)
            throw ParseError("empty kei table");
        for (auto& row : rows) {
            if (static_cast<int>(row.size()) != n)
                throw ParseError("kei text table must be square");
            flat.insert(flat.end(), row.begin(), row.end());
        }
    }
    return kei_from_table(n, std::move(flat));
}

std::string kei_to_json(const FiniteKei& k) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= k.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= k.order(); ++j) row.push_back(k.op(i, j));
        rows.push_back(std::move(row));
    }
    nlohmann::json j{{"order", k.order()}, {"table", std::move(rows)}};
    return j.dump();
}

} // namespace keikit
