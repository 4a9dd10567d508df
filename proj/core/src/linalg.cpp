#include "apery/linalg.hpp"

#include <gmpxx.h>

namespace apery {

namespace {

// both exceed 2^20 and any desk-scale multiplicity
constexpr std::uint64_t kPrimeA = 1'000'000'007ULL;
constexpr std::uint64_t kPrimeB = 998'244'353ULL;

std::uint64_t mod_reduce(Int v, std::uint64_t p) {
    Int r = v % static_cast<Int>(p);
    if (r < 0) r += static_cast<Int>(p);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

}  // namespace

int rank_mod_p(const IntMatrix& rows, std::uint64_t p) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::vector<std::vector<std::uint64_t>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<std::uint64_t> row(ncols);
        for (std::size_t j = 0; j < ncols; ++j) row[j] = mod_reduce(r[j], p);
        a.push_back(std::move(row));
    }

    int rank = 0;
    for (std::size_t col = 0; col < ncols && rank < static_cast<int>(a.size()); ++col) {
        std::size_t pivot = a.size();
        for (std::size_t i = rank; i < a.size(); ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == a.size()) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[pivot]);
        auto& prow = a[static_cast<std::size_t>(rank)];
        const std::uint64_t inv = mod_pow(prow[col], p - 2, p);
        for (std::size_t j = col; j < ncols; ++j) prow[j] = prow[j] * inv % p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || a[i][col] == 0) continue;
            const std::uint64_t factor = a[i][col];
            for (std::size_t j = col; j < ncols; ++j) {
                a[i][j] = (a[i][j] + (p - factor) * prow[j]) % p;
            }
        }
        ++rank;
    }
    return rank;
}

int rank_rational(const IntMatrix& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::vector<std::vector<mpq_class>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<mpq_class> row(ncols);
        for (std::size_t j = 0; j < ncols; ++j) row[j] = static_cast<long>(r[j]);
        a.push_back(std::move(row));
    }

    int rank = 0;
    for (std::size_t col = 0; col < ncols && rank < static_cast<int>(a.size()); ++col) {
        std::size_t pivot = a.size();
        for (std::size_t i = rank; i < a.size(); ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == a.size()) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[pivot]);
        auto& prow = a[static_cast<std::size_t>(rank)];
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            const mpq_class factor = a[i][col] / prow[col];
            for (std::size_t j = col; j < ncols; ++j) a[i][j] -= factor * prow[j];
        }
        ++rank;
    }
    return rank;
}

int exact_rank(const IntMatrix& rows) {
    const int ra = rank_mod_p(rows, kPrimeA);
    const int rb = rank_mod_p(rows, kPrimeB);
    if (ra == rb) return ra;
    return rank_rational(rows);
}

}  // namespace apery
