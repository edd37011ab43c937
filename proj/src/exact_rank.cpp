#include "edgereg/exact_rank.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <gmpxx.h>

namespace edgereg {

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("field: prime must be in [2, 2^31)");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

std::string FieldSpec::label() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p);
}

SparseIntMatrix::SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
    columns_.resize(static_cast<std::size_t>(cols));
}

void SparseIntMatrix::add(int row, int col, long long value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::invalid_argument("matrix: index out of range");
    if (value != 0) columns_[static_cast<std::size_t>(col)].emplace_back(row, value);
}

std::vector<std::tuple<int, int, long long>> SparseIntMatrix::entries() const {
    std::vector<std::tuple<int, int, long long>> out;
    for (int c = 0; c < cols_; ++c) {
        auto column = columns_[static_cast<std::size_t>(c)];
        std::sort(column.begin(), column.end());
        for (std::size_t k = 0; k < column.size();) {
            long long sum = 0;
            std::size_t j = k;
            while (j < column.size() && column[j].first == column[k].first) sum += column[j++].second;
            if (sum != 0) out.emplace_back(column[k].first, c, sum);
            k = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Int64Overflow {};

struct OpsInt64 {
    using Value = long long;
    static bool is_unit(const Value& v) { return v == 1 || v == -1; }
    // a - k*b, throwing when the result leaves 64 bits
    static Value sub_mul(const Value& a, const Value& k, const Value& b) {
        __int128 r = static_cast<__int128>(a) - static_cast<__int128>(k) * b;
        if (r < -__int128(0x7fffffffffffffffLL) || r > __int128(0x7fffffffffffffffLL))
            throw Int64Overflow{};
        return static_cast<long long>(r);
    }
    // v * eps for unit eps
    static Value mul_unit(const Value& v, const Value& eps) {
        if (eps == 1) return v;
        if (v == std::numeric_limits<long long>::min()) throw Int64Overflow{};
        return -v;
    }
    static Value from_ll(long long v) { return v; }
    static mpz_class to_mpz(const Value& v) { return mpz_class(static_cast<long>(v)); }
};

struct OpsMpz {
    using Value = mpz_class;
    static bool is_unit(const Value& v) { return v == 1 || v == -1; }
    static Value sub_mul(const Value& a, const Value& k, const Value& b) { return a - k * b; }
    static Value mul_unit(const Value& v, const Value& eps) { return eps == 1 ? v : Value(-v); }
    static Value from_ll(long long v) { return Value(static_cast<long>(v)); }
    static const mpz_class& to_mpz(const Value& v) { return v; }
};

template <class Ops>
using Column = std::vector<std::pair<int, typename Ops::Value>>;

// col_target -= k * col_pivot, merging sorted columns; updates row counts.
template <class Ops>
Column<Ops> column_update(const Column<Ops>& target, const typename Ops::Value& k,
                          const Column<Ops>& pivot_col, std::vector<int>& row_nnz) {
    Column<Ops> out;
    out.reserve(target.size() + pivot_col.size());
    std::size_t a = 0, b = 0;
    while (a < target.size() || b < pivot_col.size()) {
        if (b == pivot_col.size() || (a < target.size() && target[a].first < pivot_col[b].first)) {
            out.push_back(target[a++]);
        } else if (a == target.size() || pivot_col[b].first < target[a].first) {
            typename Ops::Value v = Ops::sub_mul(typename Ops::Value(0), k, pivot_col[b].second);
            if (v != 0) {
                out.emplace_back(pivot_col[b].first, std::move(v));
                ++row_nnz[static_cast<std::size_t>(pivot_col[b].first)];
            }
            ++b;
        } else {
            typename Ops::Value v = Ops::sub_mul(target[a].second, k, pivot_col[b].second);
            if (v != 0)
                out.emplace_back(target[a].first, std::move(v));
            else
                --row_nnz[static_cast<std::size_t>(target[a].first)];
            ++a;
            ++b;
        }
    }
    return out;
}

// Fraction-free Gaussian elimination with full pivoting; exact over Z.
int bareiss_rank(std::vector<std::vector<mpz_class>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    mpz_class prev = 1;
    int rank = 0;
    for (int step = 0; step < std::min(rows, cols); ++step) {
        int pr = -1, pc = -1;
        for (int i = step; i < rows && pr < 0; ++i)
            for (int j = step; j < cols; ++j)
                if (a[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[step], a[pr]);
        if (pc != step)
            for (int i = 0; i < rows; ++i) std::swap(a[i][step], a[i][pc]);
        for (int i = step + 1; i < rows; ++i) {
            for (int j = step + 1; j < cols; ++j) {
                mpz_class num = a[i][j] * a[step][step] - a[i][step] * a[step][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][step] = 0;
        }
        prev = a[step][step];
        ++rank;
    }
    return rank;
}

// Unit-pivot sparse phase over the integers; leftover goes through Bareiss.
template <class Ops>
int rational_rank(const SparseIntMatrix& m,
                  const std::vector<std::tuple<int, int, long long>>& entries) {
    int nrows = m.rows(), ncols = m.cols();
    std::vector<Column<Ops>> cols(static_cast<std::size_t>(ncols));
    std::vector<int> row_nnz(static_cast<std::size_t>(nrows), 0);
    for (const auto& [r, c, v] : entries) {
        cols[static_cast<std::size_t>(c)].emplace_back(r, Ops::from_ll(v));
        ++row_nnz[static_cast<std::size_t>(r)];
    }
    std::vector<bool> col_active(static_cast<std::size_t>(ncols), true);
    std::vector<bool> row_active(static_cast<std::size_t>(nrows), true);

    int rank = 0;
    while (true) {
        // Cheapest unit pivot: minimize fill estimate, ties toward low indices.
        long long best_score = -1;
        int best_c = -1, best_r = -1;
        for (int c = 0; c < ncols; ++c) {
            if (!col_active[static_cast<std::size_t>(c)]) continue;
            const auto& column = cols[static_cast<std::size_t>(c)];
            long long cnnz = static_cast<long long>(column.size());
            for (const auto& [r, v] : column) {
                if (!Ops::is_unit(v)) continue;
                long long score = (cnnz - 1) * (row_nnz[static_cast<std::size_t>(r)] - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_c = c;
                    best_r = r;
                }
                if (best_score == 0) break;
            }
            if (best_score == 0) break;
        }
        if (best_c < 0) break;

        auto pivot_col = std::move(cols[static_cast<std::size_t>(best_c)]);
        typename Ops::Value eps{};
        for (const auto& [r, v] : pivot_col)
            if (r == best_r) eps = v;
        for (int c = 0; c < ncols; ++c) {
            if (c == best_c || !col_active[static_cast<std::size_t>(c)]) continue;
            auto& column = cols[static_cast<std::size_t>(c)];
            typename Ops::Value coeff{};
            bool hit = false;
            for (const auto& [r, v] : column)
                if (r == best_r) {
                    coeff = v;
                    hit = true;
                }
            if (!hit) continue;
            // eps is +-1 so k = coeff/eps = coeff*eps
            typename Ops::Value k = Ops::mul_unit(coeff, eps);
            column = column_update<Ops>(column, k, pivot_col, row_nnz);
        }
        for (const auto& entry : pivot_col) --row_nnz[static_cast<std::size_t>(entry.first)];
        col_active[static_cast<std::size_t>(best_c)] = false;
        row_active[static_cast<std::size_t>(best_r)] = false;
        // Entries of eliminated columns in best_r's row are gone with their columns;
        // surviving columns have no best_r entry now, so clear its count.
        row_nnz[static_cast<std::size_t>(best_r)] = 0;
        ++rank;
    }

    // Dense fraction-free cleanup of whatever has no unit entries left.
    std::vector<int> live_rows, live_cols;
    for (int r = 0; r < nrows; ++r)
        if (row_active[static_cast<std::size_t>(r)] && row_nnz[static_cast<std::size_t>(r)] > 0)
            live_rows.push_back(r);
    for (int c = 0; c < ncols; ++c)
        if (col_active[static_cast<std::size_t>(c)] && !cols[static_cast<std::size_t>(c)].empty())
            live_cols.push_back(c);
    if (!live_rows.empty() && !live_cols.empty()) {
        std::vector<int> row_index(static_cast<std::size_t>(nrows), -1);
        for (std::size_t k = 0; k < live_rows.size(); ++k)
            row_index[static_cast<std::size_t>(live_rows[k])] = static_cast<int>(k);
        std::vector<std::vector<mpz_class>> dense(
            live_rows.size(), std::vector<mpz_class>(live_cols.size(), mpz_class(0)));
        for (std::size_t k = 0; k < live_cols.size(); ++k)
            for (const auto& [r, v] : cols[static_cast<std::size_t>(live_cols[k])]) {
                int ri = row_index[static_cast<std::size_t>(r)];
                if (ri >= 0) dense[static_cast<std::size_t>(ri)][k] = Ops::to_mpz(v);
            }
        rank += bareiss_rank(std::move(dense));
    }
    return rank;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

int prime_rank(const SparseIntMatrix& m,
               const std::vector<std::tuple<int, int, long long>>& entries, std::uint64_t p) {
    int nrows = m.rows(), ncols = m.cols();
    std::vector<std::vector<std::pair<int, std::uint64_t>>> cols(static_cast<std::size_t>(ncols));
    std::vector<int> row_nnz(static_cast<std::size_t>(nrows), 0);
    for (const auto& [r, c, v] : entries) {
        long long residue = v % static_cast<long long>(p);
        if (residue < 0) residue += static_cast<long long>(p);
        if (residue == 0) continue;
        cols[static_cast<std::size_t>(c)].emplace_back(r, static_cast<std::uint64_t>(residue));
        ++row_nnz[static_cast<std::size_t>(r)];
    }
    std::vector<bool> col_active(static_cast<std::size_t>(ncols), true);

    int rank = 0;
    while (true) {
        long long best_score = -1;
        int best_c = -1, best_r = -1;
        for (int c = 0; c < ncols; ++c) {
            if (!col_active[static_cast<std::size_t>(c)] || cols[static_cast<std::size_t>(c)].empty())
                continue;
            const auto& column = cols[static_cast<std::size_t>(c)];
            long long cnnz = static_cast<long long>(column.size());
            for (const auto& [r, v] : column) {
                long long score = (cnnz - 1) * (row_nnz[static_cast<std::size_t>(r)] - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_c = c;
                    best_r = r;
                }
                if (best_score == 0) break;
            }
            if (best_score == 0) break;
        }
        if (best_c < 0) break;

        auto pivot_col = std::move(cols[static_cast<std::size_t>(best_c)]);
        std::uint64_t eps = 0;
        for (const auto& [r, v] : pivot_col)
            if (r == best_r) eps = v;
        std::uint64_t inv = mod_pow(eps, p - 2, p);
        for (int c = 0; c < ncols; ++c) {
            if (c == best_c || !col_active[static_cast<std::size_t>(c)]) continue;
            auto& column = cols[static_cast<std::size_t>(c)];
            std::uint64_t coeff = 0;
            bool hit = false;
            for (const auto& [r, v] : column)
                if (r == best_r) {
                    coeff = v;
                    hit = true;
                }
            if (!hit) continue;
            std::uint64_t k = coeff * inv % p;
            std::vector<std::pair<int, std::uint64_t>> out;
            out.reserve(column.size() + pivot_col.size());
            std::size_t a = 0, b = 0;
            while (a < column.size() || b < pivot_col.size()) {
                if (b == pivot_col.size() ||
                    (a < column.size() && column[a].first < pivot_col[b].first)) {
                    out.push_back(column[a++]);
                } else if (a == column.size() || pivot_col[b].first < column[a].first) {
                    std::uint64_t v = (p - k * pivot_col[b].second % p) % p;
                    if (v) {
                        out.emplace_back(pivot_col[b].first, v);
                        ++row_nnz[static_cast<std::size_t>(pivot_col[b].first)];
                    }
                    ++b;
                } else {
                    std::uint64_t v = (column[a].second + p - k * pivot_col[b].second % p) % p;
                    if (v)
                        out.emplace_back(column[a].first, v);
                    else
                        --row_nnz[static_cast<std::size_t>(column[a].first)];
                    ++a;
                    ++b;
                }
            }
            column = std::move(out);
        }
        for (const auto& entry : pivot_col) --row_nnz[static_cast<std::size_t>(entry.first)];
        row_nnz[static_cast<std::size_t>(best_r)] = 0;
        col_active[static_cast<std::size_t>(best_c)] = false;
        ++rank;
    }
    return rank;
}

}  // namespace

int exact_rank(const SparseIntMatrix& m, const FieldSpec& field) {
    auto entries = m.entries();
    if (entries.empty()) return 0;
    if (!field.is_rationals()) return prime_rank(m, entries, field.p);
    try {
        return rational_rank<OpsInt64>(m, entries);
    } catch (const Int64Overflow&) {
        return rational_rank<OpsMpz>(m, entries);
    }
}

}  // namespace edgereg
