#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace edgereg {

// Coefficient field for homology ranks: the rationals (field of record) or a
// prime field fast path.  Results over a prime can differ from the rational
// answer (torsion); callers wanting the fast path must cross-check.
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint64_t p);  // p prime, 2 <= p < 2^31

    bool is_rationals() const { return kind == Kind::rationals; }
    std::string label() const;

    bool operator==(const FieldSpec&) const = default;
};

// Sparse integer matrix; duplicate additions accumulate.
class SparseIntMatrix {
public:
    SparseIntMatrix(int rows, int cols);

    void add(int row, int col, long long value);
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Normalized entries (row, col, value), zeros dropped, sorted.
    std::vector<std::tuple<int, int, long long>> entries() const;

private:
    friend int exact_rank(const SparseIntMatrix&, const FieldSpec&);
    int rows_;
    int cols_;
    std::vector<std::vector<std::pair<int, long long>>> columns_;
};

// Exact rank over the requested field.  Over the rationals: elimination with
// unit pivots in 64-bit integers (exact, falls back to arbitrary precision on
// overflow), then fraction-free Bareiss on whatever dense core remains.
int exact_rank(const SparseIntMatrix& m, const FieldSpec& field);

}  // namespace edgereg
