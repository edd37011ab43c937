#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include <boost/rational.hpp>

#include "edgereg/exact_rank.hpp"

using namespace edgereg;

namespace {

using Rat = boost::rational<long long>;

// Independent reference: textbook Gaussian elimination over the rationals.
int dense_rational_rank(std::vector<std::vector<Rat>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != Rat(0)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == Rat(0)) continue;
            Rat factor = a[r][c] / a[rank][c];
            for (int j = c; j < cols; ++j) a[r][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SparseIntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (a[r][c]) m.add(r, c, a[r][c]);
    return m;
}

std::vector<std::vector<Rat>> to_rational(const std::vector<std::vector<long long>>& a) {
    std::vector<std::vector<Rat>> out;
    for (const auto& row : a) {
        out.emplace_back();
        for (long long v : row) out.back().emplace_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("field specs") {
    CHECK(FieldSpec::rationals().label() == "Q");
    CHECK(FieldSpec::prime(65537).label() == "F65537");
    CHECK(FieldSpec::prime(2).p == 2);
    CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(65536), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t{1} << 31), std::invalid_argument);
}

TEST_CASE("matrix entry bookkeeping") {
    SparseIntMatrix m(2, 2);
    m.add(0, 0, 3);
    m.add(0, 0, -3);  // cancels
    m.add(1, 1, 2);
    m.add(1, 1, 5);
    auto entries = m.entries();
    REQUIRE(entries.size() == 1);
    CHECK(entries[0] == std::tuple<int, int, long long>{1, 1, 7});
    CHECK_THROWS_AS(m.add(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(SparseIntMatrix(-1, 2), std::invalid_argument);
}

TEST_CASE("rank of fixed matrices") {
    CHECK(exact_rank(from_dense({{1, 0}, {0, 1}}), FieldSpec::rationals()) == 2);
    CHECK(exact_rank(from_dense({{0, 0}, {0, 0}}), FieldSpec::rationals()) == 0);
    CHECK(exact_rank(from_dense({{1, 2}, {2, 4}}), FieldSpec::rationals()) == 1);
    CHECK(exact_rank(from_dense({{2}}), FieldSpec::rationals()) == 1);       // dense path
    CHECK(exact_rank(from_dense({{2, 0}, {0, 3}}), FieldSpec::rationals()) == 2);
    CHECK(exact_rank(from_dense({{2, 4}, {4, 8}}), FieldSpec::rationals()) == 1);
    CHECK(exact_rank(SparseIntMatrix(0, 5), FieldSpec::rationals()) == 0);
    CHECK(exact_rank(SparseIntMatrix(5, 0), FieldSpec::rationals()) == 0);

    // signed incidence matrix of K4: rank n-1
    std::vector<std::vector<long long>> inc(4, std::vector<long long>(6, 0));
    int e = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v, ++e) {
            inc[u][e] = 1;
            inc[v][e] = -1;
        }
    CHECK(exact_rank(from_dense(inc), FieldSpec::rationals()) == 3);
    CHECK(exact_rank(from_dense(inc), FieldSpec::prime(1000003)) == 3);
    CHECK(exact_rank(from_dense(inc), FieldSpec::prime(2)) == 3);
}

TEST_CASE("prime fields see torsion-style collapses") {
    CHECK(exact_rank(from_dense({{2}}), FieldSpec::prime(2)) == 0);
    CHECK(exact_rank(from_dense({{2}}), FieldSpec::prime(1000003)) == 1);
    CHECK(exact_rank(from_dense({{6, 0}, {0, 10}}), FieldSpec::prime(2)) == 0);
    CHECK(exact_rank(from_dense({{6, 0}, {0, 10}}), FieldSpec::prime(3)) == 1);
    CHECK(exact_rank(from_dense({{6, 0}, {0, 10}}), FieldSpec::prime(5)) == 1);
}

TEST_CASE("64-bit overflow falls back to exact big integers") {
    // Entries this size overflow the rational oracle, so ranks are by hand.
    long long big = 1LL << 62;
    // Eliminating with the unit pivot doubles the large entry past 2^63.
    auto m = from_dense({{1, big}, {-1, big}});
    CHECK(exact_rank(m, FieldSpec::rationals()) == 2);

    // determinant 2*big, so full rank
    auto wide = from_dense({{1, big, big}, {-1, big, -big}, {0, 1, 1}});
    CHECK(exact_rank(wide, FieldSpec::rationals()) == 3);

    // second column is big times the first
    auto dep = from_dense({{1, big}, {-1, -big}});
    CHECK(exact_rank(dep, FieldSpec::rationals()) == 1);
}

TEST_CASE("rank agrees with dense rational elimination on random matrices") {
    std::mt19937 gen(42);
    for (int round = 0; round < 300; ++round) {
        int rows = 1 + static_cast<int>(gen() % 8);
        int cols = 1 + static_cast<int>(gen() % 8);
        std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols, 0));
        for (auto& row : a)
            for (auto& v : row) {
                int mode = static_cast<int>(gen() % 10);
                if (mode < 4)
                    v = 0;  // keep it sparse
                else
                    v = static_cast<int>(gen() % 11) - 5;
            }
        int expect = dense_rational_rank(to_rational(a));
        CAPTURE(round);
        CHECK(exact_rank(from_dense(a), FieldSpec::rationals()) == expect);
        // large prime: agreement on these small integer matrices
        CHECK(exact_rank(from_dense(a), FieldSpec::prime(1000003)) == expect);
    }
}

TEST_CASE("rank agrees on denser random matrices without unit entries") {
    std::mt19937 gen(99);
    for (int round = 0; round < 100; ++round) {
        int rows = 1 + static_cast<int>(gen() % 6);
        int cols = 1 + static_cast<int>(gen() % 6);
        std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols, 0));
        for (auto& row : a)
            for (auto& v : row) v = 2 * (static_cast<int>(gen() % 7) - 3);  // even entries only
        CAPTURE(round);
        CHECK(exact_rank(from_dense(a), FieldSpec::rationals()) ==
              dense_rational_rank(to_rational(a)));
    }
}
