#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <arc/smith.hpp>

#include "support.hpp"

using arc::Int;
using arc::SparseIntMatrix;
using boost::multiprecision::abs;
using boost::multiprecision::gcd;

namespace {

SparseIntMatrix dense(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    SparseIntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, Int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    return m;
}

SparseIntMatrix from_table(const std::vector<std::vector<Int>>& a) {
    int r = static_cast<int>(a.size());
    int c = r ? static_cast<int>(a[0].size()) : 0;
    SparseIntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

void check_transforms(const SparseIntMatrix& m) {
    arc::SmithResult s = arc::smith_normal_form(m, true);
    REQUIRE(s.has_transforms);

    SparseIntMatrix u = from_table(s.U);
    SparseIntMatrix v = from_table(s.V);
    SparseIntMatrix product = arc::sparse_mul(arc::sparse_mul(u, m), v);

    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            Int want = (i == j && i < static_cast<int>(s.diagonal.size()))
                           ? s.diagonal[static_cast<std::size_t>(i)]
                           : Int(0);
            REQUIRE(product.get(i, j) == want);
        }

    REQUIRE(abs(support::determinant(u)) == 1);
    REQUIRE(abs(support::determinant(v)) == 1);

    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
        REQUIRE(s.diagonal[i] > 0);
        if (i + 1 < s.diagonal.size()) REQUIRE(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
}

}  // namespace

TEST_CASE("invariant factors of small matrices") {
    SECTION("gcd and determinant pin a 2x2 example") {
        auto s = arc::smith_normal_form(dense({{2, 4}, {6, 8}}));
        REQUIRE(s.diagonal == std::vector<Int>{2, 4});

        Int g = gcd(gcd(Int(2), Int(4)), gcd(Int(6), Int(8)));
        Int det = Int(2) * 8 - Int(4) * 6;
        REQUIRE(s.diagonal[0] == g);
        REQUIRE(s.diagonal[0] * s.diagonal[1] == abs(det));
    }

    SECTION("identity and zero") {
        REQUIRE(arc::smith_normal_form(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).diagonal ==
                std::vector<Int>{1, 1, 1});
        REQUIRE(arc::smith_normal_form(dense({{0, 0}, {0, 0}, {0, 0}})).diagonal.empty());
        REQUIRE(arc::smith_normal_form(SparseIntMatrix(0, 4)).diagonal.empty());
    }

    SECTION("divisibility is enforced across separate pivots") {
        REQUIRE(arc::smith_normal_form(dense({{2, 0}, {0, 3}})).diagonal ==
                std::vector<Int>{1, 6});
        REQUIRE(arc::smith_normal_form(dense({{4, 0}, {0, 6}})).diagonal ==
                std::vector<Int>{2, 12});
    }

    SECTION("unimodular input") {
        REQUIRE(arc::smith_normal_form(dense({{1, 2}, {3, 4}})).diagonal ==
                std::vector<Int>{1, 2});
    }

    SECTION("rank of a singular matrix") {
        REQUIRE(arc::matrix_rank(dense({{1, 2}, {2, 4}})) == 1);
        REQUIRE(arc::matrix_rank(dense({{1, 2}, {3, 4}})) == 2);
    }
}

TEST_CASE("transform matrices reconstruct the diagonal") {
    check_transforms(dense({{2, 4}, {6, 8}}));
    check_transforms(dense({{2, 0}, {0, 3}}));
    check_transforms(dense({{0, 0}, {0, 0}}));
    check_transforms(dense({{6, 4, 2}, {2, 8, 10}}));
    check_transforms(dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
}

TEST_CASE("transforms on seeded random matrices") {
    std::mt19937 eng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(eng() % 5);
        int c = 1 + static_cast<int>(eng() % 6);
        SparseIntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (eng() % 2 == 0) m.set(i, j, Int(static_cast<long long>(eng() % 19)) - 9);
        check_transforms(m);
    }
}
