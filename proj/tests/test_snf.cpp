#include <catch_amalgamated.hpp>

#include "surgcalc/snf.hpp"
#include "support/generators.hpp"

using namespace surgcalc;

namespace {

void check_snf_invariants(const IntMatrix& a, const SNFDecomposition& s) {
    REQUIRE(s.u * a * s.v == s.d);
    REQUIRE(abs(s.u.determinant()) == 1);
    REQUIRE(abs(s.v.determinant()) == 1);
    const std::size_t k = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < k; ++i) {
        REQUIRE(s.d.at(i, i) >= 0);
        if (i + 1 < k && s.d.at(i, i) != 0) REQUIRE(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
}

}  // namespace

TEST_CASE("SNF of diag(2,3) is diag(1,6)") {
    const IntMatrix a{{2, 0}, {0, 3}};
    const auto s = smith_normal_form(a);
    check_snf_invariants(a, s);
    CHECK(s.diagonal(0) == 1);
    CHECK(s.diagonal(1) == 6);
    // |det| is preserved by unimodular factors
    CHECK(abs(a.determinant()) == s.diagonal(0) * s.diagonal(1));
}

TEST_CASE("SNF of the identity is the identity") {
    for (std::size_t n : {std::size_t(1), std::size_t(3), std::size_t(5)}) {
        const IntMatrix a = IntMatrix::identity(n);
        const auto s = smith_normal_form(a);
        check_snf_invariants(a, s);
        CHECK(s.d == IntMatrix::identity(n));
        CHECK(s.rank == n);
    }
}

TEST_CASE("SNF of a rank-1 matrix") {
    const IntMatrix a{{1, 1}, {2, 2}};
    const auto s = smith_normal_form(a);
    check_snf_invariants(a, s);
    CHECK(s.diagonal(0) == 1);  // gcd of the entries
    CHECK(s.diagonal(1) == 0);  // determinant 0, rank 1
    CHECK(s.rank == 1);
}

TEST_CASE("SNF of empty matrices") {
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {3, 0}}) {
        const IntMatrix a(m, n);
        const auto s = smith_normal_form(a);
        check_snf_invariants(a, s);
        CHECK(s.rank == 0);
        CHECK(s.u.rows() == m);
        CHECK(s.v.rows() == n);
    }
}

TEST_CASE("SNF property suite: 1000+ random small matrices") {
    testsupport::Rng rng(20240812);
    int checked = 0;
    while (checked < 1000) {
        const std::size_t m = static_cast<std::size_t>(testsupport::random_in(rng, 0, 4));
        const std::size_t n = static_cast<std::size_t>(testsupport::random_in(rng, 0, 4));
        const IntMatrix a = testsupport::random_matrix(rng, m, n, -5, 5);
        const auto s = smith_normal_form(a);
        check_snf_invariants(a, s);
        if (m == n && m > 0) {
            const Int det = a.determinant();
            if (det != 0) {
                Int prod = 1;
                for (std::size_t i = 0; i < m; ++i) prod *= s.diagonal(i);
                REQUIRE(prod == abs(det));
            }
        }
        ++checked;
    }
}

TEST_CASE("SNF handles entries that force coefficient growth") {
    // worst-case-ish dense matrix with mixed signs
    const IntMatrix a{{-5, 4, -3, 5}, {5, -5, 5, -4}, {4, 5, 5, 5}, {-3, -5, 4, -5}};
    const auto s = smith_normal_form(a);
    check_snf_invariants(a, s);
    Int prod = 1;
    for (std::size_t i = 0; i < 4; ++i) prod *= s.diagonal(i);
    CHECK(prod == abs(a.determinant()));
}

TEST_CASE("SNF stays exact far past 64 bits") {
    // determinant of diag(large primes) overflows any machine word
    IntMatrix a(4, 4);
    const long long primes[4] = {1000000007, 1000000009, 1000000021, 1000000033};
    for (std::size_t i = 0; i < 4; ++i) a.at(i, i) = primes[i];
    a.at(0, 1) = 1;  // off-diagonal noise to force real elimination
    a.at(1, 0) = 1;
    const auto s = smith_normal_form(a);
    check_snf_invariants(a, s);
    Int prod = 1;
    for (std::size_t i = 0; i < 4; ++i) prod *= s.diagonal(i);
    CHECK(prod == abs(a.determinant()));
    CHECK(a.determinant() > Int("1000000000000000000"));  // > int64 range / 9
}

TEST_CASE("SNF of a denser 10x10 random matrix") {
    testsupport::Rng rng(20240833);
    const IntMatrix a = testsupport::random_matrix(rng, 10, 10, -50, 50);
    const auto s = smith_normal_form(a);
    check_snf_invariants(a, s);
    if (a.determinant() != 0) {
        Int prod = 1;
        for (std::size_t i = 0; i < 10; ++i) prod *= s.diagonal(i);
        CHECK(prod == abs(a.determinant()));
    }
}
