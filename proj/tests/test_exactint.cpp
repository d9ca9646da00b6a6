#include <random>

#include "atorsion/error.hpp"
#include "atorsion/exactint.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace atorsion;

namespace {

oracle::Mat to_oracle(const IntMatrix& a) {
  oracle::Mat m(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

void check_decomposition(const IntMatrix& a, const SnfResult& s) {
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.D.is_diagonal());
  CHECK(abs(oracle::det(to_oracle(s.U))) == 1);
  CHECK(abs(oracle::det(to_oracle(s.V))) == 1);
  const auto& d = s.invariant_factors;
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    CHECK(d[i] == s.D(i, i));
    if (i + 1 < d.size()) CHECK((d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0));
  }
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
  return a;
}

}  // namespace

TEST_CASE("matrix text round trip") {
  const auto a = parse_matrix("# relations\n2 3\n1 -2 3\n\n4 5 123456789012345678901234567890\n");
  REQUIRE(a.rows() == 2);
  REQUIRE(a.cols() == 3);
  CHECK(a(0, 1) == -2);
  CHECK(a(1, 2) == BigInt("123456789012345678901234567890"));
  CHECK(parse_matrix(format_matrix(a)) == a);
}

TEST_CASE("matrix parse errors carry line numbers") {
  auto message = [](const char* text) {
    try {
      parse_matrix(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("2 2\n1 2\n3 x\n").find("line 3") != std::string::npos);
  CHECK(message("2 2\n1 2 3\n4 5\n").find("line 2") != std::string::npos);
  CHECK(message("2 2\n1 2\n").find("rows") != std::string::npos);
  CHECK(message("").find("no error") == std::string::npos);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_matrix(rng, 5, 5, 50);
    CHECK(determinant(a) == oracle::det(to_oracle(a)));
  }
}

TEST_CASE("smith form of small hand examples") {
  SUBCASE("coprime diagonal") {
    const IntMatrix a{{2, 0}, {0, 3}};
    const auto s = snf(a);
    CHECK(s.invariant_factors == std::vector<BigInt>{1, 6});
    check_decomposition(a, s);
  }
  SUBCASE("common factor") {
    const IntMatrix a{{2, 4}, {6, 8}};
    const auto s = snf(a);
    CHECK(s.invariant_factors == std::vector<BigInt>{2, 4});
    check_decomposition(a, s);
  }
  SUBCASE("one by one zero") {
    const IntMatrix a{{0}};
    const auto s = snf(a);
    CHECK(s.invariant_factors == std::vector<BigInt>{0});
    CHECK(s.rank() == 0);
  }
  SUBCASE("wide and tall") {
    const IntMatrix wide{{6, 10, 15}};
    CHECK(snf(wide).invariant_factors == std::vector<BigInt>{1});
    const IntMatrix tall{{4}, {6}, {0}};
    CHECK(snf(tall).invariant_factors == std::vector<BigInt>{2});
  }
  SUBCASE("identity") {
    CHECK(snf(IntMatrix::identity(3)).invariant_factors == std::vector<BigInt>{1, 1, 1});
  }
  SUBCASE("empty matrix is rejected") {
    CHECK_THROWS_AS(snf(IntMatrix(0, 3)), Error);
  }
}

TEST_CASE("smith form agrees with determinantal divisors") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix a = random_matrix(rng, r, c, t % 3 == 0 ? 3 : 40);
    if (t % 4 == 1 && r > 1)
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = 2 * a(0, j);
    const auto s = snf(a);
    CAPTURE(format_matrix(a));
    CHECK(s.invariant_factors == oracle::invariant_factors(to_oracle(a)));
    check_decomposition(a, s);
  }
}

TEST_CASE("smith form on larger matrices keeps the identities") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 6; ++t) {
    const auto a = random_matrix(rng, 20 + rng() % 10, 20 + rng() % 10, 1'000'000);
    check_decomposition(a, snf(a));
  }
}

TEST_CASE("element order") {
  // Z^2 / <(2, 0), (0, 3)>
  const IntMatrix r{{2, 0}, {0, 3}};
  CHECK(element_order(r, 0).value == BigInt(2));
  CHECK(element_order(r, 1).value == BigInt(3));
  CHECK(element_order(IntMatrix{{2, 0}}, 0).value == BigInt(2));
  CHECK_FALSE(element_order(IntMatrix{{0, 1}}, 0).finite());
  // Z^2 / <(1, 1)>: e_0 is free.
  CHECK_FALSE(element_order(IntMatrix{{1, 1}}, 0).finite());
  CHECK(element_order(IntMatrix{{1, 1}}, 0).to_string() == "infinite");
  // Z^2 / <(1, 0)>: e_0 is zero.
  CHECK(element_order(IntMatrix{{1, 0}}, 0).value == BigInt(1));
  // No relations at all.
  CHECK_FALSE(element_order(IntMatrix(0, 2), 1).finite());

  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const auto a = random_matrix(rng, rows, cols, 6);
    const std::size_t g = rng() % cols;
    const auto expect = oracle::element_order(to_oracle(a), g);
    const auto got = element_order(a, g);
    CAPTURE(format_matrix(a));
    CAPTURE(g);
    REQUIRE(got.finite() == expect.has_value());
    if (expect) CHECK(*got.value == *expect);
  }
}

TEST_CASE("row span membership") {
  const IntMatrix r{{2, 4}, {0, 6}};
  CHECK(in_row_span(r, std::vector<BigInt>{2, 10}));
  CHECK_FALSE(in_row_span(r, std::vector<BigInt>{1, 0}));
  CHECK_FALSE(in_row_span(r, std::vector<BigInt>{0, 3}));
  CHECK(in_row_span(r, std::vector<BigInt>{0, 0}));
}
