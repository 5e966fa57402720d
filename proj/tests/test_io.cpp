#include <doctest.h>

#include <random>
#include <sstream>

#include "test_util.hpp"
#include "unitary/io.hpp"

using namespace unitary;

TEST_CASE("function block round trip") {
  std::mt19937_64 rng(50);
  for (int t = 0; t < 20; ++t) {
    ArithFunc f = testutil::random_sparse(rng, 200, 10, 1, 200);
    std::stringstream ss;
    write_func(ss, f);
    auto g = read_func(ss);
    REQUIRE(g.has_value());
    CHECK(*g == f);
  }
}

TEST_CASE("gaussian values force the gaussian field") {
  ArithFunc f(10);
  f.set(3, Coeff(mpq_class(1, 2), mpq_class(-3, 4)));
  std::stringstream ss;
  write_func(ss, f);
  CHECK(ss.str().find("field=gaussian") != std::string::npos);
  auto g = read_func(ss);
  REQUIRE(g.has_value());
  CHECK(*g == f);
}

TEST_CASE("zero entries are omitted") {
  std::stringstream ss;
  write_func(ss, ArithFunc::e(5, 10));
  CHECK(ss.str() == "# bound=10 field=rational\n5 1/1\n");
}

TEST_CASE("multi-block files") {
  std::vector<ArithFunc> funcs{ArithFunc::e(2, 10), ArithFunc::e(3, 10),
                               ArithFunc::one(4)};
  std::stringstream ss;
  write_blocks(ss, funcs);
  auto back = read_blocks(ss);
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(back[i] == funcs[i]);
}

TEST_CASE("malformed input is rejected") {
  std::stringstream no_header("5 1/1\n");
  CHECK_THROWS_AS(read_func(no_header), std::invalid_argument);

  std::stringstream bad_index("# bound=10 field=rational\n11 1/1\n");
  CHECK_THROWS_AS(read_func(bad_index), std::invalid_argument);

  std::stringstream bad_coeff("# bound=10 field=rational\n5 banana\n");
  CHECK_THROWS_AS(read_func(bad_coeff), std::invalid_argument);

  std::stringstream gauss_in_rational(
      "# bound=10 field=rational\n5 1/2+1/2i\n");
  CHECK_THROWS_AS(read_func(gauss_in_rational), std::invalid_argument);

  std::stringstream empty("");
  CHECK(read_func(empty) == std::nullopt);
}

TEST_CASE("gamma table round trip and validation") {
  long N = 50;
  std::map<std::pair<long, long>, ArithFunc> images;
  images.emplace(std::make_pair(1L, 1L), ArithFunc::e(4, N));
  images.emplace(std::make_pair(2L, 1L), ArithFunc::e(9, N));
  GammaTable table(std::move(images), N);

  std::stringstream ss;
  write_gamma_table(ss, table);
  GammaTable back = read_gamma_table(ss);
  CHECK(back.bound() == N);
  REQUIRE(back.images().size() == 2);
  CHECK(*back.find(1, 1) == ArithFunc::e(4, N));
  CHECK(*back.find(2, 1) == ArithFunc::e(9, N));
  CHECK(back.find(3, 1) == nullptr);

  // A table violating the kernel condition fails on read as well.
  std::stringstream bad;
  bad << "# gamma i=1 j=1\n# bound=50 field=rational\n3 1/1\n\n"
      << "# gamma i=1 j=2\n# bound=50 field=rational\n5 1/1\n";
  CHECK_THROWS_AS(read_gamma_table(bad), std::invalid_argument);
}

TEST_CASE("certificate serialization") {
  long N = 40;
  auto cert = verify_factorization(
      ArithFunc::e(6, N), {ArithFunc::e(2, N), ArithFunc::e(3, N)});
  std::stringstream ss;
  write_certificate(ss, cert);
  std::string text = ss.str();
  CHECK(text.find("verified: true") != std::string::npos);
  CHECK(text.find("6 1/1") != std::string::npos);
}
