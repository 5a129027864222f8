#include <doctest.h>

#include <sstream>

#include "polypart/errors.hpp"
#include "polypart/table_io.hpp"

using namespace polypart;

TEST_CASE("table file round trip") {
  for (const char* text : {"rat:0,1", "rat:5,6", "rat:0,1/2,1/2"}) {
    const auto f = parse_poly(text);
    const auto table = build_table(f, 120);
    const auto residues = build_residue_table(f, 3, 120);

    std::stringstream ss;
    write_table(ss, table, &residues);
    const auto loaded = read_table(ss);
    CHECK(loaded.poly_text == f.canonical_text());
    CHECK(parse_poly(loaded.poly_text.substr(0, loaded.poly_text.find(" |"))) == f);
    CHECK(loaded.N == 120);
    CHECK(loaded.K == 3);
    CHECK(loaded.totals == table.values);
    for (std::int64_t n = 0; n <= 120; ++n) {
      for (std::int64_t a = 0; a < 3; ++a) CHECK(loaded.residues[n][a] == residues.at(a, n));
    }

    std::stringstream plain;
    write_table(plain, table);
    const auto no_residues = read_table(plain);
    CHECK(no_residues.K == 0);
    CHECK(no_residues.residues.empty());
    CHECK(no_residues.totals == table.values);
  }
}

TEST_CASE("table header is fixed") {
  std::stringstream ss;
  write_table(ss, build_table(parse_poly("rat:0,1"), 2));
  CHECK(ss.str() ==
        "polypart-table 1\n"
        "poly binom:0,1 | rat:0,1\n"
        "N 2\n"
        "K 0\n"
        "columns n p_f\n"
        "0 1\n"
        "1 1\n"
        "2 2\n"
        "end\n");
}

TEST_CASE("malformed tables are rejected") {
  auto reject = [](const std::string& text) {
    std::stringstream ss(text);
    CHECK_THROWS_AS(read_table(ss), ValidationError);
  };
  reject("");
  reject("polypart-table 2\n");
  reject("polypart-table 1\npoly rat:0,1\nN x\nK 0\ncolumns n p_f\n");
  reject("polypart-table 1\npoly rat:0,1\nN 1\nK 0\ncolumns n p_f\n0 1\n");
  reject("polypart-table 1\npoly rat:0,1\nN 1\nK 0\ncolumns n p_f\n0 1\n2 1\nend\n");
  reject("polypart-table 1\npoly rat:0,1\nN 0\nK 0\ncolumns n p_f\n0 1z\nend\n");
  reject("polypart-table 1\npoly rat:0,1\nN 0\nK 1\ncolumns n p_f a0\n0 1\nend\n");
  reject("polypart-table 1\npoly rat:0,1\nN 0\nK 0\ncolumns n p_f\n0 1\n");
}

TEST_CASE("CSV export") {
  const auto f = parse_poly("rat:0,1");
  const auto table = build_table(f, 3);
  const auto residues = build_residue_table(f, 2, 3);
  std::stringstream ss;
  write_table_csv(ss, table, &residues);
  CHECK(ss.str() == "n,p_f,a=0,a=1\n0,1,1,0\n1,1,0,1\n2,2,1,1\n3,3,1,2\n");

  const auto other = build_residue_table(f, 2, 4);
  std::stringstream bad;
  CHECK_THROWS_AS(write_table_csv(bad, table, &other), ValidationError);
}
