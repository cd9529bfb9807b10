#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fourier.hpp"
#include "function.hpp"
#include "group.hpp"
#include "io.hpp"
#include "rng.hpp"

using namespace weakconv;
using doctest::Contains;

namespace {

namespace fs = std::filesystem;

// Fresh file path under a per-run scratch directory.
fs::path scratch_file(const std::string& name) {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("weakconv_io_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir / name;
}

fs::path write_text(const std::string& name, const std::string& text) {
  const fs::path p = scratch_file(name);
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

GroupFunction random_function(const GroupPtr& g, Rng& rng) {
  std::vector<cplx> v(g->order());
  for (auto& z : v) z = rng.complex_gaussian();
  return GroupFunction(g, std::move(v));
}

}  // namespace

TEST_CASE("shorthand specs build the expected groups") {
  CHECK(load_group_spec("cyclic(32)")->order() == 32);
  CHECK(load_group_spec("cyclic(32)")->label() == "cyclic(32)");
  CHECK(load_group_spec("torus_grid(64,1)")->order() == 64);
  CHECK(load_group_spec("torus_grid(4,2)")->order() == 16);
  CHECK(load_group_spec("dihedral(4)")->order() == 8);
  CHECK(load_group_spec("symmetric(3)")->order() == 6);
  CHECK(load_group_spec("product(cyclic(2),cyclic(3))")->order() == 6);
  CHECK(load_group_spec(" cyclic( 8 ) ")->order() == 8);

  const GroupPtr nested =
      load_group_spec("product(product(cyclic(2),cyclic(2)),cyclic(3))");
  CHECK(nested->order() == 12);
  CHECK(nested->is_abelian());

  const GroupPtr triple = load_group_spec(
      "product(cyclic(2),cyclic(3),cyclic(5))");
  CHECK(triple->order() == 30);
}

TEST_CASE("shorthand errors are parse errors") {
  CHECK_THROWS_WITH_AS(load_group_spec("cyclic()"), Contains("expected 1"),
                       Error);
  CHECK_THROWS_WITH_AS(load_group_spec("cyclic(x)"),
                       Contains("nonnegative integer"), Error);
  CHECK_THROWS_WITH_AS(load_group_spec("torus_grid(8)"),
                       Contains("expected 2"), Error);
  CHECK_THROWS_WITH_AS(load_group_spec("product(cyclic(2))"),
                       Contains("at least 2"), Error);
  CHECK_THROWS_WITH_AS(load_group_spec("product(cyclic(2),banana(3))"),
                       Contains("unrecognized factor"), Error);
  CHECK_THROWS_WITH_AS(load_group_spec(""), Contains("empty"), Error);
  // Not shorthand, not JSON, not a file on disk.
  CHECK_THROWS_WITH_AS(load_group_spec("banana(3)"),
                       Contains("not a recognized"), Error);
  CHECK_THROWS_AS(load_group_spec("/no/such/group/file"), Error);
}

TEST_CASE("inline JSON specs") {
  CHECK(load_group_spec(R"({"kind":"cyclic","n":12})")->order() == 12);
  CHECK(load_group_spec(R"({"kind":"torus_grid","n":8,"dim":2})")->order() ==
        64);
  CHECK(load_group_spec(R"({"kind":"dihedral","n":5})")->order() == 10);
  CHECK(load_group_spec(R"({"kind":"symmetric","n":4})")->order() == 24);

  const GroupPtr prod = load_group_spec(
      R"x({"kind":"product","factors":[{"kind":"cyclic","n":2},"cyclic(3)"]})x");
  CHECK(prod->order() == 6);

  CHECK_THROWS_WITH_AS(load_group_spec(R"({"n":12})"), Contains("kind"),
                       Error);
  CHECK_THROWS_WITH_AS(load_group_spec(R"({"kind":"quantum","n":2})"),
                       Contains("unknown kind"), Error);
  CHECK_THROWS_WITH_AS(load_group_spec(R"({"kind":"cyclic"})"),
                       Contains("\"n\""), Error);
  CHECK_THROWS_WITH_AS(load_group_spec(R"({"kind":"cyclic","n":-3})"),
                       Contains("nonnegative"), Error);
  CHECK_THROWS_WITH_AS(load_group_spec("{not json"), Contains("malformed"),
                       Error);
}

TEST_CASE("spec files: JSON and Cayley tables, relative table paths") {
  const fs::path json_spec =
      write_text("spec_cyclic9.json", R"({"kind":"cyclic","n":9})");
  CHECK(load_group_spec(json_spec.string())->order() == 9);

  // Klein four-group as a raw table file.
  const fs::path table = write_text("klein.txt",
                                    "4\n"
                                    "0 1 2 3\n"
                                    "1 0 3 2\n"
                                    "2 3 0 1\n"
                                    "3 2 1 0\n");
  const GroupPtr klein = load_group_spec(table.string());
  CHECK(klein->order() == 4);
  CHECK(klein->mul(1, 2) == 3);
  CHECK(klein->inverse(3) == 3);
  CHECK(klein->label() == "klein");

  // A JSON spec that points at the table by relative path resolves against
  // the spec file's own directory.
  const fs::path table_spec = write_text(
      "spec_table.json", R"({"kind":"table","path":"klein.txt"})");
  CHECK(load_group_spec(table_spec.string())->order() == 4);
}

TEST_CASE("table parse errors carry line numbers") {
  const fs::path bad_entry = write_text("bad_entry.txt",
                                        "3\n"
                                        "0 1 2\n"
                                        "1 2 7\n"
                                        "2 0 1\n");
  CHECK_THROWS_WITH_AS(load_cayley_table(bad_entry), Contains("line 3"),
                       Error);

  const fs::path bad_token = write_text("bad_token.txt", "2\n0 one\n1 0\n");
  CHECK_THROWS_WITH_AS(load_cayley_table(bad_token), Contains("line 2"),
                       Error);

  const fs::path short_table = write_text("short.txt", "3\n0 1 2\n");
  CHECK_THROWS_WITH_AS(load_cayley_table(short_table),
                       Contains("expected 9 entries"), Error);

  CHECK_THROWS_AS(load_cayley_table(scratch_file("missing.txt")), Error);

  // Structurally fine, algebraically broken: validation names the triple.
  const fs::path nonassoc = write_text("nonassoc.txt",
                                       "3\n"
                                       "0 1 2\n"
                                       "1 2 0\n"
                                       "2 1 0\n");
  CHECK_THROWS_WITH_AS(load_cayley_table(nonassoc),
                       Contains("associativity"), Error);
}

TEST_CASE("function JSON round trip is bitwise") {
  const GroupPtr g = MeasuredGroup::cyclic(17);
  Rng rng(404);
  const GroupFunction f = random_function(g, rng);

  const fs::path p = scratch_file("f.json");
  write_function(f, p, /*as_csv=*/false);
  const GroupFunction back = read_function(g, p);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(back[i] == f[i]);
}

TEST_CASE("function CSV round trip is bitwise at 17 significant digits") {
  const GroupPtr g = MeasuredGroup::torus_grid(16, 1);
  Rng rng(405);
  const GroupFunction f = random_function(g, rng);

  const fs::path p = scratch_file("f.csv");
  write_function(f, p, /*as_csv=*/true);
  const GroupFunction back = read_function(g, p);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(back[i] == f[i]);
}

TEST_CASE("bare JSON arrays and real-only entries are accepted") {
  const GroupPtr g = MeasuredGroup::cyclic(3);
  const fs::path p = write_text("bare.json", "[[1.5,0.25],2,[0,-1]]");
  const GroupFunction f = read_function(g, p);
  CHECK(f[0] == cplx(1.5, 0.25));
  CHECK(f[1] == cplx(2.0, 0.0));
  CHECK(f[2] == cplx(0.0, -1.0));
}

TEST_CASE("function file errors") {
  const GroupPtr g = MeasuredGroup::cyclic(4);

  const fs::path wrong_len = write_text("wrong_len.json", "[[1,0],[2,0]]");
  CHECK_THROWS_AS(read_function(g, wrong_len), Error);

  const fs::path dup = write_text("dup.csv",
                                  "index,re,im\n"
                                  "0,1,0\n0,2,0\n1,0,0\n2,0,0\n3,0,0\n");
  CHECK_THROWS_WITH_AS(read_function(g, dup), Contains("duplicate index 0"),
                       Error);

  const fs::path missing = write_text("missing.csv",
                                      "index,re,im\n0,1,0\n1,0,0\n2,0,0\n");
  CHECK_THROWS_WITH_AS(read_function(g, missing), Contains("missing index 3"),
                       Error);

  const fs::path bad_val = write_text("bad_val.csv", "0,1,0\n1,zap,0\n");
  CHECK_THROWS_WITH_AS(read_function(g, bad_val), Contains("line 2"), Error);

  const fs::path out_of_range = write_text("oor.csv", "0,1,0\n9,0,0\n");
  CHECK_THROWS_WITH_AS(read_function(g, out_of_range),
                       Contains("out of range"), Error);
}

TEST_CASE("irrep files round trip through the validator") {
  const GroupPtr s3 = MeasuredGroup::symmetric(3);
  const IrrepTable builtin = builtin_irreps(s3);

  // Serialize by hand in the documented format and read back.
  std::string text = R"({"format":"weakconv-irreps","irreps":[)";
  for (std::size_t r = 0; r < builtin.irreps.size(); ++r) {
    const Irrep& rep = builtin.irreps[r];
    if (r) text += ',';
    text += R"({"dim":)" + std::to_string(rep.dim) + R"(,"matrices":[)";
    for (std::size_t x = 0; x < s3->order(); ++x) {
      if (x) text += ',';
      text += '[';
      const auto mx = rep.at(static_cast<elem_t>(x));
      for (std::size_t e = 0; e < mx.size(); ++e) {
        if (e) text += ',';
        char buf[64];
        std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", mx[e].real(),
                      mx[e].imag());
        text += buf;
      }
      text += ']';
    }
    text += "]}";
  }
  text += "]}";
  const fs::path p = write_text("s3_irreps.json", text);

  const IrrepTable table = read_irreps(s3, p);
  REQUIRE(table.irreps.size() == 3);
  CHECK(table.irreps[0].dim == 1);
  CHECK(table.irreps[2].dim == 2);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t i = 0; i < table.irreps[r].mats.size(); ++i)
      CHECK(table.irreps[r].mats[i] == builtin.irreps[r].mats[i]);

  // Breaking one matrix entry trips validation on read.
  std::string broken = text;
  const auto pos = broken.rfind("[1,");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 3, "[3,");
  const fs::path pb = write_text("s3_broken.json", broken);
  CHECK_THROWS_AS(read_irreps(s3, pb), Error);
}

TEST_CASE("symbol files: scalar and matrix") {
  const GroupPtr g = MeasuredGroup::cyclic(4);
  const fs::path scalar = write_text(
      "sym_scalar.json",
      R"({"format":"weakconv-symbol","kind":"scalar","values":[1,[0,1],-1,[0,-1]]})");
  const MultiplierSymbol s = read_symbol(g, scalar);
  CHECK(s.is_scalar());
  REQUIRE(s.scalar.size() == 4);
  CHECK(s.scalar[1] == cplx(0.0, 1.0));
  CHECK(s.scalar[2] == cplx(-1.0, 0.0));

  const fs::path wrong = write_text(
      "sym_wrong.json", R"({"kind":"scalar","values":[1,2]})");
  CHECK_THROWS_AS(read_symbol(g, wrong), Error);

  const GroupPtr s3 = MeasuredGroup::symmetric(3);
  const fs::path matrix = write_text(
      "sym_matrix.json",
      R"({"kind":"matrix","blocks":[{"dim":1,"values":[1]},)"
      R"({"dim":1,"values":[[2,0]]},{"dim":2,"values":[1,0,0,1]}]})");
  const MultiplierSymbol m = read_symbol(s3, matrix);
  CHECK(!m.is_scalar());
  REQUIRE(m.blocks.size() == 3);
  CHECK(m.blocks[1].a[0] == cplx(2.0, 0.0));
  CHECK(m.blocks[2].dim == 2);

  const fs::path bad_kind = write_text(
      "sym_bad.json", R"({"kind":"diagonal","values":[1]})");
  CHECK_THROWS_WITH_AS(read_symbol(g, bad_kind), Contains("kind must be"),
                       Error);
}
