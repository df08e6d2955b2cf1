#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "heaplie/search.hpp"
#include "heaplie/structure_io.hpp"

using namespace heaplie;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFiles {
 public:
  TempFiles() : dir_(std::filesystem::temp_directory_path() / ("heaplie-test-" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(dir_);
  }
  ~TempFiles() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& text) {
    const auto p = dir_ / ("f" + std::to_string(count_++) + ".json");
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
  int count_ = 0;
};

LieAffebra two_dim_algebra(int p) {
  const auto s = affine_from_vector_action(p, 2);
  const auto& g = s.heap.group();
  std::vector<Elem> br(s.size() * s.size());
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y) {
      const auto u = g.digits(x), v = g.digits(y);
      br[x * s.size() + y] = g.encode(std::vector<int>{0, ((u[0] * v[1] - u[1] * v[0]) % p + p) % p});
    }
  return LieAffebra::make(s, 0, br);
}

const char* kZ4Ring = R"({"kind":"truss","group":{"orders":[4]},"mul_table":[0,0,0,0,0,1,2,3,0,2,0,2,0,3,2,1]})";
const char* kSumBracket = R"({"kind":"lie_truss","group":{"orders":[2]},"bracket3":[0,0,1,1,1,1,0,0]})";
const char* kConstantF2 = R"({"kind":"lie_affebra","group":{"orders":[2]},"field_p":2,"origin":0,"bracket2":[1,1,1,1]})";

}  // namespace

TEST(StructureIO, RoundTripsAreByteStable) {
  std::vector<StructureFile> files;
  for (const auto& t : enumerate_trusses([] {
         SearchSpec s;
         s.group = AbelianGroup::cyclic_product({2, 2});
         s.up_to_iso = true;
         return s;
       }())
           .structures)
    files.push_back(to_file(t));
  files.push_back(to_file(upper_triangular_f2()));
  const auto alg = two_dim_algebra(3);
  files.push_back(to_file(alg));
  files.push_back(to_file(affebra_to_ternary(alg)));
  files.push_back(to_file(alg.affine));
  const auto l = bracket_from_truss(upper_triangular_f2());
  files.push_back(to_file(retract_lie_ring(l, 5), l.heap, 5));
  files.push_back(to_file(FiniteHeap::from_table(heap_table(heap_from_group(AbelianGroup::cyclic_product({6}))))));
  for (const auto& f : files) {
    const std::string text = serialize(f);
    const auto back = parse_structure(text);
    EXPECT_EQ(back, f);
    EXPECT_EQ(serialize(back), text);
  }
}

TEST(StructureIO, BuildersInvertWriters) {
  const auto t = upper_triangular_f2();
  EXPECT_EQ(build_truss(parse_structure(serialize(to_file(t)))).mul, t.mul);
  const auto alg = two_dim_algebra(5);
  const auto back = build_lie_affebra(parse_structure(serialize(to_file(alg))));
  EXPECT_EQ(back.bracket, alg.bracket);
  EXPECT_EQ(back.affine.lambda, alg.affine.lambda);
  const auto tern = affebra_to_ternary(alg);
  const auto tern_back = build_lie_ternary(parse_structure(serialize(to_file(tern))));
  EXPECT_EQ(tern_back.bracket, tern.bracket);
  ASSERT_TRUE(tern_back.affine.has_value());
}

TEST(StructureIO, MalformedInputs) {
  const std::vector<std::string> bad{
      "not json",
      "[]",
      R"({"kind":"truss","group":{"orders":[2]}})",
      R"({"kind":"wizard","group":{"orders":[2]}})",
      R"({"kind":"heap","group":{"orders":[2]},"heap_table":[0,1,1,0,1,0,0,1]})",
      R"({"kind":"heap","heap_table":[0,1,1,0]})",
      R"({"kind":"heap","group":{"orders":[2]},"colour":"red"})",
      R"({"kind":"truss","group":{"orders":[2]},"mul_table":[0,0,0,2]})",
      R"({"kind":"truss","group":{"orders":[2]},"mul_table":[0,0,0,-1]})",
      R"({"kind":"affine","group":{"orders":[4]},"field_p":4})",
      R"({"kind":"truss","group":{"orders":[2]},"mul_table":[0,0,0,1],"field_p":2})",
      R"({"kind":"lie_affebra","group":{"orders":[2]},"field_p":2,"origin":7,"bracket2":[0,0,0,0]})",
      R"({"kind":"heap","group":{"orders":[0]}})",
  };
  for (const auto& text : bad) {
    try {
      const auto f = parse_structure(text);
      // shape passed; the builder must then refuse
      build_affine(f);
      ADD_FAILURE() << text;
    } catch (const InvalidStructure&) {
      ADD_FAILURE() << "reported as invalid, not malformed: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::malformed) << text;
    }
  }
}

TEST(Cli, CheckExamples) {
  TempFiles tmp;
  auto r = run({"check", tmp.write(kZ4Ring)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["ok"], true);

  r = run({"check", tmp.write(kSumBracket)});
  EXPECT_EQ(r.code, 1);
  ASSERT_EQ(r.j()["violations"].size(), 1u);
  EXPECT_EQ(r.j()["violations"][0]["axiom"], "aa");
  EXPECT_EQ(r.j()["violations"][0]["witness"], json::array({1, 0}));

  r = run({"check", "--all", tmp.write(kSumBracket)});
  EXPECT_EQ(r.code, 1);
  EXPECT_GT(r.j()["violations"].size(), 1u);

  r = run({"check", tmp.write(R"({"kind":"heap","heap_table":[0,1,1]})")});
  EXPECT_EQ(r.code, 2);
  r = run({"check", tmp.write(R"({"kind":"monoid","group":{"orders":[2]}})")});
  EXPECT_EQ(r.code, 2);
  r = run({"check", tmp.path("missing.json")});
  EXPECT_EQ(r.code, 2);
  r = run({"check"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, CheckBrokenHeapTable) {
  TempFiles tmp;
  auto h = heap_table(heap_from_group(AbelianGroup::cyclic_product({3})));
  h.entries[(1 * 3 + 1) * 3 + 2] = 0;
  json j{{"kind", "heap"}, {"heap_table", h.entries}};
  const auto r = run({"check", tmp.write(j.dump())});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.j()["checked"], json::array({"heap"}));
}

TEST(Cli, EnumerateExamples) {
  auto r = run({"enumerate", "--group", "Z2", "--kind", "truss"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["total"], 8);
  r = run({"enumerate", "--group", "Z2", "--kind", "truss", "--up-to-iso"});
  EXPECT_EQ(r.j()["classes"], 5);
  r = run({"enumerate", "--group", "Z2xZ2", "--kind", "ring", "--up-to-iso"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["classes"], 8);
  EXPECT_EQ(r.j()["published_classes"], 8);
  EXPECT_EQ(r.j()["matches_published"], true);
  r = run({"enumerate", "--group", "Z2", "--kind", "lie-truss", "--limit", "2"});
  EXPECT_EQ(r.j()["total"], 4);
  EXPECT_EQ(r.j()["representatives"].size(), 2u);
  EXPECT_EQ(r.j()["truncated"], true);
}

TEST(Cli, EnumerateErrors) {
  EXPECT_EQ(run({"enumerate", "--group", "Z3xZ3", "--kind", "lie-truss"}).code, 3);
  EXPECT_EQ(run({"enumerate", "--group", "Z2xZ2xZ2", "--kind", "truss"}).code, 3);
  EXPECT_EQ(run({"enumerate", "--group", "Q8", "--kind", "truss"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--group", "Z2", "--kind", "monoid"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--group", "Z2", "--jobs", "0"}).code, 2);
}

TEST(Cli, JobsDoNotChangeBytes) {
  for (const char* kind : {"truss", "ring", "lie-truss"}) {
    const auto a = run({"enumerate", "--group", "Z2xZ2", "--kind", kind, "--limit", "100000", "--jobs", "1"});
    const auto b = run({"enumerate", "--group", "Z2xZ2", "--kind", kind, "--limit", "100000", "--jobs", "4"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << kind;
  }
}

TEST(Cli, ClassifyCrossChecks) {
  const auto r = run({"classify", "--group", "Z2xZ2", "--kind", "truss"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["classes"], 23);
  EXPECT_EQ(r.j()["strategies_agree"], true);
  EXPECT_EQ(r.j()["matches_published"], true);
}

TEST(Cli, WeakNotStrongListing) {
  auto r = run({"enumerate", "--group", "Z2", "--kind", "lie-truss", "--weak-not-strong"});
  EXPECT_EQ(r.j()["weak_not_strong"], 0);
  r = run({"enumerate", "--group", "Z2xZ2", "--kind", "lie-truss", "--up-to-iso", "--weak-not-strong", "--limit", "1"});
  EXPECT_EQ(r.j()["weak_not_strong"], 276);
  ASSERT_EQ(r.j()["examples"].size(), 1u);
  TempFiles tmp;
  const auto f = tmp.write(r.j()["examples"][0]["structure"].dump());
  EXPECT_EQ(run({"check", f}).code, 0);
  EXPECT_EQ(run({"check", "--strong", f}).code, 1);
}

TEST(Cli, ExportedFilesRevalidate) {
  TempFiles tmp;
  for (const char* kind : {"truss", "ring", "lie-truss"}) {
    const auto out = tmp.path(std::string(kind) + ".json");
    ASSERT_EQ(run({"enumerate", "--group", "Z3", "--kind", kind, "--export", out}).code, 0);
    std::ifstream in(out);
    const json arr = json::parse(in);
    ASSERT_FALSE(arr.empty());
    for (const auto& s : arr) EXPECT_EQ(run({"check", "--strong", tmp.write(s.dump())}).code, 0) << s.dump();
  }
}

TEST(Cli, Conversions) {
  TempFiles tmp;
  const auto ut2 = tmp.write(serialize(to_file(upper_triangular_f2())));
  auto r = run({"convert", "--op", "bracket-from-truss", ut2});
  ASSERT_EQ(r.code, 0);
  const auto lie = tmp.write(r.out);
  EXPECT_EQ(run({"check", "--strong", lie}).code, 0);

  r = run({"convert", "--op", "retract-lie-ring", "--at", "0", lie});
  ASSERT_EQ(r.code, 0);
  const auto ring = r.j();
  EXPECT_EQ(ring["kind"], "lie_ring");
  const auto& br = ring["bracket2"];
  for (std::size_t a = 0; a < 8; ++a) EXPECT_EQ(br[a * 8 + a], 0);
  EXPECT_EQ(run({"check", tmp.write(r.out)}).code, 0);
  EXPECT_EQ(run({"convert", "--op", "retract-lie-ring", lie}).code, 2);

  r = run({"convert", "--op", "strengthen", "--at", "3", lie});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(run({"check", "--strong", tmp.write(r.out)}).code, 0);

  r = run({"convert", "--op", "derivations", ut2});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(run({"check", "--strong", tmp.write(r.out)}).code, 0);

  const auto alg = tmp.write(serialize(to_file(two_dim_algebra(3))));
  r = run({"convert", "--op", "affebra-to-ternary", alg});
  ASSERT_EQ(r.code, 0);
  const auto tern = tmp.write(r.out);
  EXPECT_EQ(run({"check", "--strong", tern}).code, 0);
  r = run({"convert", "--op", "ternary-to-affebra", "--at", "0", tern});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, serialize(to_file(two_dim_algebra(3))) + "\n");
  r = run({"convert", "--op", "ternary-to-affebra", "--at", "4", tern});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(run({"check", tmp.write(r.out)}).code, 0);

  EXPECT_EQ(run({"convert", "--op", "teleport", ut2}).code, 2);
  // a bracket that is not a Lie truss is refused rather than converted
  const auto sum_affine =
      tmp.write(R"({"kind":"heap_lie_affebra","group":{"orders":[2]},"field_p":2,"bracket3":[0,0,1,1,1,1,0,0]})");
  r = run({"convert", "--op", "ternary-to-affebra", "--at", "0", sum_affine});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.j()["ok"], false);
  // without an affine structure there is nothing to convert to
  EXPECT_EQ(run({"convert", "--op", "ternary-to-affebra", "--at", "0", tmp.write(kSumBracket)}).code, 2);
}

TEST(Cli, CharacteristicTwoGuard) {
  TempFiles tmp;
  const auto f = tmp.write(kConstantF2);
  EXPECT_EQ(run({"check", f}).code, 0);
  auto r = run({"convert", "--op", "affebra-to-ternary", f});
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(r.out.empty());
  r = run({"convert", "--op", "affebra-to-ternary", "--force-char2", f});
  EXPECT_EQ(r.code, 1);
  const auto forced = json::parse(r.out);
  EXPECT_EQ(forced["kind"], "heap_lie_affebra");
  EXPECT_EQ(json::parse(r.err)["violations"][0]["axiom"], "aa");
}

TEST(Cli, NormalizeAndProve) {
  auto r = run({"normalize", "--theory", "free-heap", "[x,y,y]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "+x\n");
  r = run({"prove", "--theory", "free-truss", "a*[b,c,d] == [a*b,a*c,a*d]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "EQUAL\n");
  r = run({"prove", "--vars", "a,b,c,d,e",
           "{{a,d,b},e,c} == [{d,e,a},{{b,d,c},e,a},{d,e,b},{{c,d,a},e,b},{d,e,c}]"});
  EXPECT_EQ(r.code, 0);
  r = run({"prove", "a*b == b*a", "--falsify", "200"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NOT-EQUAL"), std::string::npos);
  EXPECT_NE(r.out.find("diff: +a*b -b*a"), std::string::npos);
  EXPECT_NE(r.out.find("counterexample in"), std::string::npos);
  EXPECT_EQ(run({"prove", "--vars", "a,b", "a*c == c*a"}).code, 2);
  EXPECT_EQ(run({"prove", "[a,b] == a"}).code, 2);
  r = run({"normalize", "[a,b"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("1:1"), std::string::npos);
  EXPECT_EQ(run({"prove", "--theory", "free-heap", "a*b == b*a"}).code, 2);
  EXPECT_EQ(run({"prove", "--theory", "free-ring", "a == a"}).code, 2);
}

TEST(Cli, Derivations) {
  TempFiles tmp;
  const auto f = tmp.write(R"({"kind":"truss","group":{"orders":[4]},"mul_table":[0,1,2,3,1,2,3,0,2,3,0,1,3,0,1,2]})");
  const auto r = run({"derivations", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["count"], 4);
  EXPECT_EQ(r.j()["derivations"][1], json::array({0, 1, 2, 3}));
  EXPECT_EQ(r.j()["lie_truss"]["ok"], true);
  EXPECT_EQ(r.j()["strong_jacobi"]["ok"], true);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}
