#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "relcat/canonical.hpp"
#include "relcat/document.hpp"
#include "relcat/examples.hpp"

using namespace relcat;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the command-line tool with stderr discarded.
Run relcat_cli(const std::string& args) {
  const std::string command = std::string(RELCAT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (const std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name, const std::string& body) {
  const auto dir = std::filesystem::temp_directory_path() / "relcat-cli-tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << body;
  return path.string();
}

std::string example_file(const std::string& name) {
  const NamedExample& e = find_example(name);
  StructureDocument doc;
  std::visit([&](const auto& p) { doc.payload = p; }, e.payload);
  doc.name = e.name;
  doc.labels = e.labels;
  return fixture(name + ".json", emit(doc));
}

bool valid_json(const std::string& text) { return nlohmann::json::accept(text); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check") {
    const std::string two = example_file("two-unit-monoid");
    const std::string inc = example_file("incoherent-monoid");
    CHECK(relcat_cli("check " + two + " --axiom coherence").code == 0);
    const Run bad = relcat_cli("check " + inc + " --axiom coherence --json");
    CHECK(bad.code == 1);
    REQUIRE(valid_json(bad.out));
    CHECK(bad.out.find("witness") != std::string::npos);
    CHECK(relcat_cli("check " + fixture("broken.json", "{\"kind\": \"ternary\", ") + " --axiom coherence").code == 2);
    CHECK(relcat_cli("check " + fixture("range.json", R"({"kind":"ternary","size":1,"triples":[[0,0,1]]})")).code ==
          2);
    CHECK(relcat_cli("check /nonexistent/file.json").code == 2);
    CHECK(relcat_cli("check " + two + " --axiom no-such-axiom").code == 2);
    CHECK(relcat_cli("check " + two + " --axiom totality").code == 1);
  }

  TEST_CASE("classify") {
    const Run r = relcat_cli("classify " + example_file("shuffle-2-2") + " --json");
    CHECK(r.code == 0);
    REQUIRE(valid_json(r.out));
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump().find("weak") != std::string::npos);
  }

  TEST_CASE("convert") {
    const std::string two = example_file("two-unit-monoid");
    const Run cat = relcat_cli("convert " + two + " --to category");
    CHECK(cat.code == 0);
    const StructureDocument doc = load(cat.out);
    REQUIRE(doc.kind() == DocumentKind::category);
    CHECK(std::get<SmallCategory>(doc.payload).objects.size() == 2);
    CHECK(relcat_cli("convert " + two + " --to categorical-semigroup --round-trip").code == 0);
    const std::string a1 = fixture("a1.json", emit({a1_partial_monoid(), "a1", {}, {}}));
    CHECK(relcat_cli("convert " + a1 + " --to lr").code == 1);
    CHECK(relcat_cli("convert " + two + " --to heap").code == 2);
  }

  TEST_CASE("enumerate") {
    const Run count = relcat_cli("enumerate --size 2 --class relational-monoid --require multiple-units --count");
    CHECK(count.code == 0);
    CHECK(std::stoi(count.out) >= 1);
    const Run emitted = relcat_cli("enumerate --size 2 --class partial-monoid --require not-coherent --emit");
    CHECK(emitted.code == 0);
    bool found = false;
    std::size_t lines = 0;
    std::size_t start = 0;
    while (start < emitted.out.size()) {
      const std::size_t end = emitted.out.find('\n', start);
      const StructureDocument doc = load(emitted.out.substr(start, end - start));
      ++lines;
      found = found || isomorphic(relation_of(doc), from_partial_algebra(a1_partial_monoid()));
      start = end == std::string::npos ? emitted.out.size() : end + 1;
    }
    CHECK(lines >= 1);
    CHECK(found);
    CHECK(relcat_cli("enumerate --size 7 --class relational-semigroup").code == 3);
    CHECK(relcat_cli("enumerate --size 2 --class no-such-class --count").code == 2);
    const Run json = relcat_cli("enumerate --size 2 --class object-free-category --json");
    CHECK(json.code == 0);
    CHECK(valid_json(json.out));
  }

  TEST_CASE("examples") {
    const Run list = relcat_cli("examples --json");
    CHECK(list.code == 0);
    CHECK(valid_json(list.out));
    const Run one = relcat_cli("examples --name no-collapse-semigroup --emit");
    CHECK(one.code == 0);
    CHECK(load(one.out).payload == DocumentPayload(no_collapse_semigroup()));
    CHECK(relcat_cli("examples --name nope").code == 2);
  }

  TEST_CASE("paper-suite subset in both output modes") {
    const Run text = relcat_cli("paper-suite --quick --only impartial,weak-units,example");
    CHECK(text.code == 0);
    CHECK(text.out.find("all lines pass") != std::string::npos);
    const Run json = relcat_cli("paper-suite --quick --json --only incoherent-monoid");
    CHECK(json.code == 0);
    CHECK(valid_json(json.out));
  }

  TEST_CASE("usage errors") { CHECK(relcat_cli("no-such-command").code == 2); }
}
