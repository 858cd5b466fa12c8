// End-to-end checks of the installed command surface: exit codes, JSON
// outputs, pipelines. Each case shells out to the real binary.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "cheese/cheese.hpp"
#include "cheese/generate.hpp"
#include "cheese/io.hpp"
#include "support.hpp"

using testsupport::cdisc;
using testsupport::disc;
using testsupport::make_cheese;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& command) {
  const std::string wrapped = command + " 2>/dev/null";
  FILE* pipe = popen(wrapped.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kCli = SWISSCHEESE_CLI_PATH;

std::string temp_path(const std::string& name) { return "/tmp/swisscheese_test_" + name; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

}  // namespace

TEST_CASE("generate carpet matches the library and guards its depth") {
  const RunResult r = run(kCli + " generate --kind carpet --levels 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == cheese::cheese_to_json(cheese::carpet_cheese({1})) + "\n");

  CHECK(run(kCli + " generate --kind carpet --levels 99").exit_code == 2);
  CHECK(run(kCli + " generate --kind marble").exit_code == 2);
  CHECK(run(kCli + " generate").exit_code == 2);  // --kind is required
}

TEST_CASE("generate random honors count zero and rejects a bad budget") {
  const RunResult r = run(kCli + " generate --kind random --count 0 --seed 1 --budget 0.5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == R"({"outer":{"cx":0.0,"cy":0.0,"r":1.0},"discs":[]})" "\n");

  CHECK(run(kCli + " generate --kind random --count 3 --budget 1.5").exit_code == 2);
}

TEST_CASE("classicalise pipes, writes traces, and enforces the hypothesis") {
  const std::string in = temp_path("two_disc.json");
  write_file(in, cheese::cheese_to_json(
                     make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(0.5, 0, 1)})));
  const std::string trace = temp_path("two_disc_trace.json");

  const RunResult r = run(kCli + " classicalise --in " + in + " --trace " + trace);
  CHECK(r.exit_code == 0);
  CHECK(r.out == cheese::cheese_to_json(make_cheese(cdisc(0, 0, 4), {disc(-0.25, 0, 1.75)})) +
                     "\n");

  // the emitted trace certifies the run
  const RunResult v = run(kCli + " verify --in " + in + " --map " + trace);
  CHECK(v.exit_code == 0);

  // already classical: unchanged output, empty trace
  const std::string classical = temp_path("classical.json");
  write_file(classical,
             cheese::cheese_to_json(make_cheese(cdisc(0, 0, 2), {disc(0, 0, 1)})));
  const RunResult r2 = run(kCli + " classicalise --in " + classical);
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == cheese::cheese_to_json(make_cheese(cdisc(0, 0, 2), {disc(0, 0, 1)})) + "\n");

  // radius sum >= outer radius: hypothesis violated
  const std::string fat = temp_path("fat.json");
  write_file(fat, cheese::cheese_to_json(
                      make_cheese(cdisc(0, 0, 1), {disc(0, 0, 0.7), disc(0.1, 0, 0.5)})));
  CHECK(run(kCli + " classicalise --in " + fat).exit_code == 3);
}

TEST_CASE("generate | classicalise | verify --classical round-trips") {
  const std::string pipeline = kCli + " generate --kind random --count 30 --seed 11 " +
                               "--budget 0.6 --overlap-bias 0.8 | " + kCli +
                               " classicalise | " + kCli + " verify --classical";
  CHECK(run(pipeline).exit_code == 0);

  for (const char* kind : {"nested", "tangent", "fan"}) {
    const std::string cmd = kCli + " generate --kind " + kind + " --count 4 | " + kCli +
                            " classicalise | " + kCli + " verify --classical";
    CHECK(run(cmd).exit_code == 0);
  }
}

TEST_CASE("verify reports verdicts with exit 0/1") {
  const std::string overlap = temp_path("overlap.json");
  write_file(overlap, cheese::cheese_to_json(
                          make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(0.5, 0, 1)})));
  const RunResult bad = run(kCli + " verify --in " + overlap + " --classical");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find(R"("verdict":"neither")") != std::string::npos);
  CHECK(bad.out.find(R"({"kind":"overlap-pair","i":0,"j":1})") != std::string::npos);

  const std::string tangent = temp_path("tangent.json");
  write_file(tangent,
             cheese::cheese_to_json(make_cheese(cdisc(0, 0, 1), {disc(0.5, 0, 0.5)})));
  CHECK(run(kCli + " verify --in " + tangent + " --classical").exit_code == 1);
  CHECK(run(kCli + " verify --in " + tangent + " --semiclassical").exit_code == 0);

  // no check flags: report only, exit 0
  CHECK(run(kCli + " verify --in " + overlap).exit_code == 0);
  // whyburn flags the overlap
  CHECK(run(kCli + " verify --in " + overlap + " --whyburn").exit_code == 1);
  // malformed JSON
  const std::string broken = temp_path("broken.json");
  write_file(broken, "{");
  CHECK(run(kCli + " verify --in " + broken + " --classical").exit_code == 2);
}

TEST_CASE("verify --map rejects tampered certificates") {
  const std::string in = temp_path("map_in.json");
  write_file(in, cheese::cheese_to_json(
                     make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(0.5, 0, 1)})));
  const std::string trace = temp_path("map_trace.json");
  REQUIRE(run(kCli + " classicalise --in " + in + " --trace " + trace).exit_code == 0);
  REQUIRE(run(kCli + " verify --in " + in + " --map " + trace).exit_code == 0);

  std::ifstream tf(trace);
  std::string text((std::istreambuf_iterator<char>(tf)), std::istreambuf_iterator<char>());
  const std::string needle = R"("discs":[0,0]})";
  const auto pos = text.rfind(needle);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, needle.size(), R"("discs":[0,"complement"]})");
  const std::string tampered = temp_path("map_tampered.json");
  write_file(tampered, text);

  const RunResult r = run(kCli + " verify --in " + in + " --map " + tampered);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find(R"("pass":false)") != std::string::npos);
}

TEST_CASE("annihilate verdicts and guards") {
  const std::string holey = temp_path("holey.json");
  write_file(holey,
             cheese::cheese_to_json(make_cheese(cdisc(0, 0, 1), {disc(0, 0, 0.5)})));
  const std::string pole_at_origin = temp_path("fn_origin.json");
  write_file(pole_at_origin, R"({"poly":[],"poles":[{"p":[0,0],"order":1,"coef":[1,0]}]})");

  const RunResult ok = run(kCli + " annihilate --in " + holey + " --fn " + pole_at_origin);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find(R"("admissible":true)") != std::string::npos);

  // pole inside the cheese set: reported control, exit 0, but --strict fails
  const std::string bare = temp_path("bare.json");
  write_file(bare, cheese::cheese_to_json(make_cheese(cdisc(0, 0, 1), {})));
  const std::string pole_inside = temp_path("fn_inside.json");
  write_file(pole_inside, R"({"poly":[],"poles":[{"p":[0.5,0],"order":1,"coef":[1,0]}]})");
  const RunResult control = run(kCli + " annihilate --in " + bare + " --fn " + pole_inside);
  CHECK(control.exit_code == 0);
  CHECK(control.out.find(R"("admissible":false)") != std::string::npos);
  CHECK(run(kCli + " annihilate --in " + bare + " --fn " + pole_inside + " --strict").exit_code ==
        1);

  // pole within tolerance of a contour: refusal
  const std::string pole_on_rim = temp_path("fn_rim.json");
  write_file(pole_on_rim, R"({"poly":[],"poles":[{"p":[1.0,0],"order":1,"coef":[1,0]}]})");
  CHECK(run(kCli + " annihilate --in " + bare + " --fn " + pole_on_rim).exit_code == 2);
  // non-classical cheese: invalid input for this command
  const std::string overlap = temp_path("ann_overlap.json");
  write_file(overlap, cheese::cheese_to_json(
                          make_cheese(cdisc(0, 0, 4), {disc(-1, 0, 1), disc(0.5, 0, 1)})));
  CHECK(run(kCli + " annihilate --in " + overlap + " --fn " + pole_at_origin).exit_code == 2);
}

TEST_CASE("render writes SVG with the expected circle count") {
  const std::string in = temp_path("render_in.json");
  write_file(in, cheese::cheese_to_json(cheese::carpet_cheese({2})));
  const std::string out = temp_path("render_out.svg");
  CHECK(run(kCli + " render --in " + in + " --out " + out).exit_code == 0);

  std::ifstream svg(out);
  std::string text((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
  std::size_t circles = 0;
  for (std::size_t pos = text.find("<circle "); pos != std::string::npos;
       pos = text.find("<circle ", pos + 1)) {
    ++circles;
  }
  CHECK(circles == 10);

  // comparison mode renders both panels to stdout
  const RunResult cmp = run(kCli + " render --in " + in + " --compare " + in);
  CHECK(cmp.exit_code == 0);
  CHECK(cmp.out.find("<svg ") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::string gen = kCli + " generate --kind random --count 25 --seed 4242 --budget 0.7 "
                                 "--overlap-bias 0.5";
  CHECK(run(gen).out == run(gen).out);

  const std::string in = temp_path("det_in.json");
  write_file(in, run(gen).out);
  const std::string pipeline = kCli + " classicalise --in " + in;
  CHECK(run(pipeline).out == run(pipeline).out);
  const std::string svg = kCli + " render --in " + in;
  CHECK(run(svg).out == run(svg).out);
}

TEST_CASE("CHEESE_TOL environment override is validated") {
  const std::string classical = temp_path("tol_in.json");
  write_file(classical, cheese::cheese_to_json(make_cheese(cdisc(0, 0, 2), {disc(0, 0, 1)})));
  CHECK(run("CHEESE_TOL=1e-6 " + kCli + " verify --in " + classical + " --classical").exit_code ==
        0);
  CHECK(run("CHEESE_TOL=banana " + kCli + " verify --in " + classical).exit_code == 2);
  CHECK(run("CHEESE_TOL=2.0 " + kCli + " verify --in " + classical).exit_code == 2);
}
