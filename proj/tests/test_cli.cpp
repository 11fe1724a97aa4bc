// Drives the installed binary end to end through popen. The binary path
// comes in through the CLI_EXE compile definition.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "balanceclat/transactions.hpp"
#include "doctest.h"
#include "fixtures.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string("\"") + CLI_EXE + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_db(const std::string& path, const bclat::TransactionDatabase& db) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  bclat::write_database(db, out);
}

// Lines with trailing \r stripped; no trailing empty line.
std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("mine: text report on the example database") {
  TempFile db("cli_ex1.db");
  write_db(db.path, bclat::testing::example_db());

  auto r = run_cli("mine --input " + db.path +
                   " --minnumber 3 --maxstdev 0.5 --minavg 0.5 --report-min-count 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "# input: cli_ex1.db (9 transactions)"));
  CHECK(contains(r.output,
                 "# params: minnumber=3 maxstdev=0.5000 minavg=0.5000 "
                 "max-distance=10 mindistfreq=1 threads=1"));
  CHECK(contains(r.output, "# patterns: 3"));
  CHECK(contains(r.output, "{1} t=4 support=5 avgdist=1.0000 stdev=0.0000"));
  CHECK(contains(r.output, "{1, 2} t=4 support=5 avgdist=1.0000 stdev=0.0000"));
  CHECK(contains(r.output, "{2} t=4 support=5 avgdist=1.0000 stdev=0.0000"));
  CHECK(contains(r.output, "  succdists (count >= 1): 1:4"));

  // The default bin cutoff of 20 hides the 4-count bin.
  auto quiet = run_cli("mine --input " + db.path +
                       " --minnumber 3 --maxstdev 0.5 --minavg 0.5");
  CHECK(quiet.exit_code == 0);
  CHECK(!contains(quiet.output, "succdists"));
}

TEST_CASE("mine: csv report") {
  TempFile db("cli_ex1_csv.db");
  write_db(db.path, bclat::testing::example_db());

  auto r = run_cli("mine --input " + db.path +
                   " --minnumber 3 --maxstdev 0.5 --minavg 0.5 --format csv "
                   "--report-min-count 1");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "items,support,t,avgdist,stdev,succdists");
  CHECK(lines[1] == "1,5,4,1.0000,0.0000,1:4");
  CHECK(lines[2] == "1 2,5,4,1.0000,0.0000,1:4");
  CHECK(lines[3] == "2,5,4,1.0000,0.0000,1:4");
  CHECK(contains(r.output, "\r\n"));
}

TEST_CASE("mine: an unreachable minnumber gives an empty report and exit 0") {
  TempFile db("cli_ex1_empty.db");
  write_db(db.path, bclat::testing::example_db());

  auto r = run_cli("mine --input " + db.path +
                   " --minnumber 37 --maxstdev 0.5 --minavg 0.5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "# patterns: 0"));
}

TEST_CASE("mine: item names show up in reports") {
  TempFile db("cli_named.db");
  write_db(db.path, bclat::testing::example_db());
  TempFile names("cli_named.names");
  write_file(names.path, "1 front page\n2 products,new\n");

  auto r = run_cli("mine --input " + db.path + " --names " + names.path +
                   " --minnumber 3 --maxstdev 0.5 --minavg 0.5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "{front page, products,new} t=4"));

  // A label with a comma gets quoted in csv output.
  auto csv = run_cli("mine --input " + db.path + " --names " + names.path +
                     " --minnumber 3 --maxstdev 0.5 --minavg 0.5 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(contains(csv.output, "\"front page products,new\",5,4"));
}

TEST_CASE("mine: usage and input errors exit with 2") {
  CHECK(run_cli("mine --minnumber 3 --maxstdev 0.5 --minavg 0.5").exit_code == 2);
  CHECK(run_cli("mine --input missing.db --minnumber 3 --maxstdev 0.5 --minavg 0.5")
            .exit_code == 2);

  TempFile db("cli_ok.db");
  write_db(db.path, bclat::testing::example_db());
  CHECK(run_cli("mine --input " + db.path +
                " --minnumber 3 --maxstdev 0.5 --minavg 0.5 --format xml")
            .exit_code == 2);
  CHECK(run_cli("mine --input " + db.path +
                " --minnumber 0 --maxstdev 0.5 --minavg 0.5")
            .exit_code == 2);

  TempFile bad("cli_bad.db");
  write_file(bad.path, "1 2\nnot-a-number\n");
  auto r = run_cli("mine --input " + bad.path +
                   " --minnumber 3 --maxstdev 0.5 --minavg 0.5");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "line 2"));
}

TEST_CASE("stable: worked example and reversal") {
  TempFile db("cli_stable.db");
  write_db(db.path, bclat::testing::example_db());
  TempFile rev("cli_stable_rev.db");
  write_db(rev.path, bclat::testing::example_db().reversed());

  auto r = run_cli("stable --input " + db.path + " --w 0 --minsup 3 --minstable 10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "# patterns: 4"));
  CHECK(contains(r.output, "{1, 2} value=10 support=5 triples=4 left=3 right=3"));

  auto rr = run_cli("stable --input " + rev.path + " --w 0 --minsup 3 --minstable 10");
  CHECK(rr.exit_code == 0);

  // Same pattern rows either direction; only the header echoes the path.
  auto rows = [](const RunResult& res) {
    std::vector<std::string> kept;
    for (const auto& line : lines_of(res.output)) {
      if (!line.empty() && line[0] != '#') kept.push_back(line);
    }
    return kept;
  };
  CHECK(rows(r) == rows(rr));
}

TEST_CASE("stable: vacuous thresholds list every occurring itemset") {
  TempFile db("cli_stable_all.db");
  write_db(db.path, bclat::testing::db_from({{1, 2}, {1}}));

  auto r = run_cli("stable --input " + db.path + " --minsup 1 --minstable 0 --format csv");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "items,support,value,triples,left,right");
  CHECK(lines[1] == "1,2,0,0,0,0");
  CHECK(lines[2] == "1 2,1,0,0,0,0");
  CHECK(lines[3] == "2,1,0,0,0,0");
}

TEST_CASE("generate: deterministic files, planted pattern minable") {
  // The seed only matters once dropout or background sampling happens.
  TempFile a("cli_gen_a.db");
  TempFile b("cli_gen_b.db");
  std::string flags =
      " --transactions 400 --items 10 --pattern-size 3 --period 4 --noise 25 --seed 9";
  CHECK(run_cli("generate --out " + a.path + flags).exit_code == 0);
  CHECK(run_cli("generate --out " + b.path + flags).exit_code == 0);
  CHECK(read_file(a.path) == read_file(b.path));

  TempFile c("cli_gen_c.db");
  CHECK(run_cli("generate --out " + c.path + flags + "9").exit_code == 0);
  CHECK(read_file(a.path) != read_file(c.path));

  TempFile clean("cli_gen_clean.db");
  CHECK(run_cli("generate --out " + clean.path +
                " --transactions 400 --items 10 --pattern-size 3 --period 4")
            .exit_code == 0);
  auto mined = run_cli("mine --input " + clean.path +
                       " --minnumber 90 --maxstdev 0 --minavg 2 --report-min-count 20");
  CHECK(mined.exit_code == 0);
  CHECK(contains(mined.output, "# patterns: 7"));
  CHECK(contains(mined.output, "succdists (count >= 20): 3:99"));
}

TEST_CASE("generate: full noise leaves only empty transactions") {
  TempFile out("cli_gen_noise.db");
  CHECK(run_cli("generate --out " + out.path +
                " --transactions 40 --items 5 --pattern-size 2 --period 4 "
                "--noise 100")
            .exit_code == 0);
  std::string content = read_file(out.path);
  CHECK(content == std::string(40, '\n'));
}

TEST_CASE("generate: invalid ranges exit with 2") {
  CHECK(run_cli("generate --out cli_gen_bad.db --period 0").exit_code == 2);
  CHECK(run_cli("generate --out cli_gen_bad.db --noise 150").exit_code == 2);
  std::remove("cli_gen_bad.db");
}

TEST_CASE("bucket: events become windowed transactions") {
  TempFile events("cli_events.txt");
  write_file(events.path, "0 4\n10 5\n3600 4\n");
  TempFile out("cli_bucketed.db");

  auto r = run_cli("bucket --events " + events.path + " --out " + out.path);
  CHECK(r.exit_code == 0);
  CHECK(read_file(out.path) == "4 5\n\n4\n");
  CHECK(contains(r.output, "bucketed 3 events into 3 transactions"));
}

TEST_CASE("bucket: string keys get dense ids and a names file") {
  TempFile events("cli_events_keys.txt");
  write_file(events.path, "0 /index.html\n10 /about.html\n3600 /index.html\n");
  TempFile out("cli_bucketed_keys.db");
  TempFile names("cli_bucketed_keys.names");

  auto r = run_cli("bucket --events " + events.path + " --out " + out.path +
                   " --names-out " + names.path);
  CHECK(r.exit_code == 0);
  CHECK(read_file(out.path) == "1 2\n\n1\n");
  CHECK(read_file(names.path) == "1 /index.html\n2 /about.html\n");

  auto mined = run_cli("stable --input " + out.path + " --names " + names.path +
                       " --minsup 1 --minstable 0");
  CHECK(mined.exit_code == 0);
  CHECK(contains(mined.output, "{/index.html}"));
}

TEST_CASE("bucket: malformed lines exit with 2 and name the line") {
  TempFile events("cli_events_bad.txt");
  write_file(events.path, "0 1\n5\n");
  TempFile out("cli_bucketed_bad.db");

  auto r = run_cli("bucket --events " + events.path + " --out " + out.path);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "line 2"));

  write_file(events.path, "0 1\n-7 2\n");
  auto neg = run_cli("bucket --events " + events.path + " --out " + out.path);
  CHECK(neg.exit_code == 2);
  CHECK(contains(neg.output, "line 2"));
  CHECK(contains(neg.output, "negative timestamp"));
}

TEST_CASE("bucket: an empty events file writes an empty database") {
  TempFile events("cli_events_empty.txt");
  write_file(events.path, "");
  TempFile out("cli_bucketed_empty.db");

  auto r = run_cli("bucket --events " + events.path + " --out " + out.path);
  CHECK(r.exit_code == 0);
  CHECK(read_file(out.path).empty());
}

TEST_CASE("bench: minnumber sweep emits one csv row per value") {
  TempFile db("cli_bench.db");
  write_db(db.path, bclat::testing::example_db());

  auto r = run_cli("bench --mode minnumber-sweep --input " + db.path +
                   " --sweep-from 3 --sweep-to 5 --sweep-step 2 "
                   "--maxstdev 0.5 --minavg 0.5 --repeat 3");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "sweep_value,wall_ms,n_patterns");
  CHECK(lines[1].rfind("3,", 0) == 0);
  CHECK(lines[1].substr(lines[1].rfind(',')) == ",3");
  CHECK(lines[2].rfind("5,", 0) == 0);
  CHECK(lines[2].substr(lines[2].rfind(',')) == ",0");
}

TEST_CASE("bench: size sweep generates per point and fills n_patterns") {
  TempFile out("cli_bench_size.csv");
  auto r = run_cli("bench --mode size-sweep --sweep-from 40 --sweep-to 80 "
                   "--sweep-step 40 --items 6 --pattern-size 2 --period 4 --out " +
                   out.path);
  CHECK(r.exit_code == 0);
  auto lines = lines_of(read_file(out.path));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "sweep_value,wall_ms,n_patterns");
  CHECK(lines[1].rfind("40,", 0) == 0);
  CHECK(lines[1].substr(lines[1].rfind(',')) == ",3");
  CHECK(lines[2].rfind("80,", 0) == 0);
  CHECK(lines[2].substr(lines[2].rfind(',')) == ",3");
}

TEST_CASE("bench: an empty sweep range exits with 2") {
  CHECK(run_cli("bench --mode minnumber-sweep --sweep-from 10 --sweep-to 5 "
                "--sweep-step 1")
            .exit_code == 2);
  CHECK(run_cli("bench --mode size-sweep --sweep-from 0 --sweep-to 5").exit_code == 2);
}

TEST_CASE("top level: help exits 0, misuse exits 2") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("mine --help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("mine --input x.db --minnumber 3 --maxstdev 0.5 --minavg 0.5 "
                "--bogus-flag 1")
            .exit_code == 2);
}
