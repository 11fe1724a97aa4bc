// balanceclat: mines itemsets that recur at nearly equidistant positions
// in an ordered transaction database. Talks to the library through the
// C API only.

#include "balanceclat.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

void check(bclat_status status) {
  if (status != BCLAT_OK) die(bclat_last_error());
}

struct DbDeleter {
  void operator()(bclat_database* db) const { bclat_db_free(db); }
};
struct ResultsDeleter {
  void operator()(bclat_results* results) const { bclat_results_free(results); }
};
using DbPtr = std::unique_ptr<bclat_database, DbDeleter>;
using ResultsPtr = std::unique_ptr<bclat_results, ResultsDeleter>;

DbPtr load_db(const std::string& path) {
  bclat_database* db = nullptr;
  check(bclat_db_load(path.c_str(), &db));
  return DbPtr(db);
}

std::string fmt4(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

std::string fmt_ms(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

using NameMap = std::map<std::uint32_t, std::string>;

// "<id> <label>" lines; the label is the rest of the line.
NameMap load_names(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot open names file: " + path);
  NameMap names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string token;
    if (!(row >> token)) continue;
    std::uint32_t id = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      die(path + " line " + std::to_string(line_no) + ": invalid item id '" + token + "'");
    }
    std::string label;
    std::getline(row >> std::ws, label);
    while (!label.empty() && (label.back() == '\r' || label.back() == ' ')) label.pop_back();
    if (label.empty()) {
      die(path + " line " + std::to_string(line_no) + ": missing label");
    }
    names[id] = label;
  }
  return names;
}

std::string render_item(const NameMap& names, std::uint32_t item) {
  auto it = names.find(item);
  return it == names.end() ? std::to_string(item) : it->second;
}

std::string render_items(const NameMap& names, const std::vector<std::uint32_t>& items,
                         const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += render_item(names, items[i]);
  }
  return out;
}

std::vector<std::uint32_t> result_items(const bclat_results* results, std::size_t row) {
  std::size_t n = bclat_results_items(results, row, nullptr, 0);
  std::vector<std::uint32_t> items(n);
  if (n) bclat_results_items(results, row, items.data(), n);
  return items;
}

struct SuccBin {
  std::uint32_t distance;
  std::uint64_t count;
};

std::vector<SuccBin> succ_bins(const bclat_results* results, std::size_t row) {
  std::size_t n = bclat_results_succ_bins(results, row, nullptr, nullptr, 0);
  std::vector<std::uint32_t> distances(n);
  std::vector<std::uint64_t> counts(n);
  if (n) bclat_results_succ_bins(results, row, distances.data(), counts.data(), n);
  std::vector<SuccBin> bins(n);
  for (std::size_t i = 0; i < n; ++i) bins[i] = {distances[i], counts[i]};
  return bins;
}

std::string bins_string(const std::vector<SuccBin>& bins, std::uint64_t min_count,
                        const char* sep) {
  std::string out;
  for (const auto& bin : bins) {
    if (bin.count < min_count) continue;
    if (!out.empty()) out += sep;
    out += std::to_string(bin.distance) + ":" + std::to_string(bin.count);
  }
  return out;
}

/* ------------------------------------------------------------------ */

struct MineFlags {
  std::string input;
  std::uint64_t minnumber = 1;
  double maxstdev = 0.0;
  double minavg = 0.0;
  std::uint32_t max_distance = 10;
  std::uint64_t mindistfreq = 1;
  std::string format = "text";
  std::uint64_t report_min_count = 20;
  std::string names_path;
  std::uint32_t threads = 1;
};

int run_mine(const MineFlags& f) {
  DbPtr db = load_db(f.input);
  NameMap names = f.names_path.empty() ? NameMap{} : load_names(f.names_path);

  bclat_mining_params p{};
  p.minnumber = f.minnumber;
  p.maxstdev = f.maxstdev;
  p.minavg = f.minavg;
  p.max_distance = f.max_distance;
  p.mindistfreq = f.mindistfreq;
  p.threads = f.threads;

  auto t0 = std::chrono::steady_clock::now();
  bclat_results* raw = nullptr;
  check(bclat_mine_balanced(db.get(), &p, &raw));
  ResultsPtr results(raw);
  double wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();

  std::size_t count = bclat_results_count(results.get());
  if (f.format == "csv") {
    std::cout << "items,support,t,avgdist,stdev,succdists\r\n";
    for (std::size_t row = 0; row < count; ++row) {
      std::cout << csv_field(render_items(names, result_items(results.get(), row), " "))
                << "," << bclat_results_support(results.get(), row) << ","
                << bclat_results_score(results.get(), row) << ","
                << fmt4(bclat_results_avgdist(results.get(), row)) << ","
                << fmt4(bclat_results_stdev(results.get(), row)) << ","
                << csv_field(bins_string(succ_bins(results.get(), row),
                                         f.report_min_count, "; "))
                << "\r\n";
    }
    return 0;
  }

  std::cout << "# balanced patterns\n"
            << "# input: " << f.input << " ("
            << bclat_db_transaction_count(db.get()) << " transactions)\n"
            << "# params: minnumber=" << f.minnumber << " maxstdev=" << fmt4(f.maxstdev)
            << " minavg=" << fmt4(f.minavg) << " max-distance=" << f.max_distance
            << " mindistfreq=" << f.mindistfreq << " threads=" << f.threads << "\n"
            << "# patterns: " << count << ", wall_ms: " << fmt_ms(wall_ms) << "\n";
  for (std::size_t row = 0; row < count; ++row) {
    std::cout << "{" << render_items(names, result_items(results.get(), row), ", ")
              << "} t=" << bclat_results_score(results.get(), row)
              << " support=" << bclat_results_support(results.get(), row)
              << " avgdist=" << fmt4(bclat_results_avgdist(results.get(), row))
              << " stdev=" << fmt4(bclat_results_stdev(results.get(), row)) << "\n";
    std::string bins = bins_string(succ_bins(results.get(), row), f.report_min_count, ", ");
    if (!bins.empty()) {
      std::cout << "  succdists (count >= " << f.report_min_count << "): " << bins << "\n";
    }
  }
  return 0;
}

/* ------------------------------------------------------------------ */

struct StableFlags {
  std::string input;
  std::uint32_t w = 0;
  std::uint64_t minstable = 1;
  std::uint64_t minsup = 1;
  std::string format = "text";
  std::string names_path;
  std::uint32_t threads = 1;
};

int run_stable(const StableFlags& f) {
  DbPtr db = load_db(f.input);
  NameMap names = f.names_path.empty() ? NameMap{} : load_names(f.names_path);

  bclat_stability_params p{};
  p.w = f.w;
  p.minstable = f.minstable;
  p.minsup = f.minsup;
  p.threads = f.threads;

  auto t0 = std::chrono::steady_clock::now();
  bclat_results* raw = nullptr;
  check(bclat_mine_stable(db.get(), &p, &raw));
  ResultsPtr results(raw);
  double wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();

  std::size_t count = bclat_results_count(results.get());
  if (f.format == "csv") {
    std::cout << "items,support,value,triples,left,right\r\n";
    for (std::size_t row = 0; row < count; ++row) {
      std::cout << csv_field(render_items(names, result_items(results.get(), row), " "))
                << "," << bclat_results_support(results.get(), row) << ","
                << bclat_results_score(results.get(), row) << ","
                << bclat_results_stable_triples(results.get(), row) << ","
                << bclat_results_stable_left(results.get(), row) << ","
                << bclat_results_stable_right(results.get(), row) << "\r\n";
    }
    return 0;
  }

  std::cout << "# stable patterns\n"
            << "# input: " << f.input << " ("
            << bclat_db_transaction_count(db.get()) << " transactions)\n"
            << "# params: w=" << f.w << " minstable=" << f.minstable
            << " minsup=" << f.minsup << " threads=" << f.threads << "\n"
            << "# patterns: " << count << ", wall_ms: " << fmt_ms(wall_ms) << "\n";
  for (std::size_t row = 0; row < count; ++row) {
    std::cout << "{" << render_items(names, result_items(results.get(), row), ", ")
              << "} value=" << bclat_results_score(results.get(), row)
              << " support=" << bclat_results_support(results.get(), row)
              << " triples=" << bclat_results_stable_triples(results.get(), row)
              << " left=" << bclat_results_stable_left(results.get(), row)
              << " right=" << bclat_results_stable_right(results.get(), row) << "\n";
  }
  return 0;
}

/* ------------------------------------------------------------------ */

struct GenerateFlags {
  std::string out;
  std::uint32_t transactions = 2000;
  std::uint32_t items = 200;
  std::uint32_t pattern_size = 5;
  std::uint32_t period = 4;
  double noise = 0.0;
  double background = 0.0;
  std::uint64_t seed = 1;
};

bclat_generator_config to_config(const GenerateFlags& f) {
  bclat_generator_config cfg{};
  cfg.n_transactions = f.transactions;
  cfg.n_items = f.items;
  cfg.pattern_size = f.pattern_size;
  cfg.period = f.period;
  cfg.noise_percent = f.noise;
  cfg.background_density = f.background;
  cfg.seed = f.seed;
  return cfg;
}

int run_generate(const GenerateFlags& f) {
  bclat_generator_config cfg = to_config(f);
  bclat_database* raw = nullptr;
  check(bclat_db_generate(&cfg, &raw));
  DbPtr db(raw);
  check(bclat_db_save(db.get(), f.out.c_str()));
  std::cout << "generated " << bclat_db_transaction_count(db.get())
            << " transactions -> " << f.out << "\n";
  return 0;
}

/* ------------------------------------------------------------------ */

struct BucketFlags {
  std::string events_path;
  std::int64_t window_seconds = 1800;
  std::string out;
  std::string names_out;
};

template <typename T>
bool parse_int(const std::string& token, T& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

// "<timestamp> <item>" lines. With --names-out the item column is an
// opaque key; keys get dense ids in order of first appearance.
std::vector<bclat_event> read_event_lines(const BucketFlags& f,
                                          std::vector<std::string>& keys_out) {
  std::ifstream in(f.events_path);
  if (!in) die("cannot open events file: " + f.events_path);
  const bool string_keys = !f.names_out.empty();

  std::vector<bclat_event> events;
  std::map<std::string, std::uint32_t> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string ts_token, key, extra;
    if (!(row >> ts_token)) continue;
    const std::string at = f.events_path + " line " + std::to_string(line_no) + ": ";
    if (!(row >> key) || (row >> extra)) {
      die(at + "expected '<timestamp> <item>'");
    }
    bclat_event e{};
    if (!parse_int(ts_token, e.timestamp)) {
      die(at + "invalid timestamp '" + ts_token + "'");
    }
    if (e.timestamp < 0) {
      die(at + "negative timestamp '" + ts_token + "'");
    }
    if (string_keys) {
      auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(ids.size() + 1));
      if (inserted) keys_out.push_back(key);
      e.item = it->second;
    } else if (!parse_int(key, e.item)) {
      die(at + "invalid item id '" + key + "'");
    }
    events.push_back(e);
  }
  return events;
}

int run_bucket(const BucketFlags& f) {
  std::vector<std::string> keys;
  std::vector<bclat_event> events = read_event_lines(f, keys);

  bclat_database* raw = nullptr;
  check(bclat_db_bucket(events.empty() ? nullptr : events.data(), events.size(),
                        f.window_seconds, nullptr, &raw));
  DbPtr db(raw);
  check(bclat_db_save(db.get(), f.out.c_str()));

  if (!f.names_out.empty()) {
    std::ofstream names(f.names_out);
    if (!names) die("cannot write names file: " + f.names_out);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      names << (i + 1) << " " << keys[i] << "\n";
    }
  }
  std::cout << "bucketed " << events.size() << " events into "
            << bclat_db_transaction_count(db.get()) << " transactions -> " << f.out
            << "\n";
  return 0;
}

/* ------------------------------------------------------------------ */

struct BenchFlags {
  std::string mode;
  std::string out = "-";
  std::uint64_t sweep_from = 0;
  std::uint64_t sweep_to = 0;
  std::uint64_t sweep_step = 1;
  std::uint32_t repeat = 1;
  std::string input;
  GenerateFlags base;
  double maxstdev = 1.0;
  double minavg = 2.0;
  std::uint32_t max_distance = 10;
  std::uint64_t mindistfreq = 1;
  std::uint32_t threads = 1;
};

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

int run_bench(const BenchFlags& f) {
  if (f.sweep_from < 1 || f.sweep_to < f.sweep_from || f.sweep_step < 1) {
    die("invalid sweep range");
  }

  std::ofstream file;
  if (f.out != "-") {
    file.open(f.out);
    if (!file) die("cannot write output file: " + f.out);
  }
  std::ostream& out = f.out == "-" ? std::cout : file;

  DbPtr base;
  if (f.mode == "minnumber-sweep") {
    if (f.input.empty()) {
      bclat_generator_config cfg = to_config(f.base);
      bclat_database* raw = nullptr;
      check(bclat_db_generate(&cfg, &raw));
      base.reset(raw);
    } else {
      base = load_db(f.input);
    }
  }

  out << "sweep_value,wall_ms,n_patterns\r\n";
  for (std::uint64_t value = f.sweep_from; value <= f.sweep_to; value += f.sweep_step) {
    DbPtr per_point;
    const bclat_database* db = base.get();
    bclat_mining_params p{};
    p.maxstdev = f.maxstdev;
    p.minavg = f.minavg;
    p.max_distance = f.max_distance;
    p.mindistfreq = f.mindistfreq;
    p.threads = f.threads;

    if (f.mode == "size-sweep") {
      GenerateFlags point = f.base;
      point.transactions = static_cast<std::uint32_t>(value);
      bclat_generator_config cfg = to_config(point);
      bclat_database* raw = nullptr;
      check(bclat_db_generate(&cfg, &raw));
      per_point.reset(raw);
      db = per_point.get();
      p.minnumber = std::max<std::uint64_t>(
          1, static_cast<std::uint64_t>(0.1 * static_cast<double>(value) + 0.5));
    } else {
      p.minnumber = value;
    }

    std::vector<double> walls;
    std::size_t n_patterns = 0;
    for (std::uint32_t r = 0; r < f.repeat; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      bclat_results* raw = nullptr;
      check(bclat_mine_balanced(db, &p, &raw));
      walls.push_back(std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count());
      n_patterns = bclat_results_count(raw);
      bclat_results_free(raw);
    }
    out << value << "," << fmt_ms(median(walls)) << "," << n_patterns << "\r\n";
  }
  return 0;
}

/* ------------------------------------------------------------------ */

void add_dataset_flags(CLI::App* cmd, GenerateFlags& f) {
  cmd->add_option("--transactions", f.transactions, "number of transactions");
  cmd->add_option("--items", f.items, "size of the item universe");
  cmd->add_option("--pattern-size", f.pattern_size, "number of planted pattern items");
  cmd->add_option("--period", f.period, "planting period");
  cmd->add_option("--noise", f.noise, "per-item dropout probability, percent [0,100]");
  cmd->add_option("--background", f.background, "background item density [0,1]");
  cmd->add_option("--seed", f.seed, "generator seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mines itemsets recurring at nearly equidistant positions in an "
      "ordered transaction database"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bclat_version());

  MineFlags mine_flags;
  auto* mine = app.add_subcommand("mine", "mine balanced patterns");
  mine->add_option("--input", mine_flags.input, "transaction database file")->required();
  mine->add_option("--minnumber", mine_flags.minnumber,
                   "count some pairwise distance must reach")
      ->required();
  mine->add_option("--maxstdev", mine_flags.maxstdev,
                   "max successive-distance standard deviation")
      ->required();
  mine->add_option("--minavg", mine_flags.minavg, "min successive-distance average")
      ->required();
  mine->add_option("--max-distance", mine_flags.max_distance,
                   "largest tracked pairwise distance");
  mine->add_option("--mindistfreq", mine_flags.mindistfreq,
                   "bin count for a distance to be frequent");
  mine->add_option("--format", mine_flags.format, "report format")
      ->check(CLI::IsMember({"text", "csv"}));
  mine->add_option("--report-min-count", mine_flags.report_min_count,
                   "only list histogram bins with at least this count");
  mine->add_option("--names", mine_flags.names_path, "id -> label map file");
  mine->add_option("--threads", mine_flags.threads, "worker threads");

  StableFlags stable_flags;
  auto* stable = app.add_subcommand("stable", "mine stable patterns");
  stable->add_option("--input", stable_flags.input, "transaction database file")
      ->required();
  stable->add_option("--w", stable_flags.w, "triple slack");
  stable->add_option("--minstable", stable_flags.minstable, "min stability value")
      ->required();
  stable->add_option("--minsup", stable_flags.minsup, "min support")->required();
  stable->add_option("--format", stable_flags.format, "report format")
      ->check(CLI::IsMember({"text", "csv"}));
  stable->add_option("--names", stable_flags.names_path, "id -> label map file");
  stable->add_option("--threads", stable_flags.threads, "worker threads");

  GenerateFlags generate_flags;
  auto* generate = app.add_subcommand("generate", "write a synthetic database");
  generate->add_option("--out", generate_flags.out, "output database file")->required();
  add_dataset_flags(generate, generate_flags);

  BucketFlags bucket_flags;
  auto* bucket = app.add_subcommand("bucket",
                                    "bucket timestamped events into a database");
  bucket->add_option("--events", bucket_flags.events_path, "event file")->required();
  bucket->add_option("--window-seconds", bucket_flags.window_seconds, "window width");
  bucket->add_option("--out", bucket_flags.out, "output database file")->required();
  bucket->add_option("--names-out", bucket_flags.names_out,
                     "treat item column as string keys; write the id map here");

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "runtime sweeps, CSV output");
  bench->add_option("--mode", bench_flags.mode, "sweep variable")
      ->required()
      ->check(CLI::IsMember({"size-sweep", "minnumber-sweep"}));
  bench->add_option("--out", bench_flags.out, "CSV file, - for stdout");
  bench->add_option("--sweep-from", bench_flags.sweep_from, "first sweep value")
      ->required();
  bench->add_option("--sweep-to", bench_flags.sweep_to, "last sweep value")->required();
  bench->add_option("--sweep-step", bench_flags.sweep_step, "sweep increment");
  bench->add_option("--repeat", bench_flags.repeat, "runs per point, median reported")
      ->check(CLI::PositiveNumber);
  bench->add_option("--input", bench_flags.input,
                    "database file (minnumber-sweep; default: generated)");
  add_dataset_flags(bench, bench_flags.base);
  bench->add_option("--maxstdev", bench_flags.maxstdev,
                    "max successive-distance standard deviation");
  bench->add_option("--minavg", bench_flags.minavg, "min successive-distance average");
  bench->add_option("--max-distance", bench_flags.max_distance,
                    "largest tracked pairwise distance");
  bench->add_option("--mindistfreq", bench_flags.mindistfreq,
                    "bin count for a distance to be frequent");
  bench->add_option("--threads", bench_flags.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*mine) return run_mine(mine_flags);
  if (*stable) return run_stable(stable_flags);
  if (*generate) return run_generate(generate_flags);
  if (*bucket) return run_bucket(bucket_flags);
  if (*bench) return run_bench(bench_flags);
  return 2;
}
