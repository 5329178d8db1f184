// Command-line front end: exact verification suites for the bi-free partial
// S-transform identities, coefficient tables, and lattice listings.
//
// Exit codes: 0 success, 1 identity failure, 2 config/parse error, 3 domain
// error (e.g. a vanishing first cumulant where an S-transform needs it).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bifree/bnc.hpp"
#include "bifree/errors.hpp"
#include "bifree/json_io.hpp"
#include "bifree/partition.hpp"
#include "bifree/transforms.hpp"
#include "bifree/verify.hpp"

namespace {

using bifree::Json;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

struct Options {
  std::string orders = "3,3";
  std::uint64_t seed = 1;
  int trials = 5;
  int cap = bifree::kDefaultEnumCap;
  std::string suites;
  std::string format = "json";
  std::string input;
  std::string output;
  std::string n;  // partitions: single order
  bool timings = false;
};

std::pair<int, int> parse_orders(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw bifree::parse_error("orders must be given as N,M");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw bifree::parse_error("orders must be given as N,M");
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw bifree::parse_error("cannot open output file '" + opt.output + "'");
  out << text;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Options& opt) {
  auto [na, nb] = parse_orders(opt.orders);
  bifree::VerifyConfig cfg;
  cfg.order_a = na;
  cfg.order_b = nb;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.cap = opt.cap;
  cfg.suites = split_list(opt.suites);
  std::vector<bifree::IdentityResult> results = bifree::run_verify(cfg);

  std::string text;
  if (opt.format == "json") {
    Json j;
    j["command"] = "verify";
    j["orders"] = {na, nb};
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
    j["suites"] = cfg.suites.empty() ? bifree::suite_names() : cfg.suites;
    Json rows = Json::array();
    for (const auto& r : results) {
      Json row;
      row["suite"] = r.suite;
      row["name"] = r.name;
      row["trial"] = r.trial;
      row["orders"] = {r.order_a, r.order_b};
      row["ok"] = r.ok;
      row["first_failure"] =
          r.first_failure ? Json{r.first_failure->first, r.first_failure->second}
                          : Json(nullptr);
      if (opt.timings) row["elapsed_ms"] = r.elapsed_ms;
      rows.push_back(row);
    }
    j["results"] = rows;
    j["all_ok"] = bifree::all_ok(results);
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "suite,name,trial,order_a,order_b,ok,fail_i,fail_j";
    if (opt.timings) os << ",elapsed_ms";
    os << "\n";
    for (const auto& r : results) {
      os << r.suite << ',' << r.name << ',' << r.trial << ',' << r.order_a << ','
         << r.order_b << ',' << (r.ok ? "true" : "false") << ',';
      if (r.first_failure)
        os << r.first_failure->first << ',' << r.first_failure->second;
      else
        os << ',';
      if (opt.timings) os << ',' << r.elapsed_ms;
      os << "\n";
    }
    text = os.str();
  }
  emit(opt, text);
  return bifree::all_ok(results) ? kExitOk : kExitIdentityFailure;
}

// ---- transform ------------------------------------------------------------

Json series_tables(const bifree::PairSpec& spec) {
  using namespace bifree;
  Json out;
  out["S_a"] = to_json(s_transform(spec, Side::Left));
  out["S_b"] = to_json(s_transform(spec, Side::Right));
  out["S_ab"] = to_json(partial_s(spec));
  out["S_op_ab"] = to_json(opposite_partial_s(spec));
  BiSeries hck = series_hck(spec);
  out["H"] = to_json(hck.h);
  out["C"] = to_json(hck.c);
  out["K"] = to_json(hck.k);
  return out;
}

void csv_series1(std::ostream& os, const std::string& name, const bifree::Series1& s) {
  for (int i = 0; i <= s.order(); ++i)
    os << name << ',' << i << ",," << csv_quote(bifree::rat_to_string(s.coeff(i))) << "\n";
}

void csv_series2(std::ostream& os, const std::string& name, const bifree::Series2& s) {
  for (int i = 0; i <= s.valid_z(); ++i)
    for (int j = 0; j <= s.valid_w(); ++j)
      os << name << ',' << i << ',' << j << ','
         << csv_quote(bifree::rat_to_string(s.coeff(i, j))) << "\n";
}

int cmd_transform(const Options& opt) {
  if (opt.input.empty()) throw bifree::parse_error("transform: --input is required");
  std::ifstream in(opt.input);
  if (!in) throw bifree::parse_error("cannot open input file '" + opt.input + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw bifree::parse_error(std::string("malformed JSON: ") + e.what());
  }
  bifree::PairSpec spec = bifree::pair_spec_from_json(j);

  std::string text;
  if (opt.format == "json") {
    Json out;
    out["command"] = "transform";
    out["orders"] = {spec.order_a(), spec.order_b()};
    out["series"] = series_tables(spec);
    text = out.dump(2) + "\n";
  } else {
    using namespace bifree;
    std::ostringstream os;
    os << "series,i,j,value\n";
    csv_series1(os, "S_a", s_transform(spec, Side::Left));
    csv_series1(os, "S_b", s_transform(spec, Side::Right));
    csv_series2(os, "S_ab", partial_s(spec));
    csv_series2(os, "S_op_ab", opposite_partial_s(spec));
    BiSeries hck = series_hck(spec);
    csv_series2(os, "H", hck.h);
    csv_series2(os, "C", hck.c);
    csv_series2(os, "K", hck.k);
    text = os.str();
  }
  emit(opt, text);
  return kExitOk;
}

// ---- partitions -----------------------------------------------------------

int cmd_partitions(const Options& opt) {
  using namespace bifree;
  std::string text;
  if (!opt.n.empty()) {
    int n = 0;
    try {
      n = std::stoi(opt.n);
    } catch (const std::exception&) {
      throw parse_error("partitions: --n must be an integer");
    }
    std::vector<Partition> all = enumerate_nc(n, opt.cap);
    if (opt.format == "json") {
      Json j;
      j["command"] = "partitions";
      j["n"] = n;
      j["count"] = all.size();
      Json items = Json::array();
      for (const Partition& p : all)
        items.push_back(Json{{"partition", to_json(p)}, {"kreweras", to_json(kreweras_nc(p))}});
      j["items"] = items;
      text = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "index,partition,kreweras\n";
      for (std::size_t i = 0; i < all.size(); ++i)
        os << i << ',' << csv_quote(to_json(all[i]).dump()) << ','
           << csv_quote(to_json(kreweras_nc(all[i])).dump()) << "\n";
      text = os.str();
    }
  } else {
    auto [n, m] = parse_orders(opt.orders);
    std::vector<BNCPartition> all = enumerate_bnc(n, m, opt.cap);
    const bool classed = n >= 1 && m >= 1;
    if (opt.format == "json") {
      Json j;
      j["command"] = "partitions";
      j["orders"] = {n, m};
      j["count"] = all.size();
      Json items = Json::array();
      for (const BNCPartition& p : all) {
        Json row{{"partition", to_json(p)}, {"kreweras", to_json(kreweras_bnc(p))}};
        if (classed) row["class"] = classify_lr(p) == LR::L ? "L" : "R";
        items.push_back(row);
      }
      j["items"] = items;
      text = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "index,partition,kreweras,class\n";
      for (std::size_t i = 0; i < all.size(); ++i) {
        os << i << ',' << csv_quote(to_json(all[i]).dump()) << ','
           << csv_quote(to_json(kreweras_bnc(all[i])).dump()) << ',';
        if (classed) os << (classify_lr(all[i]) == LR::L ? "L" : "R");
        os << "\n";
      }
      text = os.str();
    }
  }
  emit(opt, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of the opposite bi-free partial S-transform"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", opt.output, "Write the report to a file");
    cmd->add_option("--cap", opt.cap, "Enumeration cap on lattice sizes");
  };

  CLI::App* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("--orders", opt.orders, "Truncation orders N,M");
  verify->add_option("--seed", opt.seed, "PRNG seed");
  verify->add_option("--trials", opt.trials, "Random trials per suite");
  verify->add_option("--suite", opt.suites, "Comma-separated suite filter");
  verify->add_flag("--timings", opt.timings, "Include elapsed-time fields");
  add_common(verify);

  CLI::App* transform = app.add_subcommand("transform", "Coefficient tables for a pair spec");
  transform->add_option("--input", opt.input, "PairSpec JSON file");
  add_common(transform);

  CLI::App* partitions = app.add_subcommand("partitions", "List NC(n) or BNC(n,m)");
  partitions->add_option("--n", opt.n, "List NC(n)");
  partitions->add_option("--orders", opt.orders, "List BNC(n,m)");
  add_common(partitions);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (transform->parsed()) return cmd_transform(opt);
    if (partitions->parsed()) return cmd_partitions(opt);
  } catch (const bifree::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const bifree::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
