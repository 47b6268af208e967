#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sg/cartier_foata.hpp"
#include "sg/constructions.hpp"
#include "sg/errors.hpp"
#include "sg/grammar.hpp"
#include "sg/series.hpp"
#include "sg/trees.hpp"

namespace {

// Exit codes are the machine contract: 0 success / property holds, 1 property
// violation or hypothesis failure (witnesses on stdout), 2 usage or input
// error, 3 resource guard tripped.
struct CliError {
  int code;
  std::string message;
};

constexpr int kHumanWitnessCap = 20;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{2, "cannot write '" + path + "'"};
  out << content;
  if (!out) throw CliError{2, "cannot write '" + path + "'"};
}

sg::SignedGrammar load_grammar(const std::string& path) {
  return sg::parse_grammar(read_file(path));
}

int effective_max_len(int flag_value, const sg::SignedGrammar& g) {
  if (flag_value != -1) return flag_value;  // other negatives reach the
                                            // library and fail there
  return g.terminals().size() <= 3 ? 8 : 4;
}

std::string show_word(const std::vector<std::string>& alphabet,
                      const sg::Word& w) {
  return w.empty() ? "_" : sg::decode_word(alphabet, w);
}

std::string signed_str(std::int64_t n) {
  return (n >= 0 ? "+" : "") + std::to_string(n);
}

void print_series_human(const sg::SignedSeries& s) {
  std::cout << "maxLen: " << s.max_len << "\n";
  for (const auto& [w, n] : s.coeffs)
    std::cout << signed_str(n) << " " << show_word(s.alphabet, w) << "\n";
}

struct SeriesArgs {
  std::string path;
  int max_len = -1;
  std::int64_t guard = 10'000'000;
  bool json = false;
};

int cmd_series(const SeriesArgs& a) {
  auto g = load_grammar(a.path);
  sg::SeriesOptions opt;
  opt.max_stored_words = a.guard;
  auto s = sg::series(g, effective_max_len(a.max_len, g), opt);
  if (a.json)
    std::cout << sg::series_to_json(s) << "\n";
  else
    print_series_human(s);
  return 0;
}

int cmd_check(const SeriesArgs& a) {
  auto g = load_grammar(a.path);
  sg::SeriesOptions opt;
  opt.max_stored_words = a.guard;
  auto res = sg::check_listing(g, effective_max_len(a.max_len, g), opt);
  if (a.json) {
    nlohmann::json j;
    j["maxLen"] = res.max_len;
    j["ok"] = res.ok;
    j["words"] = res.words;
    auto viols = nlohmann::json::array();
    for (const auto& [w, n] : res.violations) {
      nlohmann::json v;
      v["word"] = w;
      v["n"] = n;
      viols.push_back(std::move(v));
    }
    j["violations"] = std::move(viols);
    std::cout << j.dump(2) << "\n";
    return res.ok ? 0 : 1;
  }
  auto print_capped = [](const auto& items, auto&& line) {
    std::int64_t shown = 0;
    for (const auto& it : items) {
      if (shown == kHumanWitnessCap) {
        std::cout << "... and " << (items.size() - shown)
                  << " more (use --json for the full list)\n";
        break;
      }
      line(it);
      ++shown;
    }
  };
  if (res.ok) {
    std::cout << "listing holds up to length " << res.max_len << ": "
              << res.words.size() << " words\n";
    print_capped(res.words, [](const std::string& w) {
      std::cout << (w.empty() ? "_" : w) << "\n";
    });
    return 0;
  }
  std::cout << "listing fails up to length " << res.max_len << ": "
            << res.violations.size()
            << (res.violations.size() == 1 ? " word" : " words")
            << " with coefficients outside {0, 1}\n";
  print_capped(res.violations, [](const std::pair<std::string, std::int64_t>& v) {
    std::cout << (v.first.empty() ? "_" : v.first) << ": " << v.second << "\n";
  });
  return 1;
}

struct TreesArgs {
  std::string path;
  std::string word;
  std::int64_t cap = 100000;
  bool json = false;
};

const char* status_name(sg::EnumStatus s) {
  switch (s) {
    case sg::EnumStatus::exhaustive: return "exhaustive";
    case sg::EnumStatus::cap_exceeded: return "capExceeded";
    case sg::EnumStatus::depth_limited: return "depthLimited";
  }
  return "?";
}

int cmd_trees(const TreesArgs& a) {
  auto g = load_grammar(a.path);
  auto res = sg::enumerate_trees(g, a.word, a.cap);
  if (a.json) {
    nlohmann::json j;
    j["word"] = a.word;
    j["cap"] = a.cap;
    j["status"] = status_name(res.status);
    j["positive"] = res.positive;
    j["negative"] = res.negative;
    auto arr = nlohmann::json::array();
    for (const auto& t : res.trees) {
      nlohmann::json e;
      e["text"] = sg::render_tree(t, g);
      e["sign"] = sg::tree_sign(t, g);
      arr.push_back(std::move(e));
    }
    j["trees"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "word: " << (a.word.empty() ? "_" : a.word) << "\n";
  std::cout << "status: " << status_name(res.status) << "\n";
  for (const auto& t : res.trees)
    std::cout << (sg::tree_sign(t, g) >= 0 ? "+ " : "- ")
              << sg::render_tree(t, g) << "\n";
  std::cout << "positive: " << res.positive << "\n";
  std::cout << "negative: " << res.negative << "\n";
  return 0;
}

struct ProfileArgs {
  std::string path;
  int max_len = -1;
  std::int64_t guard = 10'000'000;
  bool json = false;
};

int cmd_profile(const ProfileArgs& a) {
  auto g = load_grammar(a.path);
  sg::SeriesOptions opt;
  opt.max_stored_words = a.guard;
  auto prof = sg::ambiguity_profile(g, effective_max_len(a.max_len, g), opt);
  if (a.json) {
    nlohmann::json j;
    j["maxLen"] = prof.max_len;
    auto arr = nlohmann::json::array();
    for (const auto& pl : prof.per_length) {
      nlohmann::json e;
      e["len"] = pl.len;
      e["maxCoefficient"] = pl.max_coefficient;
      e["ambiguousWords"] = pl.ambiguous_words;
      nlohmann::json hist = nlohmann::json::object();
      for (const auto& [coeff, count] : pl.histogram)
        hist[std::to_string(coeff)] = count;
      e["histogram"] = std::move(hist);
      arr.push_back(std::move(e));
    }
    j["perLength"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "maxLen: " << prof.max_len << "\n";
  for (const auto& pl : prof.per_length) {
    std::cout << "len " << pl.len << ": max " << pl.max_coefficient
              << ", ambiguous " << pl.ambiguous_words << ", histogram";
    if (pl.histogram.empty()) std::cout << " -";
    for (const auto& [coeff, count] : pl.histogram)
      std::cout << " " << coeff << ":" << count;
    std::cout << "\n";
  }
  return 0;
}

struct ConstructArgs {
  std::string in1, in2;
  std::string out, out_even, out_odd;
  std::string marker = "$";
  bool json = false;
};

int report_construction(const sg::ConstructionReport& report,
                        const std::vector<std::string>& out_paths,
                        bool json) {
  for (size_t i = 0; i < report.outputs.size(); ++i)
    write_file(out_paths[i], sg::render_grammar(report.outputs[i]));
  if (json) {
    nlohmann::json j;
    j["outputs"] = out_paths;
    auto ren = nlohmann::json::array();
    for (const auto& m : report.renamings) {
      nlohmann::json e = nlohmann::json::object();
      for (const auto& [from, to] : m) e[from] = to;
      ren.push_back(std::move(e));
    }
    j["renamings"] = std::move(ren);
    j["fresh"] = report.fresh_symbols;
    j["notes"] = report.notes;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& p : out_paths) std::cout << "wrote " << p << "\n";
  for (size_t i = 0; i < report.renamings.size(); ++i) {
    std::cout << "renaming (copy " << i + 1 << "):";
    bool first = true;
    for (const auto& [from, to] : report.renamings[i]) {
      std::cout << (first ? " " : ", ") << from << " -> " << to;
      first = false;
    }
    std::cout << "\n";
  }
  if (!report.fresh_symbols.empty()) {
    std::cout << "fresh symbols:";
    for (const auto& s : report.fresh_symbols) std::cout << " " << s;
    std::cout << "\n";
  }
  for (const auto& n : report.notes) std::cout << "note: " << n << "\n";
  return 0;
}

struct CfArgs {
  std::string path;
  int series_len = -1;
  bool grammar = false;
  int verify_len = -1;
  bool json = false;
};

int cmd_cf(const CfArgs& a) {
  int chosen = (a.series_len >= 0 ? 1 : 0) + (a.grammar ? 1 : 0) +
               (a.verify_len >= 0 ? 1 : 0);
  if (chosen != 1)
    throw CliError{2,
                   "cf needs exactly one of --series N, --grammar, --verify N"};
  auto m = sg::parse_matrix(read_file(a.path));
  if (a.grammar) {
    std::cout << sg::render_grammar(sg::cf_grammar(m));
    return 0;
  }
  if (a.series_len >= 0) {
    auto s = sg::cf_series(m, a.series_len);
    if (a.json)
      std::cout << sg::series_to_json(s) << "\n";
    else
      print_series_human(s);
    return 0;
  }
  auto v = sg::verify_cf(m, a.verify_len);
  if (a.json) {
    nlohmann::json j;
    j["maxLen"] = v.max_len;
    j["allPass"] = v.all_pass();
    auto checks = nlohmann::json::array();
    for (const auto* c :
         {&v.coefficients_01, &v.one_per_class, &v.grammar_route}) {
      nlohmann::json e;
      e["name"] = c->name;
      e["pass"] = c->pass;
      e["detail"] = c->detail;
      checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["survivorsAreMinima"] = v.survivors_are_minima;
    j["minimaMismatches"] = v.minima_mismatches;
    j["classCount"] = v.class_count;
    j["survivorCount"] = v.survivor_count;
    std::cout << j.dump(2) << "\n";
    return v.all_pass() ? 0 : 1;
  }
  std::cout << "maxLen: " << v.max_len << "\n";
  for (const auto* c :
       {&v.coefficients_01, &v.one_per_class, &v.grammar_route})
    std::cout << (c->pass ? "[pass] " : "[FAIL] ") << c->name << ": "
              << c->detail << "\n";
  std::cout << "survivors are class minima: "
            << (v.survivors_are_minima ? "yes" : "no") << "\n";
  int shown = 0;
  for (const auto& mm : v.minima_mismatches) {
    if (shown == kHumanWitnessCap) {
      std::cout << "... and " << (v.minima_mismatches.size() - shown)
                << " more\n";
      break;
    }
    std::cout << "  " << mm << "\n";
    ++shown;
  }
  std::cout << "classes: " << v.class_count
            << ", survivors: " << v.survivor_count << "\n";
  std::cout << "result: " << (v.all_pass() ? "pass" : "FAIL") << "\n";
  return v.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for signed context-free grammars"};
  app.require_subcommand(1);

  SeriesArgs series_args;
  auto* c_series = app.add_subcommand(
      "series", "print the signed word series of a grammar");
  c_series->add_option("grammar", series_args.path, "grammar file (.sg)")
      ->required();
  c_series->add_option("--max-len", series_args.max_len,
                       "truncation length (default 8, or 4 beyond 3 letters)");
  c_series->add_option("--guard", series_args.guard,
                       "stored-word limit before aborting");
  c_series->add_flag("--json", series_args.json, "machine-readable output");

  SeriesArgs check_args;
  auto* c_check = app.add_subcommand(
      "check", "check that every coefficient is 0 or 1 (exit 1 otherwise)");
  c_check->add_option("grammar", check_args.path, "grammar file (.sg)")
      ->required();
  c_check->add_option("--max-len", check_args.max_len,
                      "truncation length (default 8, or 4 beyond 3 letters)");
  c_check->add_option("--guard", check_args.guard,
                      "stored-word limit before aborting");
  c_check->add_flag("--json", check_args.json, "machine-readable output");

  TreesArgs trees_args;
  auto* c_trees = app.add_subcommand(
      "trees", "list the parse trees of one word with signs");
  c_trees->add_option("grammar", trees_args.path, "grammar file (.sg)")
      ->required();
  c_trees->add_option("--word", trees_args.word, "the word (\"\" for epsilon)")
      ->required();
  c_trees->add_option("--cap", trees_args.cap, "tree count cap");
  c_trees->add_flag("--json", trees_args.json, "machine-readable output");

  ProfileArgs profile_args;
  auto* c_profile = app.add_subcommand(
      "profile", "per-length ambiguity profile of an all-positive grammar");
  c_profile->add_option("grammar", profile_args.path, "grammar file (.sg)")
      ->required();
  c_profile->add_option("--max-len", profile_args.max_len,
                        "truncation length (default 8, or 4 beyond 3 letters)");
  c_profile->add_option("--guard", profile_args.guard,
                        "stored-word limit before aborting");
  c_profile->add_flag("--json", profile_args.json, "machine-readable output");

  auto* c_construct =
      app.add_subcommand("construct", "build derived grammars");
  c_construct->require_subcommand(1);
  ConstructArgs ct;
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", ct.out, "output grammar file")->required();
    cmd->add_flag("--json", ct.json, "machine-readable report");
  };
  auto* ct_complement = c_construct->add_subcommand(
      "complement", "coefficients 1 - n over the same alphabet");
  ct_complement->add_option("input", ct.in1, "grammar file")->required();
  add_out(ct_complement);
  auto* ct_union = c_construct->add_subcommand(
      "union", "coefficients add (union for disjoint languages)");
  ct_union->add_option("first", ct.in1, "grammar file")->required();
  ct_union->add_option("second", ct.in2, "grammar file")->required();
  add_out(ct_union);
  auto* ct_minus = c_construct->add_subcommand(
      "minus", "coefficients subtract (difference for nested languages)");
  ct_minus->add_option("superset", ct.in1, "grammar file")->required();
  ct_minus->add_option("subset", ct.in2, "grammar file")->required();
  add_out(ct_minus);
  auto* ct_dollar = c_construct->add_subcommand(
      "concat-dollar", "concatenation around a fresh marker letter");
  ct_dollar->add_option("first", ct.in1, "grammar file")->required();
  ct_dollar->add_option("second", ct.in2, "grammar file")->required();
  ct_dollar->add_option("--marker", ct.marker, "marker letter (default $)");
  add_out(ct_dollar);
  auto* ct_disjoint = c_construct->add_subcommand(
      "concat-disjoint", "concatenation of grammars over disjoint alphabets");
  ct_disjoint->add_option("first", ct.in1, "grammar file")->required();
  ct_disjoint->add_option("second", ct.in2, "grammar file")->required();
  add_out(ct_disjoint);
  auto* ct_split = c_construct->add_subcommand(
      "split", "split by tree sign into two all-positive grammars");
  ct_split->add_option("input", ct.in1, "grammar file")->required();
  ct_split->add_option("--out-even", ct.out_even, "positive-tree grammar file")
      ->required();
  ct_split->add_option("--out-odd", ct.out_odd, "negative-tree grammar file")
      ->required();
  ct_split->add_flag("--json", ct.json, "machine-readable report");

  CfArgs cf_args;
  auto* c_cf = app.add_subcommand(
      "cf", "Cartier-Foata expansion of a commutation matrix");
  c_cf->add_option("matrix", cf_args.path, "matrix file (.cm)")->required();
  c_cf->add_option("--series", cf_args.series_len,
                   "print the expansion series up to this length");
  c_cf->add_flag("--grammar", cf_args.grammar,
                 "print the equivalent right-linear grammar");
  c_cf->add_option("--verify", cf_args.verify_len,
                   "run the verification checks up to this length");
  c_cf->add_flag("--json", cf_args.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (c_series->parsed()) return cmd_series(series_args);
    if (c_check->parsed()) return cmd_check(check_args);
    if (c_trees->parsed()) return cmd_trees(trees_args);
    if (c_profile->parsed()) return cmd_profile(profile_args);
    if (c_construct->parsed()) {
      if (ct_complement->parsed())
        return report_construction(sg::complement(load_grammar(ct.in1)),
                                   {ct.out}, ct.json);
      if (ct_union->parsed())
        return report_construction(
            sg::disjoint_union(load_grammar(ct.in1), load_grammar(ct.in2)),
            {ct.out}, ct.json);
      if (ct_minus->parsed())
        return report_construction(
            sg::subset_minus(load_grammar(ct.in1), load_grammar(ct.in2)),
            {ct.out}, ct.json);
      if (ct_dollar->parsed())
        return report_construction(
            sg::dollar_concat(load_grammar(ct.in1), load_grammar(ct.in2),
                              ct.marker),
            {ct.out}, ct.json);
      if (ct_disjoint->parsed())
        return report_construction(
            sg::disjoint_concat(load_grammar(ct.in1), load_grammar(ct.in2)),
            {ct.out}, ct.json);
      if (ct_split->parsed())
        return report_construction(sg::parity_split(load_grammar(ct.in1)),
                                   {ct.out_even, ct.out_odd}, ct.json);
    }
    if (c_cf->parsed()) return cmd_cf(cf_args);
    throw CliError{2, "no subcommand"};
  } catch (const sg::InfiniteTreesError& e) {
    std::cout << e.what() << "\n";
    return 1;
  } catch (const sg::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sg::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const sg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
