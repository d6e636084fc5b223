#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyck/bijection.hpp"
#include "dyck/core.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/errors.hpp"
#include "dyck/natural.hpp"
#include "dyck/oeis.hpp"
#include "dyck/ternary_tree.hpp"

namespace dyck::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Style {
  bool json = false;
  bool binary = false;
  bool padded = false;
};

// Text goes to `out` as plain lines; in JSON mode every result is one
// record per line. Errors always reach `err`, and in JSON mode also appear
// as {"error": ...} records.
class Printer {
 public:
  Printer(std::ostream& out, std::ostream& err, Style style)
      : out_(out), err_(err), style_(style) {}

  bool json() const noexcept { return style_.json; }
  bool decorated() const noexcept { return style_.binary || style_.padded; }
  bool failed() const noexcept { return failed_; }

  void line(const std::string& text) { out_ << text << '\n'; }

  void record(const Json& j) { out_ << j.dump() << '\n'; }

  void error(const std::string& message) {
    failed_ = true;
    err_ << "dyck: " << message << '\n';
    if (style_.json) {
      record(Json{{"error", message}});
    }
  }

  /// value, bits, level, then the padded word when asked for and defined.
  Json term(const Natural& v) const {
    Json j;
    j["value"] = to_decimal(v);
    j["bits"] = v == 0 ? std::string() : to_binary(v);
    j["level"] = bit_length(v);
    if (style_.padded && is_dyck(v)) {
      j["padded"] = pad(DyckNumber::trusted(v)).bits();
    }
    return j;
  }

  /// Decimal first, then the binary and padded forms when requested.
  std::string term_text(const Natural& v) const {
    std::string s = to_decimal(v);
    if (style_.binary) {
      s += ' ' + (v == 0 ? std::string("-") : to_binary(v));
    }
    if (style_.padded) {
      s += ' ';
      s += is_dyck(v) ? (v == 0 ? std::string("-") : pad(DyckNumber::trusted(v)).bits())
                      : std::string("-");
    }
    return s;
  }

  void term_line(const Natural& v, Json extras = Json::object(), const std::string& suffix = {}) {
    if (style_.json) {
      Json j = term(v);
      j.update(extras);
      record(j);
    } else {
      line(term_text(v) + suffix);
    }
  }

  /// Bare lists print on one line; decorated lists print one term per line.
  void term_list(const std::vector<Natural>& values, const Json& shared = Json::object()) {
    if (style_.json) {
      std::size_t position = 1;
      for (const auto& v : values) {
        Json j = term(v);
        j.update(shared);
        j["position"] = position++;
        record(j);
      }
    } else if (decorated()) {
      for (const auto& v : values) {
        line(term_text(v));
      }
    } else {
      std::string s;
      for (const auto& v : values) {
        if (!s.empty()) {
          s += ' ';
        }
        s += to_decimal(v);
      }
      line(s);
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  Style style_;
  bool failed_ = false;
};

DyckNumber parse_dyck(const std::string& text) {
  Natural v;
  try {
    v = parse_natural(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed number: " + text);
  }
  return DyckNumber(std::move(v));
}

Natural parse_number(const std::string& text) {
  try {
    return parse_natural(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed number: " + text);
  }
}

LevelStrategy parse_strategy(const std::string& s) {
  if (s == "scan") {
    return LevelStrategy::Scan;
  }
  if (s == "dfs") {
    return LevelStrategy::SuffixDfs;
  }
  return LevelStrategy::Auto;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << (i ? " " : "") << xs[i];
  }
  return os.str();
}

Json stats_json(const LevelStats& s) {
  return Json{{"level", s.n},
              {"count", s.count},
              {"symmetric", s.symmetric_count},
              {"asymmetric", s.asymmetric_count},
              {"interior", s.interior_count},
              {"roots", s.root_count}};
}

std::string stats_text(const LevelStats& s) {
  std::ostringstream os;
  os << "level=" << s.n << " count=" << s.count << " symmetric=" << s.symmetric_count
     << " asymmetric=" << s.asymmetric_count << " interior=" << s.interior_count
     << " roots=" << s.root_count;
  return os.str();
}

struct OeisArgs {
  std::string seq_id;
  std::string cache;
  bool offline = false;
  bool refresh = false;
  std::size_t limit = 0;
};

oeis::Client make_client(const OeisArgs& a) {
  oeis::ClientOptions options;
  if (!a.cache.empty()) {
    options.cache_root = a.cache;
  }
  options.offline = a.offline;
  options.refresh = a.refresh;
  return oeis::Client(std::move(options));
}

void add_oeis_flags(CLI::App* sub, OeisArgs& a) {
  sub->add_option("id", a.seq_id, "OEIS id, e.g. A000108")->required();
  sub->add_option("--cache", a.cache, "Cache directory (default: $DYCK_OEIS_CACHE)");
  sub->add_flag("--offline", a.offline, "Use the cache only");
  sub->add_flag("--refresh", a.refresh, "Ignore the cache and download again");
  sub->add_option("--limit", a.limit, "Only use the first N entries (0 = all)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyck numbers: validation, enumeration, the symmetry bijection and its trees",
               "dyck"};
  app.require_subcommand(1);
  app.fallthrough();

  Style style;
  app.add_flag("--json", style.json, "Line-delimited JSON records");
  app.add_flag("--binary", style.binary, "Also print the binary form");
  app.add_flag("--padded", style.padded, "Also print the padded 2w-bit word");

  // Each subcommand registers the action to run once parsing succeeds.
  std::map<const CLI::App*, std::function<void(Printer&)>> actions;
  auto command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  // validate
  std::vector<std::string> numbers;
  auto* validate_cmd = command("validate", "Check whether numbers are Dyck numbers");
  validate_cmd->add_option("n", numbers, "Numbers (decimal or 0b...)")->required();
  actions[validate_cmd] = [&](Printer& p) {
    for (const auto& text : numbers) {
      const Natural v = parse_number(text);
      const CheckResult r = validate(v);
      Json extras{{"dyck", r.is_dyck}};
      if (r.is_dyck) {
        extras["deficit"] = r.deficit;
      }
      p.term_line(v, extras,
                  r.is_dyck ? " dyck deficit=" + std::to_string(r.deficit) : " not-dyck");
      if (!r.is_dyck) {
        p.error(to_decimal(v) + " is not a Dyck number");
      }
    }
  };

  // encode
  auto* encode_cmd = command("encode", "Number to bracket word");
  encode_cmd->add_option("n", numbers, "Dyck numbers")->required();
  actions[encode_cmd] = [&](Printer& p) {
    for (const auto& text : numbers) {
      const DyckNumber d = parse_dyck(text);
      const std::string word = to_brackets(d).chars();
      if (p.json()) {
        Json j = p.term(d.value());
        j["brackets"] = word;
        p.record(j);
      } else {
        p.line(word);
      }
    }
  };

  // decode
  std::vector<std::string> words;
  auto* decode_cmd = command("decode", "Bracket word (or padded 0/1 word) to number");
  decode_cmd->add_option("word", words, "Words over ( ) or 0 1")->required();
  actions[decode_cmd] = [&](Printer& p) {
    for (const auto& w : words) {
      const bool brackets = !w.empty() && (w.front() == '(' || w.front() == ')');
      const DyckNumber d =
          brackets ? from_brackets(BracketWord::parse(w)) : unpad(PaddedWord::parse(w));
      p.term_line(d.value());
    }
  };

  // level
  unsigned level_n = 0;
  bool level_list = false, level_stats_flag = false, level_min_flag = false,
       level_max_flag = false;
  std::string strategy = "auto";
  auto* level_cmd = command("level", "Dyck numbers of binary length n");
  level_cmd->add_option("n", level_n, "Level")->required()->check(CLI::Range(1u, kMaxLevel));
  level_cmd->add_flag("--list", level_list, "List every term");
  level_cmd->add_flag("--stats", level_stats_flag, "Symmetric/asymmetric/root counts");
  level_cmd->add_flag("--min", level_min_flag, "Smallest term");
  level_cmd->add_flag("--max", level_max_flag, "Largest term");
  level_cmd->add_option("--strategy", strategy, "Enumeration strategy")
      ->check(CLI::IsMember({"auto", "scan", "dfs"}));
  actions[level_cmd] = [&](Printer& p) {
    const LevelView view = level_terms(level_n, parse_strategy(strategy));
    if (level_list) {
      std::vector<Natural> values;
      for (const auto& d : view) {
        values.push_back(d.value());
      }
      p.term_list(values);
    }
    if (level_min_flag) {
      p.term_line(view.min_term().value(), Json{{"role", "min"}});
    }
    if (level_max_flag) {
      p.term_line(view.max_term().value(), Json{{"role", "max"}});
    }
    if (level_stats_flag) {
      const LevelStats s = level_stats(level_n);
      if (p.json()) {
        p.record(stats_json(s));
      } else {
        p.line(stats_text(s));
      }
    }
    if (!level_list && !level_min_flag && !level_max_flag && !level_stats_flag) {
      const std::string count = to_decimal(view.size());
      const std::string lo = view.min_term().str();
      const std::string hi = view.max_term().str();
      if (p.json()) {
        p.record(Json{{"level", level_n}, {"count", count}, {"min", lo}, {"max", hi}});
      } else {
        p.line("level=" + std::to_string(level_n) + " count=" + count + " min=" + lo +
               " max=" + hi);
      }
    }
  };

  // suffixes
  std::size_t suffix_len = 0;
  auto* suffixes_cmd = command("suffixes", "Admissible suffix words of length l");
  suffixes_cmd->add_option("l", suffix_len, "Length")
      ->required()
      ->check(CLI::Range(std::size_t{0}, kMaxMaterializedSuffix));
  actions[suffixes_cmd] = [&](Printer& p) {
    const SuffixSet set = suffixes(suffix_len);
    if (p.json()) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        p.record(Json{{"word", set.word(i)},
                      {"value", std::to_string(set.words[i])},
                      {"length", suffix_len},
                      {"position", i + 1}});
      }
      return;
    }
    std::vector<std::string> ws;
    for (std::size_t i = 0; i < set.size(); ++i) {
      ws.push_back(set.word(i));
    }
    p.line(suffix_len == 0 ? std::string("\"\"") : join(ws));
  };

  // counts
  std::string counts_kind;
  std::size_t counts_k = 0;
  auto* counts_cmd = command("counts", "Closed-form counts");
  counts_cmd->add_option("kind", counts_kind, "level | suffix | catalan | gf")
      ->required()
      ->check(CLI::IsMember({"level", "suffix", "catalan", "gf"}));
  counts_cmd->add_option("k", counts_k, "Argument")->required();
  actions[counts_cmd] = [&](Printer& p) {
    if (counts_kind == "gf") {
      const GfCoefficients c = gf_coefficients(counts_k);
      if (p.json()) {
        p.record(Json{{"k", counts_k},
                      {"central", to_decimal(c.central)},
                      {"odd_central", to_decimal(c.odd_central)},
                      {"interleaved", to_decimal(c.interleaved)}});
      } else {
        p.line("central=" + to_decimal(c.central) + " odd_central=" + to_decimal(c.odd_central) +
               " interleaved=" + to_decimal(c.interleaved));
      }
      return;
    }
    Natural value;
    if (counts_kind == "level") {
      if (counts_k < 1 || counts_k > kMaxLevel) {
        throw std::out_of_range("level must be in 1.." + std::to_string(kMaxLevel));
      }
      value = level_count(static_cast<unsigned>(counts_k));
    } else if (counts_kind == "suffix") {
      value = suffix_count(counts_k);
    } else {
      value = catalan(counts_k);
    }
    if (p.json()) {
      p.record(Json{{"kind", counts_kind}, {"k", counts_k}, {"value", to_decimal(value)}});
    } else {
      p.line(to_decimal(value));
    }
  };

  // bij / invbij
  auto* bij_cmd = command("bij", "Apply the symmetry bijection B");
  bij_cmd->add_option("n", numbers, "Dyck numbers")->required();
  actions[bij_cmd] = [&](Printer& p) {
    for (const auto& text : numbers) {
      const DyckNumber d = parse_dyck(text);
      p.term_line(bij(d).value(), Json{{"input", d.str()}});
    }
  };
  auto* invbij_cmd = command("invbij", "Apply the inverse of B to a symmetric Dyck number");
  invbij_cmd->add_option("n", numbers, "Symmetric Dyck numbers")->required();
  actions[invbij_cmd] = [&](Printer& p) {
    for (const auto& text : numbers) {
      const DyckNumber d = parse_dyck(text);
      p.term_line(inv_bij(d).value(), Json{{"input", d.str()}});
    }
  };

  // classify
  auto* classify_cmd = command("classify", "mersenne, self-bijective, tree-root or interior");
  classify_cmd->add_option("n", numbers, "Dyck numbers")->required();
  actions[classify_cmd] = [&](Printer& p) {
    for (const auto& text : numbers) {
      const DyckNumber d = parse_dyck(text);
      const std::string cls(to_string(classify(d)));
      p.term_line(d.value(), Json{{"class", cls}}, " " + cls);
    }
  };

  // chain
  std::string chain_root;
  std::size_t chain_terms = 4;
  auto* chain_cmd = command("chain", "Iterate B from an asymmetric root");
  chain_cmd->add_option("root", chain_root, "Tree root")->required();
  chain_cmd->add_option("--terms", chain_terms, "Number of images")->capture_default_str();
  actions[chain_cmd] = [&](Printer& p) {
    const BChain c = chain(parse_dyck(chain_root), chain_terms);
    std::size_t position = 1;
    for (const auto& t : c.terms) {
      p.term_line(t.value(), Json{{"root", c.root.str()}, {"position", position++}});
    }
  };

  // root
  std::string root_input;
  bool root_path = false;
  auto* root_cmd = command("root", "Descend by the inverse of B to the chain's root");
  root_cmd->add_option("n", root_input, "Interior or root term")->required();
  root_cmd->add_flag("--path", root_path, "Print every step, input first");
  actions[root_cmd] = [&](Printer& p) {
    const RootPath r = root_of(parse_dyck(root_input));
    if (root_path) {
      std::size_t position = 0;
      for (const auto& t : r.path) {
        p.term_line(t.value(), Json{{"root", r.root.str()}, {"position", position++}});
      }
    } else {
      p.term_line(r.root.value(), Json{{"input", root_input}, {"steps", r.steps()}});
    }
  };

  // forest-verify
  unsigned fv_bound = 16;
  unsigned fv_max = kDefaultPartitionBound;
  bool fv_assignments = false;
  auto* fv_cmd = command("forest-verify", "Check that B chains partition the interior terms");
  fv_cmd->add_option("--bound", fv_bound, "Highest level")->capture_default_str();
  fv_cmd->add_option("--max-bound", fv_max, "Refuse bounds above this")->capture_default_str();
  fv_cmd->add_flag("--assignments", fv_assignments, "List term -> root");
  actions[fv_cmd] = [&](Printer& p) {
    const PartitionReport r = forest_partition(fv_bound, fv_max);
    if (fv_assignments) {
      for (const auto& [term, root] : r.assignments) {
        if (p.json()) {
          Json j = p.term(term);
          j["root"] = std::to_string(root);
          p.record(j);
        } else {
          p.line(p.term_text(term) + " " + std::to_string(root));
        }
      }
    }
    if (p.json()) {
      p.record(Json{{"level_bound", r.level_bound},
                    {"tree_roots", r.tree_roots},
                    {"interior_terms", r.interior_terms},
                    {"first_step_images", r.first_step_images},
                    {"unassigned", r.unassigned},
                    {"collisions", r.collisions},
                    {"duplicate_first_images", r.duplicate_first_images},
                    {"root_mismatches", r.root_mismatches},
                    {"misclassified", r.misclassified},
                    {"ok", r.ok()}});
    } else {
      std::ostringstream os;
      os << "bound=" << r.level_bound << " roots=" << r.tree_roots
         << " interior=" << r.interior_terms << " first_step_images=" << r.first_step_images
         << " unassigned=" << r.unassigned.size() << " collisions=" << r.collisions.size()
         << " mismatches=" << r.root_mismatches.size() << ' ' << (r.ok() ? "ok" : "FAILED");
      p.line(os.str());
    }
    if (!r.ok()) {
      p.error("chain partition check failed up to level " + std::to_string(r.level_bound));
    }
  };

  // ternary
  auto* ternary_cmd = command("ternary", "Triplet forest navigation");
  ternary_cmd->require_subcommand(1);
  std::string tern_input;
  auto* tern_children = ternary_cmd->add_subcommand("children", "(4d-1, 4d+1, 4d+3)");
  tern_children->add_option("n", tern_input, "Dyck number")->required();
  actions[tern_children] = [&](Printer& p) {
    const Triplet t = children(parse_dyck(tern_input));
    std::vector<Natural> values{t[0].value(), t[1].value(), t[2].value()};
    p.term_list(values, Json{{"parent", tern_input}});
  };
  auto* tern_parent = ternary_cmd->add_subcommand("parent", "Parent node, or none for roots");
  tern_parent->add_option("n", tern_input, "Dyck number")->required();
  actions[tern_parent] = [&](Printer& p) {
    const auto par = parent(parse_dyck(tern_input));
    if (par) {
      p.term_line(par->value(), Json{{"child", tern_input}});
    } else if (p.json()) {
      p.record(Json{{"child", tern_input}, {"value", nullptr}});
    } else {
      p.line("none");
    }
  };
  auto* tern_is_root = ternary_cmd->add_subcommand("is-root", "Whether n has no parent");
  tern_is_root->add_option("n", tern_input, "Dyck number")->required();
  actions[tern_is_root] = [&](Printer& p) {
    const DyckNumber d = parse_dyck(tern_input);
    const bool root = is_ternary_root(d);
    p.term_line(d.value(), Json{{"root", root}}, root ? " root" : " not-root");
  };
  unsigned tf_bound = 12;
  bool tf_roots = false;
  auto* tern_check = ternary_cmd->add_subcommand("forest-check", "Check the triplet forest");
  tern_check->add_option("--bound", tf_bound, "Highest level")
      ->capture_default_str()
      ->check(CLI::Range(1u, kMaxTernaryCheckBound));
  tern_check->add_flag("--roots", tf_roots, "List the roots");
  actions[tern_check] = [&](Printer& p) {
    const TernaryReport r = forest_check(tf_bound);
    if (tf_roots) {
      std::vector<Natural> roots(r.roots.begin(), r.roots.end());
      p.term_list(roots, Json{{"class", "ternary-root"}});
    }
    for (const auto& s : r.levels) {
      if (p.json()) {
        p.record(stats_json(s));
      } else {
        p.line(stats_text(s));
      }
    }
    if (p.json()) {
      p.record(Json{{"level_bound", r.level_bound},
                    {"roots", r.roots.size()},
                    {"orphans", r.orphans},
                    {"multiple_parents", r.multiple_parents},
                    {"claimed_roots", r.claimed_roots},
                    {"non_coprime_triplets", r.non_coprime_triplets},
                    {"ok", r.ok()}});
    } else {
      p.line("bound=" + std::to_string(r.level_bound) + " roots=" +
             std::to_string(r.roots.size()) + " orphans=" + std::to_string(r.orphans.size()) +
             " multiple_parents=" + std::to_string(r.multiple_parents.size()) + ' ' +
             (r.ok() ? "ok" : "FAILED"));
    }
    if (!r.ok()) {
      p.error("triplet forest check failed up to level " + std::to_string(r.level_bound));
    }
  };

  // oeis
  auto* oeis_cmd = command("oeis", "OEIS b-file retrieval and comparison");
  oeis_cmd->require_subcommand(1);
  OeisArgs oeis_args;
  auto* oeis_fetch = oeis_cmd->add_subcommand("fetch", "Print a b-file (cached)");
  add_oeis_flags(oeis_fetch, oeis_args);
  actions[oeis_fetch] = [&](Printer& p) {
    auto client = make_client(oeis_args);
    oeis::BFile file = client.fetch_bfile(oeis_args.seq_id);
    if (oeis_args.limit != 0 && file.entries.size() > oeis_args.limit) {
      file.entries.resize(oeis_args.limit);
    }
    for (const auto& e : file.entries) {
      if (p.json()) {
        p.record(Json{{"index", e.index}, {"value", to_decimal(e.value)}});
      } else {
        p.line(std::to_string(e.index) + ' ' + to_decimal(e.value));
      }
    }
  };
  auto* oeis_compare = oeis_cmd->add_subcommand("compare", "Compare local terms to a b-file");
  add_oeis_flags(oeis_compare, oeis_args);
  actions[oeis_compare] = [&](Printer& p) {
    auto client = make_client(oeis_args);
    const oeis::BFile remote = client.fetch_bfile(oeis_args.seq_id);
    const auto local = oeis::local_sequence(oeis_args.seq_id, remote, oeis_args.limit);
    if (!local) {
      throw std::invalid_argument("no local computation for " + oeis_args.seq_id);
    }
    const oeis::DiffReport d = oeis::compare(*local, remote);
    if (p.json()) {
      Json j{{"seq_id", d.seq_id}, {"compared", d.compared_count}, {"clean", d.clean()}};
      if (d.first_mismatch) {
        j["index"] = d.first_mismatch->index;
        j["local"] = to_decimal(d.first_mismatch->local);
        j["remote"] = to_decimal(d.first_mismatch->remote);
      }
      p.record(j);
    } else {
      std::string text = d.seq_id + " compared=" + std::to_string(d.compared_count);
      text += d.clean() ? " clean" : " mismatch";
      p.line(text);
    }
    if (d.first_mismatch) {
      const auto& m = *d.first_mismatch;
      p.error(d.seq_id + " differs at index " + std::to_string(m.index) +
              ": local=" + to_decimal(m.local) + " remote=" + to_decimal(m.remote));
    }
  };

  // export-bfile
  std::string export_id;
  std::size_t export_count = 100;
  auto* export_cmd = command("export-bfile", "Write local terms in b-file format");
  export_cmd->add_option("id", export_id, "OEIS id")->required();
  export_cmd->add_option("--count", export_count, "Number of terms")->capture_default_str();
  actions[export_cmd] = [&](Printer& p) {
    const oeis::BFile file = oeis::local_sequence(export_id, export_count);
    if (p.json()) {
      for (const auto& e : file.entries) {
        p.record(Json{{"index", e.index}, {"value", to_decimal(e.value)}});
      }
    } else {
      out << oeis::serialize_bfile(file);
    }
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    Printer p(out, err, style);
    p.error(e.what());
    return e.get_exit_code();
  }

  Printer printer(out, err, style);
  const CLI::App* chosen = app.get_subcommands().front();
  while (!chosen->get_subcommands().empty()) {
    chosen = chosen->get_subcommands().front();
  }
  try {
    actions.at(chosen)(printer);
  } catch (const root_refused& e) {
    printer.error(e.what());
  } catch (const defect_error& e) {
    printer.error(std::string("defect: ") + e.what());
  } catch (const std::exception& e) {
    printer.error(e.what());
  }
  return printer.failed() ? 1 : 0;
}

}  // namespace dyck::cli
