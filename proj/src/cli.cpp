#include "zsr/cli.hpp"

#include <optional>

#include "CLI11.hpp"

#include "zsr/counting.hpp"
#include "zsr/lemmas.hpp"
#include "zsr/reciprocity.hpp"
#include "zsr/records.hpp"

namespace zsr::cli {

namespace {

enum class Format { human, json, csv, jsonl };

struct RunConfig {
  Format format = Format::human;
  unsigned parallelism = 1;

  std::string group;
  std::string g;
  std::string h;
  std::string method = "formula";
  std::string families;
  std::string lemma_id;
  std::string out_path;
  std::uint64_t length = 0;
  std::uint64_t order = 0;
  std::uint64_t max_order = 0;
  std::uint64_t max = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  bool brute_force = false;
};

constexpr std::uint64_t kWarnAboveOrder = 64;

void print_summary(const ScanSummary& s, Format format, std::ostream& os) {
  switch (format) {
    case Format::json:
      os << to_json(s).dump(2) << '\n';
      return;
    case Format::jsonl:
      os << to_json(s).dump() << '\n';
      return;
    case Format::csv:
      os << "pairs_checked,pairs_spectra_agree,max_order,families,violations\n";
      os << s.pairs_checked << ',' << s.pairs_spectra_agree << ',' << s.max_order << ',';
      for (std::size_t i = 0; i < s.families.size(); ++i) os << (i ? ";" : "") << s.families[i];
      os << ',' << s.violations.size() << '\n';
      return;
    case Format::human:
      break;
  }
  os << "families: ";
  for (std::size_t i = 0; i < s.families.size(); ++i) os << (i ? ", " : "") << s.families[i];
  os << "\nmax order: " << s.max_order << "\npairs checked: " << s.pairs_checked
     << "\npairs with equal spectra: " << s.pairs_spectra_agree << "\nviolations: " << s.violations.size() << '\n';
  for (const auto& r : s.violations) os << "  " << to_jsonl(r) << '\n';
}

void print_report(const ReciprocityReport& r, Format format, std::ostream& os) {
  if (format == Format::json) {
    os << to_json(r).dump(2) << '\n';
    return;
  }
  if (format == Format::jsonl) {
    os << to_jsonl(r) << '\n';
    return;
  }
  if (format == Format::csv) {
    os << "g,h,order_g,order_h,spectra_agree,witness_divisor,count_g_at_h,count_h_at_g,iff_consistent\n";
    os << r.g.notation() << ',' << r.h.notation() << ',' << r.g.order() << ',' << r.h.order() << ','
       << (r.spectra_agree ? "true" : "false") << ',' << (r.witness_divisor ? std::to_string(*r.witness_divisor) : "")
       << ',' << r.count_g_at_h.str() << ',' << r.count_h_at_g.str() << ','
       << (r.iff_consistent ? "true" : "false") << '\n';
    return;
  }
  os << "G = " << r.g.notation() << " (order " << r.g.order() << "), H = " << r.h.notation() << " (order "
     << r.h.order() << ")\n";
  os << "spectra agree on shared divisors: " << (r.spectra_agree ? "yes" : "no");
  if (r.witness_divisor) os << " (first difference at d = " << *r.witness_divisor << ")";
  os << "\n|M(G,|H|)| = " << r.count_g_at_h.str() << "\n|M(H,|G|)| = " << r.count_h_at_g.str()
     << "\ncounts agree: " << (r.counts_agree ? "yes" : "no")
     << "\niff consistent: " << (r.iff_consistent ? "yes" : "no") << '\n';
}

// Shared driver for verify-theorem and scan-conjecture.
int run_scan(const RunConfig& cfg, const std::set<Family>& families, std::ostream& out, std::ostream& err) {
  if (cfg.max_order > kWarnAboveOrder) {
    err << "warning: max order " << cfg.max_order << " above " << kWarnAboveOrder
        << "; runtime grows roughly with the fourth power of the bound\n";
  }
  PairScanOptions options;
  options.parallelism = cfg.parallelism;

  std::optional<ResultLog> log;
  std::map<PairKey, ReciprocityReport> known;
  const bool stream_records = cfg.out_path.empty() && cfg.format == Format::jsonl;
  if (!cfg.out_path.empty()) {
    log.emplace(cfg.out_path);
    known = log->known();
    options.known = &known;
    options.sink = [&](const ReciprocityReport& r, bool fresh) {
      if (fresh) log->append(r);
    };
  } else if (stream_records) {
    options.sink = [&](const ReciprocityReport& r, bool) { out << to_jsonl(r) << '\n'; };
  }

  const ScanSummary summary = conjecture_scan(families, cfg.max_order, options);
  print_summary(summary, cfg.format, stream_records ? err : out);
  err << "elapsed: " << summary.elapsed_ms << " ms\n";
  return summary.violations.empty() ? kExitOk : kExitViolation;
}

int run_lemma(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  LemmaGridSummary summary;
  if (cfg.lemma_id == "2.1i") {
    summary = lemma21_grid(Variant::i, cfg.max, cfg.parallelism);
  } else if (cfg.lemma_id == "2.1ii") {
    summary = lemma21_grid(Variant::ii, cfg.max, cfg.parallelism);
  } else if (cfg.lemma_id == "2.2i") {
    summary = lemma22_grid(Variant::i, cfg.max, cfg.parallelism);
  } else if (cfg.lemma_id == "2.2ii") {
    summary = lemma22_grid(Variant::ii, cfg.max, cfg.parallelism);
  } else if (cfg.lemma_id == "struct") {
    summary = structure_grid(cfg.max, cfg.parallelism);
  } else {
    throw DomainError("unknown lemma id '" + cfg.lemma_id + "'");
  }

  if (!cfg.out_path.empty()) {
    std::ofstream csv(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot open " + cfg.out_path);
    csv << lemma_csv_header() << '\n';
    for (const auto& f : summary.failures) csv << to_csv_row(f) << '\n';
  }

  switch (cfg.format) {
    case Format::json:
      out << to_json(summary).dump(2) << '\n';
      break;
    case Format::jsonl:
      out << to_json(summary).dump() << '\n';
      break;
    case Format::csv:
      out << lemma_csv_header() << '\n';
      for (const auto& f : summary.failures) out << to_csv_row(f) << '\n';
      break;
    case Format::human:
      out << "grid: " << summary.grid << "\nmax: " << summary.max << "\ninstances checked: " << summary.instances
          << "\ncounterexamples: " << summary.failures.size() << '\n';
      for (const auto& f : summary.failures) out << "  " << to_csv_row(f) << '\n';
      break;
  }
  (void)err;
  return summary.failures.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-sum sequence counts, order spectra and reciprocity checks over finite groups", "zsr"};
  RunConfig cfg;
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"human", Format::human}, {"json", Format::json}, {"csv", Format::csv}, {"jsonl", Format::jsonl}};
  app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--parallelism", cfg.parallelism, "Worker threads")->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "Number of zero-sum sequences of a given length");
  count->add_option("--group", cfg.group, "Group notation")->required();
  count->add_option("--length", cfg.length, "Sequence length m")->required();
  count->add_option("--method", cfg.method, "formula | dp | molien")
      ->check(CLI::IsMember({"formula", "dp", "molien"}));

  auto* spectrum = app.add_subcommand("spectrum", "Element-order spectrum of a group");
  spectrum->add_option("--group", cfg.group, "Group notation")->required();
  spectrum->add_flag("--brute-force", cfg.brute_force, "Tally element orders directly (abelian only)");

  auto* enumerate = app.add_subcommand("enumerate", "All abelian groups of a given order");
  enumerate->add_option("--order", cfg.order, "Group order")->required()->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Reciprocity report for one pair");
  check->set_help_flag("--help", "Print this help message and exit");
  check->add_option("--g", cfg.g, "First group")->required();
  check->add_option("--h", cfg.h, "Second group")->required();

  auto* verify = app.add_subcommand("verify-theorem", "Check every pair of abelian groups up to an order");
  verify->add_option("--max-order", cfg.max_order, "Largest group order")->required()->check(CLI::PositiveNumber);
  verify->add_option("--out", cfg.out_path, "JSONL result log (resumed if present)");

  auto* scan = app.add_subcommand("scan-conjecture", "Search group families for reciprocity counterexamples");
  scan->add_option("--families", cfg.families, "Comma-separated: abelian,dihedral,dicyclic,products")->required();
  scan->add_option("--max-order", cfg.max_order, "Largest group order")->required()->check(CLI::PositiveNumber);
  scan->add_option("--out", cfg.out_path, "JSONL result log (resumed if present)");

  auto* lemma = app.add_subcommand("lemma", "Exhaustive grid check of a binomial or structure lemma");
  lemma->add_option("--id", cfg.lemma_id, "2.1i | 2.1ii | 2.2i | 2.2ii | struct")
      ->required()
      ->check(CLI::IsMember({"2.1i", "2.1ii", "2.2i", "2.2ii", "struct"}));
  lemma->add_option("--max", cfg.max, "Grid bound")->required()->check(CLI::PositiveNumber);
  lemma->add_option("--out", cfg.out_path, "CSV failure report");

  auto* catalan = app.add_subcommand("catalan", "Rational Catalan number for coprime n, m");
  catalan->add_option("--n", cfg.n)->required();
  catalan->add_option("--m", cfg.m)->required();

  auto* gapfree = app.add_subcommand("gapfree", "Whether n has no two divisors > 1 differing by 1");
  gapfree->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      const auto report = zsr::count(parse_group(cfg.group), cfg.length, parse_count_method(cfg.method));
      if (cfg.format == Format::human) {
        out << "|M(" << report.group.notation() << ", " << report.length << ")| = " << report.value.str() << " ("
            << to_string(report.method) << ")\n";
      } else if (cfg.format == Format::csv) {
        out << "group,order,length,method,value\n"
            << report.group.notation() << ',' << report.group.order() << ',' << report.length << ','
            << to_string(report.method) << ',' << report.value.str() << '\n';
      } else {
        out << to_json(report).dump() << '\n';
      }
      return kExitOk;
    }

    if (spectrum->parsed()) {
      const auto g = parse_group(cfg.group);
      const auto s = cfg.brute_force ? order_spectrum_bruteforce(g.abelian()) : order_spectrum(g);
      if (cfg.format == Format::human) {
        out << s.str() << '\n';
      } else if (cfg.format == Format::csv) {
        out << "d,count\n";
        for (const auto& [d, c] : s.entries()) out << d << ',' << c << '\n';
      } else {
        out << to_json(g, s).dump() << '\n';
      }
      return kExitOk;
    }

    if (enumerate->parsed()) {
      const auto groups = enumerate_abelian(cfg.order);
      if (cfg.format == Format::json) {
        ordered_json j;
        j["order"] = cfg.order;
        j["groups"] = ordered_json::array();
        for (const auto& g : groups) j["groups"].push_back(GroupDescriptor(g).notation());
        out << j.dump() << '\n';
      } else if (cfg.format == Format::jsonl) {
        for (const auto& g : groups) {
          ordered_json j;
          j["group"] = GroupDescriptor(g).notation();
          j["invariant_factors"] = g.invariant_factors();
          out << j.dump() << '\n';
        }
      } else {
        if (cfg.format == Format::csv) out << "group\n";
        for (const auto& g : groups) out << GroupDescriptor(g).notation() << '\n';
      }
      return kExitOk;
    }

    if (check->parsed()) {
      const auto r = reciprocity_check(parse_group(cfg.g), parse_group(cfg.h));
      print_report(r, cfg.format, out);
      return r.iff_consistent ? kExitOk : kExitViolation;
    }

    if (verify->parsed()) return run_scan(cfg, {Family::abelian}, out, err);
    if (scan->parsed()) return run_scan(cfg, parse_families(cfg.families), out, err);
    if (lemma->parsed()) return run_lemma(cfg, out, err);

    if (catalan->parsed()) {
      const auto v = rational_catalan(cfg.n, cfg.m);
      if (cfg.format == Format::human || cfg.format == Format::csv) {
        if (cfg.format == Format::csv) out << "n,m,value\n" << cfg.n << ',' << cfg.m << ',';
        out << v.str() << '\n';
      } else {
        ordered_json j;
        j["value"] = v.str();
        j["n"] = cfg.n;
        j["m"] = cfg.m;
        out << j.dump() << '\n';
      }
      return kExitOk;
    }

    if (gapfree->parsed()) {
      const bool v = divisor_gap_free(cfg.n);
      if (cfg.format == Format::human || cfg.format == Format::csv) {
        if (cfg.format == Format::csv) out << "n,gap_free\n" << cfg.n << ',';
        out << (v ? "true" : "false") << '\n';
      } else {
        ordered_json j;
        j["n"] = cfg.n;
        j["gap_free"] = v;
        out << j.dump() << '\n';
      }
      return kExitOk;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zsr::cli
