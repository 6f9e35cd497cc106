#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"

#include "zsr/counting.hpp"
#include "zsr/lemmas.hpp"
#include "zsr/reciprocity.hpp"

namespace zsr {

using ordered_json = nlohmann::ordered_json;

// Machine-readable encodings. Big integers are always decimal strings and
// field order is fixed, so dump() of a record is canonical.

/// {g, h, order_g, order_h, spectra_agree, witness_divisor, count_g_at_h,
///  count_h_at_g, iff_consistent}
ordered_json to_json(const ReciprocityReport& r);
ReciprocityReport report_from_json(const nlohmann::json& j);

/// One line of the result log, without the trailing newline.
std::string to_jsonl(const ReciprocityReport& r);
ReciprocityReport parse_jsonl(std::string_view line);

PairKey pair_key(const ReciprocityReport& r);

ordered_json to_json(const ScanSummary& s);
ordered_json to_json(const CountReport& c);
ordered_json to_json(const GroupDescriptor& g, const OrderSpectrum& s);
ordered_json to_json(const LemmaInstance& inst);
ordered_json to_json(const LemmaGridSummary& s);

/// lemma_id,m,n,a,b,p,q,lhs,rhs
std::string lemma_csv_header();
std::string to_csv_row(const LemmaInstance& inst);

/// Append-only JSONL log of reciprocity reports keyed by pair.
///
/// Opening an existing file loads every complete record; a trailing partial
/// line (from an interrupted run) is cut off before appending resumes.
class ResultLog {
 public:
  explicit ResultLog(std::filesystem::path path);

  const std::map<PairKey, ReciprocityReport>& known() const { return known_; }
  const std::filesystem::path& path() const { return path_; }

  void append(const ReciprocityReport& r);

 private:
  std::filesystem::path path_;
  std::map<PairKey, ReciprocityReport> known_;
  std::ofstream out_;
};

}  // namespace zsr
