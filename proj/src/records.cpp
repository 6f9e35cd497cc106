#include "zsr/records.hpp"

#include <sstream>

namespace zsr {

ordered_json to_json(const ReciprocityReport& r) {
  ordered_json j;
  j["g"] = r.g.notation();
  j["h"] = r.h.notation();
  j["order_g"] = r.g.order();
  j["order_h"] = r.h.order();
  j["spectra_agree"] = r.spectra_agree;
  j["witness_divisor"] = r.witness_divisor ? ordered_json(*r.witness_divisor) : ordered_json(nullptr);
  j["count_g_at_h"] = r.count_g_at_h.str();
  j["count_h_at_g"] = r.count_h_at_g.str();
  j["iff_consistent"] = r.iff_consistent;
  return j;
}

ReciprocityReport report_from_json(const nlohmann::json& j) {
  ReciprocityReport r;
  try {
    r.g = parse_group(j.at("g").get<std::string>());
    r.h = parse_group(j.at("h").get<std::string>());
    if (j.at("order_g").get<std::uint64_t>() != r.g.order() || j.at("order_h").get<std::uint64_t>() != r.h.order()) {
      throw DomainError("record orders do not match group notation");
    }
    r.spectra_agree = j.at("spectra_agree").get<bool>();
    const auto& w = j.at("witness_divisor");
    if (!w.is_null()) r.witness_divisor = w.get<std::uint64_t>();
    r.count_g_at_h = Natural::parse(j.at("count_g_at_h").get<std::string>());
    r.count_h_at_g = Natural::parse(j.at("count_h_at_g").get<std::string>());
    r.iff_consistent = j.at("iff_consistent").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed reciprocity record: ") + e.what());
  }
  r.counts_agree = r.count_g_at_h == r.count_h_at_g;
  if (r.witness_divisor.has_value() == r.spectra_agree) {
    throw DomainError("malformed reciprocity record: witness_divisor inconsistent with spectra_agree");
  }
  return r;
}

std::string to_jsonl(const ReciprocityReport& r) { return to_json(r).dump(); }

ReciprocityReport parse_jsonl(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSONL line: ") + e.what());
  }
  return report_from_json(j);
}

PairKey pair_key(const ReciprocityReport& r) { return {r.g.notation(), r.h.notation()}; }

ordered_json to_json(const ScanSummary& s) {
  ordered_json j;
  j["pairs_checked"] = s.pairs_checked;
  j["pairs_spectra_agree"] = s.pairs_spectra_agree;
  j["max_order"] = s.max_order;
  j["families"] = s.families;
  ordered_json v = ordered_json::array();
  for (const auto& r : s.violations) v.push_back(to_json(r));
  j["violations"] = std::move(v);
  return j;
}

ordered_json to_json(const CountReport& c) {
  ordered_json j;
  j["value"] = c.value.str();
  j["group"] = c.group.notation();
  j["order"] = c.group.order();
  j["length"] = c.length;
  j["method"] = std::string(to_string(c.method));
  return j;
}

ordered_json to_json(const GroupDescriptor& g, const OrderSpectrum& s) {
  ordered_json j;
  j["group"] = g.notation();
  j["order"] = s.group_order();
  ordered_json entries = ordered_json::object();
  for (const auto& [d, c] : s.entries()) entries[std::to_string(d)] = c;
  j["spectrum"] = std::move(entries);
  return j;
}

ordered_json to_json(const LemmaInstance& inst) {
  ordered_json j;
  j["lemma_id"] = std::string(to_string(inst.id));
  j["parameters"] = inst.parameters;
  j["holds"] = inst.holds;
  j["comparison"] = inst.comparison;
  j["lhs"] = inst.lhs.str();
  j["rhs"] = inst.rhs.str();
  return j;
}

ordered_json to_json(const LemmaGridSummary& s) {
  ordered_json j;
  j["grid"] = s.grid;
  j["max"] = s.max;
  j["instances"] = s.instances;
  ordered_json f = ordered_json::array();
  for (const auto& inst : s.failures) f.push_back(to_json(inst));
  j["failures"] = std::move(f);
  return j;
}

std::string lemma_csv_header() { return "lemma_id,m,n,a,b,p,q,lhs,rhs"; }

std::string to_csv_row(const LemmaInstance& inst) {
  std::ostringstream os;
  os << to_string(inst.id);
  for (const char* key : {"m", "n", "a", "b", "p", "q"}) {
    os << ',';
    if (auto it = inst.parameters.find(key); it != inst.parameters.end()) os << it->second;
  }
  os << ',' << inst.lhs.str() << ',' << inst.rhs.str();
  return os.str();
}

// ---------------------------------------------------------------- ResultLog

ResultLog::ResultLog(std::filesystem::path path) : path_(std::move(path)) {
  std::uintmax_t keep = 0;
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t start = 0;
    while (start < content.size()) {
      const auto nl = content.find('\n', start);
      if (nl == std::string::npos) break;  // partial tail
      const std::string_view line(content.data() + start, nl - start);
      if (!line.empty()) {
        auto r = parse_jsonl(line);
        known_.emplace(pair_key(r), std::move(r));
      }
      start = nl + 1;
    }
    keep = start;
    if (keep != content.size()) std::filesystem::resize_file(path_, keep);
  }
  out_.open(path_, std::ios::binary | std::ios::app);
  if (!out_) throw std::runtime_error("cannot open result log " + path_.string());
}

void ResultLog::append(const ReciprocityReport& r) {
  out_ << to_jsonl(r) << '\n';
  out_.flush();
  known_.insert_or_assign(pair_key(r), r);
}

}  // namespace zsr
