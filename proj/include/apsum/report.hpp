#pragma once

/**
 * @file report.hpp
 * @brief JSONL / CSV serialization of audit reports and expected-verdict
 *        comparison.
 *
 * JSONL, one object per case, fields in this order:
 *   {"identity", "params", "reference", "claimed", "residual", "verdict"}
 * plus "detail" on ERROR and SKIPPED cases. Complex scalars are
 * {"re": "p/q", "im": "p/q"}; absent values are null.
 *
 * CSV header: identity,n,m,t,a,d,reference,claimed,residual,verdict
 * (the n column holds k for system identities). Scalars are quoted canonical
 * text.
 */

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "apsum/audit.hpp"
#include "apsum/text.hpp"
#include "json.hpp"

namespace apsum {

using ojson = nlohmann::ordered_json;

inline ojson scalar_json(const GaussianRational& x) {
  return ojson{{"re", x.re().to_string()}, {"im", x.im().to_string()}};
}

inline GaussianRational scalar_from_json(const ojson& j) {
  return {parse_scalar(j.at("re").get<std::string>()).re(),
          parse_scalar(j.at("im").get<std::string>()).re()};
}

inline ojson case_json(const AuditCase& c) {
  ojson params = ojson::object();
  params[indexed_by_k(c.identity) ? "k" : "n"] = c.index;
  if (c.m) params["m"] = *c.m;
  if (c.t) params["t"] = *c.t;
  params["a"] = scalar_json(c.a);
  params["d"] = scalar_json(c.d);
  params["sample"] = c.sample;

  const auto opt = [](const std::optional<GaussianRational>& v) {
    return v ? scalar_json(*v) : ojson(nullptr);
  };
  ojson j = ojson::object();
  j["identity"] = std::string(to_string(c.identity));
  j["params"] = std::move(params);
  j["reference"] = opt(c.reference);
  j["claimed"] = opt(c.claimed);
  j["residual"] = opt(c.residual);
  j["verdict"] = std::string(to_string(c.verdict));
  if (c.verdict == Verdict::ERROR || c.verdict == Verdict::SKIPPED) j["detail"] = c.detail;
  return j;
}

inline void write_jsonl(const AuditReport& report, std::ostream& os) {
  for (const AuditCase& c : report.cases) os << case_json(c).dump() << '\n';
}

inline constexpr std::string_view kCsvHeader =
    "identity,n,m,t,a,d,reference,claimed,residual,verdict";

inline void write_csv(const AuditReport& report, std::ostream& os) {
  const auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  const auto opt = [&](const std::optional<GaussianRational>& v) {
    return v ? quoted(v->to_string()) : std::string();
  };
  const auto num = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  os << kCsvHeader << '\n';
  for (const AuditCase& c : report.cases) {
    os << to_string(c.identity) << ',' << c.index << ',' << num(c.m) << ',' << num(c.t) << ','
       << quoted(c.a.to_string()) << ',' << quoted(c.d.to_string()) << ',' << opt(c.reference)
       << ',' << opt(c.claimed) << ',' << opt(c.residual) << ',' << to_string(c.verdict) << '\n';
  }
}

enum class ReportFormat { Jsonl, Csv };

inline void emit_report(const AuditReport& report, ReportFormat format, std::ostream& os) {
  if (format == ReportFormat::Jsonl) {
    write_jsonl(report, os);
  } else {
    write_csv(report, os);
  }
}

inline void emit_report(const AuditReport& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open \"" + path + "\" for writing");
  emit_report(report, format, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to \"" + path + "\" failed");
}

/// Human-readable per-identity counts.
inline void write_summary(const AuditReport& report, std::ostream& os) {
  for (const auto& [id, s] : report.summary) {
    os << to_string(id) << ": " << s.total() << " cases, " << s.holds << " HOLDS, " << s.fails
       << " FAILS, " << s.errors << " ERROR, " << s.skipped << " SKIPPED";
    if (s.minimal_failure) {
      const auto& [index, m, t] = *s.minimal_failure;
      os << "; minimal failure " << (indexed_by_k(id) ? "k=" : "n=") << index;
      if (m) os << " m=" << *m;
      if (t) os << " t=" << *t;
    }
    os << '\n';
  }
}

inline ojson summary_json(const AuditReport& report) {
  ojson out = ojson::object();
  for (const auto& [id, s] : report.summary) {
    ojson e{{"cases", s.total()}, {"holds", s.holds},     {"fails", s.fails},
            {"errors", s.errors}, {"skipped", s.skipped}, {"minimal_failure", nullptr}};
    if (s.minimal_failure) {
      const auto& [index, m, t] = *s.minimal_failure;
      ojson mf = ojson::object();
      mf[indexed_by_k(id) ? "k" : "n"] = index;
      mf["m"] = m ? ojson(*m) : ojson(nullptr);
      mf["t"] = t ? ojson(*t) : ojson(nullptr);
      e["minimal_failure"] = std::move(mf);
    }
    out[std::string(to_string(id))] = std::move(e);
  }
  return out;
}

/// Key identifying a case independently of sample numbering.
inline std::string case_key(std::string_view identity, std::uint64_t index,
                            const std::optional<std::uint64_t>& m,
                            const std::optional<std::uint64_t>& t, const GaussianRational& a,
                            const GaussianRational& d) {
  std::ostringstream os;
  os << identity << '|' << index << '|' << (m ? std::to_string(*m) : "-") << '|'
     << (t ? std::to_string(*t) : "-") << '|' << a.to_string() << '|' << d.to_string();
  return os.str();
}

inline std::string case_key(const AuditCase& c) {
  return case_key(to_string(c.identity), c.index, c.m, c.t, c.a, c.d);
}

/// Reads a JSONL report (for example an earlier run) as case key -> verdict.
inline std::map<std::string, Verdict> load_expected_verdicts(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read expected-verdict file \"" + path + "\"");
  std::map<std::string, Verdict> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const ojson j = ojson::parse(line);
      const ojson& params = j.at("params");
      const bool has_k = params.contains("k");
      const std::uint64_t index = params.at(has_k ? "k" : "n").get<std::uint64_t>();
      std::optional<std::uint64_t> m;
      std::optional<std::uint64_t> t;
      if (params.contains("m")) m = params.at("m").get<std::uint64_t>();
      if (params.contains("t")) t = params.at("t").get<std::uint64_t>();
      const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
      if (!verdict) throw Error(ErrorCode::IoError, "unknown verdict");
      out[case_key(j.at("identity").get<std::string>(), index, m, t,
                   scalar_from_json(params.at("a")), scalar_from_json(params.at("d")))] = *verdict;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::IoError,
                  "malformed line " + std::to_string(line_no) + " in \"" + path + "\": " + e.what());
    }
  }
  return out;
}

/// Cases whose verdict differs from (or is missing in) the expectation.
inline std::vector<std::string> unexpected_verdicts(const AuditReport& report,
                                                    const std::map<std::string, Verdict>& expected) {
  std::vector<std::string> out;
  for (const AuditCase& c : report.cases) {
    const std::string key = case_key(c);
    const auto it = expected.find(key);
    if (it == expected.end()) {
      out.push_back(key + ": no expectation, got " + std::string(to_string(c.verdict)));
    } else if (it->second != c.verdict) {
      out.push_back(key + ": expected " + std::string(to_string(it->second)) + ", got " +
                    std::string(to_string(c.verdict)));
    }
  }
  return out;
}

}  // namespace apsum
