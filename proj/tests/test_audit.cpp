#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "apsum/cli.hpp"
#include "apsum/report.hpp"

using namespace apsum;

namespace {

AuditGrid small_grid() {
  AuditGrid grid = default_grid();
  grid.p_max = 6;
  grid.t_max = 3;
  return grid;
}

std::string jsonl(const AuditReport& r) {
  std::ostringstream os;
  write_jsonl(r, os);
  return os.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("apsum_test_" + name);
}

}  // namespace

TEST(IdentityFilter, Parsing) {
  const auto f = parse_identity_filter("EQ1,THM5:m=1");
  EXPECT_TRUE(f.includes(IdentityId::EQ1_RECURRENCE_L));
  EXPECT_TRUE(f.includes(IdentityId::THM5_EXPANSION));
  EXPECT_FALSE(f.includes(IdentityId::EQ9_CLOSED_T));
  EXPECT_EQ(f.thm5_m, 1u);
  EXPECT_TRUE(parse_identity_filter("M1_DETERMINANT_BRIDGE").includes(IdentityId::M1_DETERMINANT_BRIDGE));
  EXPECT_TRUE(parse_identity_filter("").ids.empty());
  EXPECT_THROW(parse_identity_filter("EQ7"), Error);
  EXPECT_THROW(parse_identity_filter("EQ1:m=2"), Error);
  EXPECT_THROW(parse_identity_filter("THM5:m=x"), Error);
}

TEST(Audit, JsonlSchema) {
  const auto report = run_audit(small_grid(), IdentityFilter::all());
  ASSERT_FALSE(report.cases.empty());
  std::istringstream in(jsonl(report));
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const auto j = ojson::parse(line);
    ASSERT_TRUE(j.contains("identity"));
    ASSERT_TRUE(parse_identity(j["identity"].get<std::string>()).has_value());
    const auto& params = j.at("params");
    EXPECT_TRUE(params.contains("k") != params.contains("n"));
    EXPECT_TRUE(params.at("a").contains("re") && params.at("a").contains("im"));
    const auto verdict = parse_verdict(j.at("verdict").get<std::string>());
    ASSERT_TRUE(verdict.has_value());
    if (*verdict == Verdict::HOLDS || *verdict == Verdict::FAILS) {
      const auto ref = scalar_from_json(j.at("reference"));
      const auto claimed = scalar_from_json(j.at("claimed"));
      EXPECT_EQ(scalar_from_json(j.at("residual")), claimed - ref);
      EXPECT_EQ(*verdict == Verdict::HOLDS, claimed == ref);
    } else {
      EXPECT_TRUE(j.contains("detail"));
    }
  }
  EXPECT_EQ(lines, report.cases.size());
}

TEST(Audit, CsvHeader) {
  const auto report = run_audit(small_grid(), parse_identity_filter("EQ1"));
  std::ostringstream os;
  write_csv(report, os);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "identity,n,m,t,a,d,reference,claimed,residual,verdict");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, report.cases.size());
}

TEST(Audit, Deterministic) {
  const auto grid = small_grid();
  EXPECT_EQ(jsonl(run_audit(grid, IdentityFilter::all())), jsonl(run_audit(grid, IdentityFilter::all())));
}

TEST(Audit, ParallelMatchesSerial) {
  const auto grid = small_grid();
  EXPECT_EQ(jsonl(run_audit(grid, IdentityFilter::all(), 1)),
            jsonl(run_audit(grid, IdentityFilter::all(), 4)));
}

TEST(Audit, EmptyFilterGivesEmptyReport) {
  const auto report = run_audit(small_grid(), IdentityFilter{});
  EXPECT_TRUE(report.cases.empty());
  EXPECT_EQ(jsonl(report), "");
}

TEST(Audit, ExactIdentitiesHold) {
  const auto report =
      run_audit(default_grid(), parse_identity_filter("EQ1,THM2,THM4,THM5:m=1,M1"));
  for (const auto& c : report.cases) {
    EXPECT_TRUE(c.verdict == Verdict::HOLDS || c.verdict == Verdict::SKIPPED)
        << to_string(c.identity) << " index=" << c.index;
    if (c.identity == IdentityId::THM5_EXPANSION && c.verdict != Verdict::SKIPPED) {
      EXPECT_EQ(c.m, 1u);
    }
  }
  EXPECT_EQ(report.summary.at(IdentityId::THM2_DET).holds, 13u * default_samples().size());
}

TEST(Audit, SkipsBelowElimination) {
  const auto report = run_audit(small_grid(), parse_identity_filter("THM4,EQ5,EQ9,M1"));
  for (const auto& c : report.cases) {
    const bool low = indexed_by_k(c.identity) ? c.index < 2 : c.index < 3;
    EXPECT_EQ(c.verdict == Verdict::SKIPPED, low) << to_string(c.identity) << " " << c.index;
  }
}

TEST(Audit, SummaryCounts) {
  const auto report = run_audit(small_grid(), IdentityFilter::all());
  std::size_t total = 0;
  for (const auto& [id, s] : report.summary) total += s.total();
  EXPECT_EQ(total, report.cases.size());
  EXPECT_EQ(report.summary.size(), kAllIdentities.size());
  const auto& eq2 = report.summary.at(IdentityId::EQ2_RECURRENCE_T);
  ASSERT_GT(eq2.fails, 0u);
  ASSERT_TRUE(eq2.minimal_failure.has_value());
  for (const auto& c : report.cases) {
    if (c.identity == IdentityId::EQ2_RECURRENCE_T && c.verdict == Verdict::FAILS) {
      EXPECT_LE(*eq2.minimal_failure, std::make_tuple(c.index, c.m, c.t));
    }
  }
}

TEST(Audit, ExpectedVerdicts) {
  const auto report = run_audit(small_grid(), parse_identity_filter("EQ1,EQ5"));
  const auto path = temp_file("expected.jsonl");
  emit_report(report, ReportFormat::Jsonl, path.string());
  const auto expected = load_expected_verdicts(path.string());
  EXPECT_EQ(expected.size(), report.cases.size());
  EXPECT_TRUE(unexpected_verdicts(report, expected).empty());

  auto changed = expected;
  changed.begin()->second = Verdict::FAILS;
  EXPECT_EQ(unexpected_verdicts(report, changed).size(), 1u);
  std::filesystem::remove(path);

  EXPECT_THROW(load_expected_verdicts("/nonexistent/apsum.jsonl"), Error);
}

TEST(Audit, ClosedFormWarningTableMatchesMeasurement) {
  AuditGrid grid = default_grid();
  const auto report = run_audit(grid, parse_identity_filter("EQ5,EQ9"));
  std::map<std::pair<std::uint64_t, bool>, bool> exact;
  for (const auto& c : report.cases) {
    if (c.verdict == Verdict::SKIPPED) continue;
    const auto key = std::make_pair(c.index - 1, c.identity == IdentityId::EQ9_CLOSED_T);
    auto [it, fresh] = exact.emplace(key, true);
    it->second = it->second && c.verdict == Verdict::HOLDS;
  }
  ASSERT_FALSE(exact.empty());
  for (const auto& [key, holds] : exact) {
    EXPECT_EQ(closed_form_validated(key.first, key.second), holds)
        << "p=" << key.first << " alternating=" << key.second;
  }
}
