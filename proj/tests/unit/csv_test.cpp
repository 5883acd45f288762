#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fracburgers/csv.hpp"
#include "fracburgers/stable_kernel.hpp"

using namespace fracburgers;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(FormatNumber, RoundTripsAndSpellsSpecialValues) {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.0}) {
    EXPECT_EQ(std::stod(csv::format_number(v)), v);
  }
  EXPECT_EQ(csv::format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(csv::format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(csv::format_number(std::nan("")), "nan");
  EXPECT_EQ(csv::format_number(2.0), "2");
}

TEST(Writer, CommentsHeaderAndRows) {
  std::ostringstream out;
  csv::Writer w(out);
  w.comment("first\nsecond");
  w.header({"a", "b"});
  w.row({1.0, 0.5});
  const auto l = lines(out.str());
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "# first");
  EXPECT_EQ(l[1], "# second");
  EXPECT_EQ(l[2], "a,b");
  EXPECT_EQ(l[3], "1,0.5");
}

TEST(Writer, QuotesCellsWithSeparators) {
  std::ostringstream out;
  csv::Writer w(out);
  const std::vector<std::string> cells{"plain", "gn(p0=3,p=inf)", "say \"hi\""};
  w.cells(cells);
  EXPECT_EQ(out.str(), "plain,\"gn(p0=3,p=inf)\",\"say \"\"hi\"\"\"\n");
}

TEST(Writer, KernelProfileColumns) {
  std::ostringstream out;
  const StableKernel kernel(2.0);
  const std::vector<double> ys{-1.0, 0.0, 1.0};
  csv::write_kernel_profile(out, kernel, ys);
  const auto l = lines(out.str());
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "y,P_alpha");
  const double centre = std::stod(l[2].substr(l[2].find(',') + 1));
  EXPECT_NEAR(centre, 1.0 / std::sqrt(4.0 * M_PI), 1e-12);
}

TEST(Writer, InequalityReportColumns) {
  std::ostringstream out;
  InequalityReport r;
  r.name = "nash";
  r.count = 3;
  r.worst_ratio = 0.25;
  const std::vector<InequalityReport> reports{r};
  csv::write_inequality_reports(out, reports);
  const auto l = lines(out.str());
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "name,count,rejected,worst_ratio,implied_constant,violations,worst_index");
  EXPECT_EQ(l[1].substr(0, 7), "nash,3,");
}
