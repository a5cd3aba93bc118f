#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "matchgroup/catalog.hpp"
#include "matchgroup/cli.hpp"
#include "matchgroup/io.hpp"

namespace mg = matchgroup;
namespace cli = matchgroup::cli;
using mg::GroupSubset;
using mg::GroupTable;

namespace {

mg::ParseError parse_error_of(auto&& fn) {
  try {
    fn();
  } catch (const mg::ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError thrown";
  return mg::ParseError("none", 0, 0);
}

GroupTable finite(std::string_view spec) { return std::get<GroupTable>(mg::parse_group_spec(spec)); }

struct Captured {
  int code;
  std::string out, err;
};

Captured run(auto&& fn) {
  std::ostringstream out, err;
  const int code = fn(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(GroupSpec, Families) {
  EXPECT_EQ(finite("C4"), mg::make_cyclic(4));
  EXPECT_EQ(finite("D3"), mg::make_dihedral(3));
  EXPECT_EQ(finite("S3"), mg::make_symmetric(3));
  EXPECT_EQ(finite("Q8"), mg::make_quaternion());
  EXPECT_EQ(finite("C2xC4"), mg::direct_product(mg::make_cyclic(2), mg::make_cyclic(4)));
  EXPECT_EQ(finite("C2 x C2 x C2").order(), 8u);
  EXPECT_EQ(finite("C2xC4").label(), "C2xC4");
  const auto z = mg::parse_group_spec("Z^3");
  ASSERT_TRUE(std::holds_alternative<mg::LatticeGroup>(z));
  EXPECT_EQ(std::get<mg::LatticeGroup>(z).dimension(), 3u);
}

TEST(GroupSpec, ErrorsCarryColumns) {
  EXPECT_EQ(parse_error_of([] { mg::parse_group_spec("X4"); }).column(), 1u);
  EXPECT_EQ(parse_error_of([] { mg::parse_group_spec("C4xQ7"); }).column(), 5u);
  EXPECT_EQ(parse_error_of([] { mg::parse_group_spec("C4y"); }).column(), 3u);
  EXPECT_EQ(parse_error_of([] { mg::parse_group_spec("S6"); }).kind(), mg::ErrorKind::Parse);
  EXPECT_EQ(parse_error_of([] { mg::parse_group_spec("Z^0"); }).column(), 3u);
  EXPECT_EQ(parse_error_of([] { mg::parse_group_spec("C"); }).column(), 2u);
  try {
    mg::parse_group_spec("C6000");
    FAIL();
  } catch (const mg::Error& e) {
    EXPECT_EQ(e.kind(), mg::ErrorKind::SizeLimit);
  }
}

TEST(SubsetLiteral, Finite) {
  const auto c6 = mg::make_cyclic(6);
  EXPECT_EQ(mg::parse_subset(c6, "{0,2,4}"), (GroupSubset(c6, {0, 2, 4})));
  EXPECT_EQ(mg::parse_subset(c6, "{ 5 , 1 }"), (GroupSubset(c6, {1, 5})));
  EXPECT_TRUE(mg::parse_subset(c6, "{}").empty());
  EXPECT_EQ(parse_error_of([&] { mg::parse_subset(c6, "{0,6}"); }).column(), 4u);
  EXPECT_EQ(parse_error_of([&] { mg::parse_subset(c6, "{1,1}"); }).column(), 4u);
  EXPECT_EQ(parse_error_of([&] { mg::parse_subset(c6, "0,1"); }).column(), 1u);
  EXPECT_EQ(parse_error_of([&] { mg::parse_subset(c6, "{a}"); }).column(), 2u);
  EXPECT_EQ(parse_error_of([&] { mg::parse_subset(c6, "{1}x"); }).kind(), mg::ErrorKind::Parse);
}

TEST(SubsetLiteral, NamedElements) {
  std::istringstream in("n: 2\nnames: e t\ntable:\n0 1\n1 0\n");
  const auto g = mg::read_cayley_table(in);
  EXPECT_EQ(mg::parse_subset(g, "{t}"), (GroupSubset(g, {1})));
  EXPECT_EQ(mg::parse_subset(g, "{e,1}"), (GroupSubset(g, {0, 1})));
  EXPECT_EQ(g.format(1), "t");
}

TEST(SubsetLiteral, Lattice) {
  const mg::LatticeGroup z2(2), z1(1);
  EXPECT_EQ(mg::parse_subset(z2, "{(0,0),(1,-2)}"), (mg::LatticeSubset(z2, {{0, 0}, {1, -2}})));
  EXPECT_EQ(mg::parse_subset(z1, "{3,-1}"), (mg::LatticeSubset(z1, {{-1}, {3}})));
  EXPECT_EQ(mg::parse_subset(z1, "{(4)}"), (mg::LatticeSubset(z1, {{4}})));
  EXPECT_EQ(parse_error_of([&] { mg::parse_subset(z2, "{(1,2,3)}"); }).column(), 2u);
  EXPECT_EQ(parse_error_of([&] { mg::parse_subset(z2, "{1}"); }).kind(), mg::ErrorKind::Parse);
  EXPECT_EQ(parse_error_of([&] { mg::parse_subset(z1, "{1,1}"); }).column(), 4u);
}

TEST(CayleyFile, RoundTripsCatalog) {
  for (const auto& g : mg::catalog(12)) {
    std::istringstream in(mg::to_cayley_text(g));
    const auto back = mg::read_cayley_table(in, g.label());
    EXPECT_EQ(back, g) << g.label();
    EXPECT_EQ(mg::to_cayley_text(back), mg::to_cayley_text(g));
  }
  std::istringstream in("n: 2\nnames: e, t\ntable:\n0 1\n1 0\n");
  const auto named = mg::read_cayley_table(in, "named");
  std::istringstream again(mg::to_cayley_text(named));
  EXPECT_EQ(mg::read_cayley_table(again), named);
}

TEST(CayleyFile, CommentsAndCommas) {
  std::istringstream in("# Klein\n\nn: 4\n  # rows follow\ntable:\n0,1,2,3\n1,0,3,2\n2 3 0 1\n3 2 1 0\n");
  EXPECT_EQ(mg::read_cayley_table(in), mg::direct_product(mg::make_cyclic(2), mg::make_cyclic(2)));
}

TEST(CayleyFile, ParseErrorsCarryPositions) {
  auto err = [](const std::string& text) {
    return parse_error_of([&] {
      std::istringstream in(text);
      mg::read_cayley_table(in);
    });
  };
  auto e = err("n: 2\ntable:\n0 1\n1 x\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 3u);
  e = err("n: 2\ntable:\n0 1\n1 0 1\n");
  EXPECT_EQ(e.line(), 4u);
  e = err("n: 2\ntable:\n0 1\n");
  EXPECT_EQ(e.line(), 3u);
  e = err("size: 2\n");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 1u);
  e = err("n: 2\ntable:\n0 1\n1 2\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 3u);
  e = err("table:\n");
  EXPECT_EQ(e.line(), 1u);
  e = err("n: 0\n");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(err("n: 2\n").kind(), mg::ErrorKind::Parse);
}

TEST(CayleyFile, GroupAxiomsStillChecked) {
  std::istringstream in("n: 2\ntable:\n0 1\n1 1\n");
  EXPECT_THROW(mg::read_cayley_table(in), mg::NotAGroupError);
}

TEST(Cli, MatchExitCodes) {
  const auto fmt = mg::ReportFormat::Text;
  auto neg = run([&](auto& o, auto& e) { return cli::cmd_match("C4", "{0,2}", "{1,2}", fmt, o, e); });
  EXPECT_EQ(neg.code, cli::kNegative);
  EXPECT_NE(neg.out.find("Hall violator S = {0,2}"), std::string::npos);

  auto pos = run([&](auto& o, auto& e) { return cli::cmd_match("C5", "{1,2,3,4}", "{1,2,3,4}", fmt, o, e); });
  EXPECT_EQ(pos.code, cli::kOk);
  EXPECT_NE(pos.out.find("1 -> 4"), std::string::npos);

  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_match("C4", "{0,2}", "{0,2}", fmt, o, e); }).code,
            cli::kInputError);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_match("C4", "{0}", "{1,2}", fmt, o, e); }).code,
            cli::kInputError);
  const auto bad = run([&](auto& o, auto& e) { return cli::cmd_match("C4", "{0,9}", "{1,2}", fmt, o, e); });
  EXPECT_EQ(bad.code, cli::kInputError);
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0u);

  auto lattice = run([&](auto& o, auto& e) {
    return cli::cmd_match("Z^2", "{(0,0),(1,0)}", "{(0,1),(1,1)}", mg::ReportFormat::Machine, o, e);
  });
  EXPECT_EQ(lattice.code, cli::kOk);
  const auto j = nlohmann::json::parse(lattice.out);
  EXPECT_EQ(j["result"], "matching");
  EXPECT_EQ(j["pairs"].size(), 2u);
}

TEST(Cli, MachineErrorRecord) {
  auto r = run([](auto& o, auto& e) {
    return cli::cmd_match("C4", "{0,2}", "{0,2}", mg::ReportFormat::Machine, o, e);
  });
  const auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j["record"], "error");
  EXPECT_EQ(j["error"], "IdentityInB");
}

TEST(Cli, Verify) {
  mg::LabConfig cfg;
  auto ok = run([&](auto& o, auto& e) { return cli::cmd_verify("C5", {}, cfg, mg::ReportFormat::Machine, o, e); });
  EXPECT_EQ(ok.code, cli::kOk);
  std::istringstream lines(ok.out);
  std::size_t summaries = 0;
  for (std::string line; std::getline(lines, line);) {
    const auto j = nlohmann::json::parse(line);
    if (j["record"] == "summary") {
      ++summaries;
      EXPECT_NE(j["status"], "fail");
    }
  }
  EXPECT_EQ(summaries, cli::all_checks().size());

  auto c3 = run([&](auto& o, auto& e) {
    return cli::cmd_verify("C3", {"corollary"}, cfg, mg::ReportFormat::Text, o, e);
  });
  EXPECT_EQ(c3.code, cli::kOk);
  EXPECT_NE(c3.out.find("flagged"), std::string::npos);

  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_verify("C4", {"nope"}, cfg, mg::ReportFormat::Text, o, e); })
                .code,
            cli::kInputError);
  auto capped = run([&](auto& o, auto& e) {
    return cli::cmd_verify("C16", {"automatching"}, cfg, mg::ReportFormat::Text, o, e);
  });
  EXPECT_EQ(capped.code, cli::kInputError);
  EXPECT_NE(capped.err.find("automatching"), std::string::npos);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_verify("Z^2", {}, cfg, mg::ReportFormat::Text, o, e); })
                .code,
            cli::kInputError);
}

TEST(Cli, Counterexample) {
  auto c6 = run([](auto& o, auto& e) { return cli::cmd_counterexample("C6", mg::ReportFormat::Machine, o, e); });
  EXPECT_EQ(c6.code, cli::kOk);
  const auto j = nlohmann::json::parse(c6.out);
  EXPECT_EQ(j["A"], "{0,2,4}");
  EXPECT_EQ(j["B"], "{1,2,4}");
  EXPECT_EQ(run([](auto& o, auto& e) { return cli::cmd_counterexample("C5", mg::ReportFormat::Text, o, e); }).code,
            cli::kNotApplicable);
  EXPECT_EQ(run([](auto& o, auto& e) { return cli::cmd_counterexample("C1", mg::ReportFormat::Text, o, e); }).code,
            cli::kNotApplicable);
  EXPECT_EQ(run([](auto& o, auto& e) { return cli::cmd_counterexample("Z^1", mg::ReportFormat::Text, o, e); }).code,
            cli::kNotApplicable);
}

TEST(Cli, Lattice) {
  mg::LatticeCheckParams p;
  p.trials = 100;
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_lattice(p, 1, mg::ReportFormat::Text, o, e); }).code,
            cli::kOk);
  p.trials = 0;
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_lattice(p, 1, mg::ReportFormat::Text, o, e); }).code,
            cli::kInputError);
}

TEST(Cli, TableFileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "matchgroup_q8_table.txt";
  {
    std::ofstream f(path);
    ASSERT_EQ(cli::cmd_table("Q8", f, std::cerr), cli::kOk);
  }
  const auto g = cli::resolve_group(path.string());
  EXPECT_EQ(std::get<GroupTable>(g), mg::make_quaternion());
  EXPECT_EQ(std::get<GroupTable>(cli::resolve_group("file:" + path.string())), mg::make_quaternion());
  auto r = run([&](auto& o, auto& e) {
    return cli::cmd_counterexample(path.string(), mg::ReportFormat::Text, o, e);
  });
  EXPECT_EQ(r.code, cli::kOk);
  std::filesystem::remove(path);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_table("file:/nonexistent/x", o, e); }).code,
            cli::kInputError);
}

#ifdef MATCHGROUP_CLI_PATH
TEST(Binary, ExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(MATCHGROUP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("match C4 '{0,2}' '{1,2}'"), 1);
  EXPECT_EQ(status("match C5 '{1,2,3,4}' '{1,2,3,4}'"), 0);
  EXPECT_EQ(status("counterexample C7"), 3);
  EXPECT_EQ(status("verify C3 --checks kemperman,corollary"), 0);
  EXPECT_EQ(status("--bogus"), 2);
  EXPECT_EQ(status(""), 2);
}
#endif
