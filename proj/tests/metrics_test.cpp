/*
 * Copyright 2026 The spyscan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <spyscan/metrics/analyzer.hpp>
#include <spyscan/metrics/ruleset.hpp>
#include <spyscan/metrics/tokenizer.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using namespace spyscan::metrics;

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

FunctionMetrics measure_text(const std::string& text, const std::string& name)
{
    const TokenRuleset rules;
    const SourceFile file("inline", text, rules);
    return measure(file, extract_span(file, name, rules), rules);
}

FunctionMetrics measure_path(const std::filesystem::path& path, const std::string& name)
{
    return measure_text(slurp(path), name);
}

MetricsError::Code error_code(const std::string& text, const std::string& name)
{
    try {
        measure_text(text, name);
    } catch (const MetricsError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no MetricsError for " << name;
    return MetricsError::Code::not_found;
}

const std::filesystem::path kFixtures{SPYSCAN_FIXTURE_DIR};
const std::filesystem::path kData{SPYSCAN_TEST_DATA_DIR};

TEST(FixtureMetricsTest, ManualSpyTest)
{
    EXPECT_EQ(measure_path(kFixtures / "scan_manual.scala", "scan is lazy enough"), (FunctionMetrics{3, 26, 5}));
}

TEST(FixtureMetricsTest, AutoSpyTest)
{
    EXPECT_EQ(measure_path(kFixtures / "scan_spy.scala", "scan is lazy enough with spy"), (FunctionMetrics{0, 7, 3}));
}

TEST(FixtureMetricsTest, DeltaIsMinusSeventyThree)
{
    const auto before = measure_path(kFixtures / "scan_manual.scala", "scan is lazy enough");
    const auto after = measure_path(kFixtures / "scan_spy.scala", "scan is lazy enough with spy");
    EXPECT_EQ(compare_delta(before, after), -73);
    EXPECT_EQ(format_percent(compare_delta(before, after)), "-73%");
}

TEST(FixtureMetricsTest, BacktickNameMatchesUnderscoreForm)
{
    EXPECT_EQ(measure_path(kFixtures / "scan_manual.scala", "scan_is_lazy_enough").loc, 26u);
}

TEST(SyntheticMetricsTest, WindowPair)
{
    const auto before = measure_path(kData / "window_before.scala", "windows are lazy");
    const auto after = measure_path(kData / "window_after.scala", "windows are lazy");
    EXPECT_EQ(before, (FunctionMetrics{1, 10, 2}));
    EXPECT_EQ(after, (FunctionMetrics{0, 4, 1}));
    EXPECT_EQ(compare_delta(before, after), -60);
}

TEST(SyntheticMetricsTest, StraightLineIgnoresStringContents)
{
    EXPECT_EQ(measure_path(kData / "straight.scala", "plain"), (FunctionMetrics{0, 3, 1}));
}

TEST(LocTest, EmptyAndCommentOnlyBodies)
{
    EXPECT_EQ(measure_text("def f() = {}\n", "f").loc, 0u);
    EXPECT_EQ(measure_text("def f() = {\n}\n", "f").loc, 0u);
    EXPECT_EQ(measure_text("def f() = {\n  // a\n  /* b\n  c */\n\n}\n", "f").loc, 0u);
}

TEST(LocTest, MultiLineStringCountsEveryLine)
{
    EXPECT_EQ(measure_text("def f() = {\n  val s = \"\"\"a\n\nb\"\"\"\n}\n", "f").loc, 3u);
}

TEST(LocTest, AddingALineAddsOne)
{
    std::string body;
    for (std::size_t n = 0; n < 12; ++n) {
        EXPECT_EQ(measure_text("def f() = {\n" + body + "}\n", "f").loc, n);
        body += "  g(" + std::to_string(n) + ")\n";
    }
}

TEST(CcTest, Contributions)
{
    EXPECT_EQ(measure_text("def f() = {\n  g()\n}\n", "f").cc, 1u);
    EXPECT_EQ(measure_text("def f() = {\n  if (a && b) g()\n}\n", "f").cc, 3u);
    EXPECT_EQ(measure_text("def f() = {\n  while (x) g()\n  for (i <- xs) g()\n}\n", "f").cc, 3u);
    EXPECT_EQ(measure_text("def f() = {\n  def inner() = {\n    1\n  }\n}\n", "f").cc, 2u);
    EXPECT_EQ(measure_text("def f() = {\n  xs.map(x => x + 1)\n}\n", "f").cc, 2u);
    EXPECT_EQ(measure_text("def f() = {\n  xs.map(_ + 1)\n}\n", "f").cc, 2u);
    EXPECT_EQ(measure_text("def f() = {\n  val g: Int => Int = h\n}\n", "f").cc, 1u);
}

TEST(CcTest, MatchCasesCountOnceEach)
{
    // Each case is one branch; its arrow is not an anonymous function.
    EXPECT_EQ(measure_text("def f() = {\n  x match {\n    case 1 => a\n    case _ => b\n  }\n}\n", "f").cc, 3u);
}

TEST(CcTest, KeywordsInCommentsAndStringsIgnored)
{
    EXPECT_EQ(measure_text("def f() = {\n  // if while\n  g(\"if && for\") /* case */\n}\n", "f").cc, 1u);
}

TEST(MutTest, Contributions)
{
    EXPECT_EQ(measure_text("def f() = {\n  var x = 0\n}\n", "f").mut, 1u);
    EXPECT_EQ(measure_text("def f() = {\n  val b = ArrayBuffer[Int]()\n}\n", "f").mut, 1u);
    EXPECT_EQ(measure_text("def f() = {\n  val b = collection.mutable.ListBuffer.empty[Int]\n}\n", "f").mut, 1u);
    EXPECT_EQ(measure_text("def f() = {\n  val s = mutable.Set(1)\n}\n", "f").mut, 1u);
    EXPECT_EQ(measure_text("def f() = {\n  val b: ArrayBuffer[Int] = make()\n}\n", "f").mut, 0u);
    EXPECT_EQ(measure_text("def f() = {\n  import scala.collection.mutable.ArrayBuffer\n}\n", "f").mut, 0u);
    EXPECT_EQ(measure_text("def f() = {\n  val v = 1 // var\n}\n", "f").mut, 0u);
}

TEST(SpanErrorsTest, Codes)
{
    EXPECT_EQ(error_code("def g() = {}\n", "f"), MetricsError::Code::not_found);
    EXPECT_EQ(error_code("def f() = {}\ndef f() = {}\n", "f"), MetricsError::Code::ambiguous);
    EXPECT_EQ(error_code("def f() = {\n  g(\n", "f"), MetricsError::Code::unbalanced_braces);
    EXPECT_EQ(error_code("def f(): Int = 3\n", "f"), MetricsError::Code::no_body);
}

TEST(SpanTest, OuterFunctionsOnly)
{
    const TokenRuleset rules;
    const SourceFile file("x", "class A {\n  def a() = {\n    def b() = {}\n  }\n  def c() = {\n  }\n}\n", rules);
    const auto spans = outermost_functions(file, rules);
    ASSERT_EQ(spans.size(), 2u);
    EXPECT_EQ(spans[0].name, "a");
    EXPECT_EQ(spans[1].name, "c");
}

TEST(CompareDeltaTest, TableRows)
{
    const auto delta = [](std::size_t b, std::size_t a) {
        return compare_delta(FunctionMetrics{0, b, 1}, FunctionMetrics{0, a, 1});
    };
    EXPECT_EQ(delta(26, 7), -73);
    EXPECT_EQ(delta(10, 4), -60);
    EXPECT_EQ(delta(15, 8), -47);
    EXPECT_EQ(delta(9, 7), -22);
    EXPECT_EQ(delta(5, 4), -20);
    EXPECT_EQ(delta(4, 4), 0);
    EXPECT_EQ(delta(2, 3), 50);
    EXPECT_EQ(delta(8, 7), -13);
    EXPECT_THROW(delta(0, 3), DivisionByZero);
}

TEST(CompareDeltaTest, FormatPercent)
{
    EXPECT_EQ(format_percent(-73), "-73%");
    EXPECT_EQ(format_percent(0), "0%");
    EXPECT_EQ(format_percent(12), "12%");
}

TEST(TokenizerTest, CommentsDroppedStringsKept)
{
    const TokenRuleset rules;
    const auto src = tokenize("a /* { */ \"}\" // {\nb", rules);
    ASSERT_EQ(src.tokens.size(), 3u);
    EXPECT_EQ(src.tokens[0].text, "a");
    EXPECT_EQ(src.tokens[1].kind, TokenKind::string);
    EXPECT_EQ(src.tokens[2].text, "b");
    EXPECT_EQ(src.tokens[2].line, 1u);
}

TEST(TokenizerTest, EscapedQuoteStaysInString)
{
    const TokenRuleset rules;
    const auto src = tokenize(R"(x("a\"{") y)", rules);
    ASSERT_EQ(src.tokens.size(), 5u);
    EXPECT_EQ(src.tokens[2].kind, TokenKind::string);
}

TEST(RulesTest, ParsesProfile)
{
    const auto rules = load_rules(kFixtures / "scala.rules");
    const TokenRuleset defaults;
    EXPECT_EQ(rules.branch_keywords, defaults.branch_keywords);
    EXPECT_EQ(rules.string_delimiters, defaults.string_delimiters);
    EXPECT_EQ(rules.block_comment, defaults.block_comment);
    EXPECT_EQ(rules.function_keyword, "def");
}

TEST(RulesTest, OverridesAndDisables)
{
    const auto rules = parse_rules("# comment\nline_comment = #\nblock_comment =\nfunction_keyword = fn\n");
    EXPECT_EQ(rules.line_comment, "#");
    EXPECT_TRUE(rules.block_comment.first.empty());
    EXPECT_EQ(rules.function_keyword, "fn");
}

TEST(RulesTest, Errors)
{
    EXPECT_THROW(parse_rules("nonsense\n"), RulesError);
    EXPECT_THROW(parse_rules("colour = red\n"), RulesError);
    EXPECT_THROW(parse_rules("function_keyword = def, fn\n"), RulesError);
    EXPECT_THROW(parse_rules("block_comment = /*\n"), RulesError);
    EXPECT_THROW(parse_rules("function_keyword =\n"), RulesError);
    EXPECT_THROW(load_rules(kData / "missing.rules"), RulesError);
}

}  // namespace
