#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cloneseek/dataset.hpp"
#include "cloneseek/error.hpp"
#include "cloneseek/text.hpp"
#include "oracles.hpp"

using namespace cloneseek;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("cloneseek_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, std::string_view text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST(Text, SplitLinesHandlesCrlfAndTrailingNewline) {
  auto lines = split_lines("a\r\nb\nc\n");
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "a");
  EXPECT_EQ(lines[1], "b");
  EXPECT_EQ(lines[2], "c");
  EXPECT_EQ(split_lines("").size(), 0u);
  EXPECT_EQ(split_lines("\n\n").size(), 2u);
}

TEST(Text, SanitizeReplacesInvalidUtf8) {
  EXPECT_EQ(sanitize_utf8("caf\xC3\xA9"), "caf\xC3\xA9");
  EXPECT_EQ(sanitize_utf8("a\xFF" "b"), "a\xEF\xBF\xBD" "b");
  EXPECT_EQ(sanitize_utf8("\xC3"), "\xEF\xBF\xBD");
}

TEST(Text, AppendUniqueKeepsFirstOccurrence) {
  std::vector<std::string> out{"x1", "y2"};
  append_unique(out, {"y2", "z3", "x1", "z3"});
  EXPECT_EQ(out, (std::vector<std::string>{"x1", "y2", "z3"}));
}

TEST(Dataset, RowsBecomeDocIdsInOrder) {
  auto ds = parse_manifest("1\ta.java\t1\t2\n# comment\n\n2\tb.java\t3\t3\n1\tc.java\t5\t9\n");
  ASSERT_EQ(ds.refs.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(ds.refs[i].doc_id, i);
  EXPECT_EQ(ds.refs[2].path, "c.java");
  EXPECT_EQ(ds.refs[2].start_line, 5u);
  ASSERT_EQ(ds.classes.size(), 2u);
  EXPECT_FALSE(ds.classes[0].description.has_value());
}

TEST(Dataset, AnnotationAttachesDescription) {
  auto ds = parse_manifest("4\tCopyFile.java\t7\t15\n", "4\tCopy file from source to destination\n");
  const auto* cls = ds.find_class(4);
  ASSERT_NE(cls, nullptr);
  EXPECT_EQ(cls->description, "Copy file from source to destination");
}

TEST(Dataset, ClassesAreUnionOfBothFiles) {
  auto ds = parse_manifest("3\ta.java\t1\t1\n", "9\tUnused class\n");
  ASSERT_EQ(ds.classes.size(), 2u);
  EXPECT_EQ(ds.classes[0].class_id, 3u);
  EXPECT_EQ(ds.classes[1].class_id, 9u);
}

TEST(Dataset, InvertedRangeIsAParseError) {
  try {
    parse_manifest("1\ta.java\t1\t1\n1\tb.java\t20\t10\n", {}, "m.tsv");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("inverted line range"), std::string::npos);
  }
}

TEST(Dataset, MalformedRowsRejected) {
  EXPECT_THROW(parse_manifest("1\ta.java\t1\n"), ParseError);
  EXPECT_THROW(parse_manifest("x\ta.java\t1\t2\n"), ParseError);
  EXPECT_THROW(parse_manifest("1\ta.java\t0\t2\n"), ParseError);
  EXPECT_THROW(parse_manifest("1\ta.java\t1\t2\n", "1\tone\n1\ttwo\n"), ParseError);
}

TEST(Dataset, TraceSingleLine) {
  auto dir = scratch_dir("trace1");
  write(dir / "one.java", "int x;");
  auto m = trace(CloneMethodRef{0, 1, "one.java", 1, 1}, dir);
  EXPECT_EQ(m.source, "int x;");
}

TEST(Dataset, TraceSlicesInclusiveRange) {
  auto dir = scratch_dir("trace2");
  write(dir / "five.java", "l1\r\nl2\nl3\nl4\nl5\n");
  EXPECT_EQ(trace(CloneMethodRef{0, 1, "five.java", 2, 4}, dir).source, "l2\nl3\nl4");
  EXPECT_THROW(trace(CloneMethodRef{0, 1, "five.java", 3, 9}, dir), TraceError);
  EXPECT_THROW(trace(CloneMethodRef{0, 1, "missing.java", 1, 1}, dir), TraceError);
}

TEST(Dataset, TraceMatchesIndependentSlice) {
  // copyFile spans lines 7..15 of the shipped file.
  const std::string path = oracle::fixture("copyfile/src/CopyFile.java");
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::string expected;
  for (int i = 6; i < 15; ++i) expected += (i > 6 ? "\n" : "") + lines[i];
  auto ds = load_manifest(oracle::fixture("copyfile/manifest.tsv"));
  EXPECT_EQ(trace(ds.refs.at(0), oracle::fixture("copyfile/src")).source, expected);
}

TEST(Dataset, LoadManifestErrorNamesFile) {
  auto dir = scratch_dir("badmanifest");
  write(dir / "m.tsv", "1\ta.java\t5\t2\n");
  try {
    load_manifest(dir / "m.tsv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(e.path().find("m.tsv"), std::string::npos);
    EXPECT_EQ(e.line(), 1u);
  }
}
