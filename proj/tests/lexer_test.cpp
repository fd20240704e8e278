// SPDX-License-Identifier: Apache-2.0
#include "codevocab/lexer.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <string>

#include "codevocab/io.hpp"

namespace fs = std::filesystem;
using namespace codevocab;
using lexer::Token;
using lexer::TokenKind;

namespace {

std::vector<fs::path> fixture_java_files() {
  std::vector<fs::path> files;
  for (const char* sub : {"corpus", "edge"}) {
    for (const auto& entry :
         fs::recursive_directory_iterator(fs::path(CODEVOCAB_FIXTURE_DIR) / sub)) {
      if (entry.is_regular_file() && entry.path().extension() == ".java") {
        files.push_back(entry.path());
      }
    }
  }
  return files;
}

std::string concat(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t.text;
  return out;
}

}  // namespace

TEST(Lexer, SimpleStatement) {
  const auto tokens = lexer::lex("int x = 1;");
  ASSERT_EQ(tokens.size(), 8u);
  EXPECT_EQ(tokens[0].kind, TokenKind::Keyword);
  EXPECT_EQ(tokens[0].text, "int");
  EXPECT_EQ(tokens[1].kind, TokenKind::Whitespace);
  EXPECT_EQ(tokens[2].kind, TokenKind::Identifier);
  EXPECT_EQ(tokens[2].text, "x");
  EXPECT_EQ(tokens[4].kind, TokenKind::Operator);
  EXPECT_EQ(tokens[4].text, "=");
  EXPECT_EQ(tokens[6].kind, TokenKind::NumberLiteral);
  EXPECT_EQ(tokens[6].text, "1");
  EXPECT_EQ(tokens[7].kind, TokenKind::Punctuation);
  EXPECT_EQ(tokens[7].text, ";");
}

TEST(Lexer, LineCommentWithNonAscii) {
  const auto tokens = lexer::lex("// café");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].kind, TokenKind::Comment);
  EXPECT_EQ(tokens[0].text, "// café");
}

TEST(Lexer, CountKinds) {
  EXPECT_TRUE(lexer::count_kinds({}).empty());
  const auto counts = lexer::count_kinds(lexer::lex("int x = 1;"));
  EXPECT_EQ(counts.at(TokenKind::Keyword), 1u);
  EXPECT_EQ(counts.at(TokenKind::Identifier), 1u);
  EXPECT_EQ(counts.at(TokenKind::Operator), 1u);
  EXPECT_EQ(counts.at(TokenKind::NumberLiteral), 1u);
  EXPECT_EQ(counts.at(TokenKind::Punctuation), 1u);
  EXPECT_EQ(counts.at(TokenKind::Whitespace), 3u);
}

TEST(Lexer, CountKindsHandCountedSnippet) {
  // Hand count: keywords public,void; identifiers go,String,s,count,s,length;
  // operators =,+; punctuation ( ) { . ( ) ; }.
  const std::string src = "public void go(String s) {\n"
                          "  // reset\n"
                          "  count = s.length() + 2;\n"
                          "}\n";
  const auto counts = lexer::count_kinds(lexer::lex(src));
  EXPECT_EQ(counts.at(TokenKind::Keyword), 2u);
  EXPECT_EQ(counts.at(TokenKind::Identifier), 6u);
  EXPECT_EQ(counts.at(TokenKind::Comment), 1u);
  EXPECT_EQ(counts.at(TokenKind::NumberLiteral), 1u);
  EXPECT_EQ(counts.at(TokenKind::Operator), 2u);
  EXPECT_EQ(counts.at(TokenKind::Punctuation), 8u);
}

TEST(Lexer, NumericLiteralForms) {
  // "1." is deliberately absent: a dot is only pulled into the literal when
  // a digit follows, so "1." lexes as number + punctuation.
  const char* forms[] = {"123",  "1_000_000", "0xDEAD_BEEF", "0b1010", "0755",
                         "9_000_000_000L", "3.14f", ".5f", "6.022e23",
                         "1e-9", "0x1.8p3", "42L", "0xFFd"};
  for (const char* form : forms) {
    const auto tokens = lexer::lex(form);
    ASSERT_EQ(tokens.size(), 1u) << form;
    EXPECT_EQ(tokens[0].kind, TokenKind::NumberLiteral) << form;
    EXPECT_EQ(tokens[0].text, form);
  }
}

TEST(Lexer, StringAndCharEscapes) {
  const auto tokens = lexer::lex(R"(x = "a\"b\\" + '\'';)");
  ASSERT_GE(tokens.size(), 5u);
  EXPECT_EQ(tokens[4].kind, TokenKind::StringLiteral);
  EXPECT_EQ(tokens[4].text, R"("a\"b\\")");
  bool found_char = false;
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::CharLiteral) {
      EXPECT_EQ(t.text, R"('\'')");
      found_char = true;
    }
  }
  EXPECT_TRUE(found_char);
}

TEST(Lexer, MaxMunchOperators) {
  const auto tokens = lexer::lex("a>>>=b;c<<=d;x->y;A::m;f(a,b,...);");
  std::vector<std::string> ops;
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::Operator || t.kind == TokenKind::Punctuation) ops.push_back(t.text);
  }
  EXPECT_NE(std::find(ops.begin(), ops.end(), ">>>="), ops.end());
  EXPECT_NE(std::find(ops.begin(), ops.end(), "<<="), ops.end());
  EXPECT_NE(std::find(ops.begin(), ops.end(), "->"), ops.end());
  EXPECT_NE(std::find(ops.begin(), ops.end(), "::"), ops.end());
  EXPECT_NE(std::find(ops.begin(), ops.end(), "..."), ops.end());
}

TEST(Lexer, UnterminatedStringBecomesOneTokenWithWarning) {
  std::vector<std::string> warnings;
  const auto tokens = lexer::lex("s = \"never closed\nint x;", &warnings);
  ASSERT_FALSE(tokens.empty());
  EXPECT_EQ(tokens.back().kind, TokenKind::StringLiteral);
  EXPECT_EQ(tokens.back().text, "\"never closed\nint x;");
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("unterminated string"), std::string::npos);
  EXPECT_EQ(concat(tokens), "s = \"never closed\nint x;");
}

TEST(Lexer, UnterminatedBlockCommentBecomesOneTokenWithWarning) {
  std::vector<std::string> warnings;
  const auto tokens = lexer::lex("/* open\nint x = 1;", &warnings);
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].kind, TokenKind::Comment);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("unterminated block comment"), std::string::npos);
}

TEST(Lexer, RoundTripOnAllFixtureFiles) {
  const auto files = fixture_java_files();
  ASSERT_GE(files.size(), 50u);
  for (const auto& file : files) {
    const std::string source = read_file(file);
    std::vector<std::string> warnings;
    const auto tokens = lexer::lex(source, &warnings);
    EXPECT_EQ(concat(tokens), source) << file;
  }
}

TEST(Lexer, RoundTripOnRandomSoup) {
  // Byte soup with quote/comment/number fragments; the lexer must stay
  // lossless no matter what.
  std::mt19937 rng(1234);
  const std::string pieces[] = {"\"", "'", "/*", "*/", "//", "\\", "\n", "\t", " ",
                                "0x", "1.5e", "_id", "Ab", "<", ">>>", "é", ";", "@"};
  for (int round = 0; round < 200; ++round) {
    std::string src;
    const int n = static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) src += pieces[rng() % std::size(pieces)];
    std::vector<std::string> warnings;
    EXPECT_EQ(concat(lexer::lex(src, &warnings)), src);
  }
}

TEST(Lexer, PureFunction) {
  const std::string src = read_file(fixture_java_files().front());
  EXPECT_EQ(lexer::lex(src), lexer::lex(src));
}

TEST(Lexer, CrlfStaysLossless) {
  const std::string src = "int a;\r\nint b;\r";
  const auto tokens = lexer::lex(src);
  EXPECT_EQ(concat(tokens), src);
  std::size_t newlines = 0;
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::Whitespace && t.text != " " && t.text != "\t") ++newlines;
  }
  EXPECT_EQ(newlines, 2u);
}

TEST(Lexer, WhitespaceTokenization) {
  // Runs of spaces collapse into one token; tabs and newlines do not.
  const auto tokens = lexer::lex("a   b\t\tc\n\nd");
  std::vector<std::string> ws;
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::Whitespace) ws.push_back(t.text);
  }
  const std::vector<std::string> expected = {"   ", "\t", "\t", "\n", "\n"};
  EXPECT_EQ(ws, expected);
}

TEST(Lexer, DumpFormat) {
  const auto dump = lexer::dump_tokens(lexer::lex("a\t\"x\\n\""));
  EXPECT_EQ(dump, "identifier\ta\nwhitespace\t\\t\nstring\t\"x\\\\n\"\n");
}

TEST(Lexer, LineAndColumnPositions) {
  const auto tokens = lexer::lex("ab\ncd ef");
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].line, 1u);
  EXPECT_EQ(tokens[0].column, 1u);
  EXPECT_EQ(tokens[2].line, 2u);
  EXPECT_EQ(tokens[2].column, 1u);
  EXPECT_EQ(tokens[4].line, 2u);
  EXPECT_EQ(tokens[4].column, 4u);
}
