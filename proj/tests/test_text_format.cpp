#include "support.hpp"

#include <gtest/gtest.h>

using namespace skewdual;
using namespace skewdual::testing;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error";
  return ParseError(ParseError::Kind::kSyntax, 0, 0, "");
}

}  // namespace

class FixtureRoundTrip : public ::testing::TestWithParam<std::string> {};

TEST_P(FixtureRoundTrip, PrintThenParseIsStable) {
  auto doc = fixture(GetParam());
  auto once = print(doc);
  auto twice = print(parse(once));
  EXPECT_EQ(once, twice);
  EXPECT_EQ(parse(once).stanzas().size(), doc.stanzas().size());
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureRoundTrip,
                         ::testing::Values("b4.txt", "prod.txt", "x3.txt", "m3.txt", "chain.txt", "efix.txt",
                                           "morphisms.txt"));

TEST(TextFormat, ParsedProdMatchesValidator) {
  auto p = prod();
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.base().size(), 4u);
}

TEST(TextFormat, UnresolvedReference) {
  auto e = parse_error("bset P over Missing {\n  stalk 0: z\n}\n");
  EXPECT_EQ(e.kind(), ParseError::Kind::kUnresolvedReference);
  EXPECT_EQ(e.subject(), "Missing");
}

TEST(TextFormat, DuplicateName) {
  auto e = parse_error("etale A {\n  points: p\n  base: u\n  proj: p->u\n}\netale A {\n  points: q\n  base: u\n  proj: q->u\n}\n");
  EXPECT_EQ(e.kind(), ParseError::Kind::kDuplicateName);
  EXPECT_EQ(e.line(), 6);
}

TEST(TextFormat, SyntaxErrorCarriesPosition) {
  auto e = parse_error("balg B {\n  elements: 0, 1\n  leq 0<=1\n}\n");
  EXPECT_EQ(e.kind(), ParseError::Kind::kSyntax);
  EXPECT_EQ(e.line(), 3);
  EXPECT_NE(std::string(e.what()).find("SyntaxError at 3:"), std::string::npos);
}

TEST(TextFormat, UnterminatedStanza) {
  EXPECT_EQ(parse_error("balg B {\n  elements: 0\n").kind(), ParseError::Kind::kSyntax);
}

TEST(TextFormat, CommentsAndBlankLinesIgnored) {
  auto doc = parse("# lead\n\nbalg B { # trailing\n  elements: 0, 1  # two\n  leq: 0<=1\n}\n");
  auto b = resolve_balg(doc, "B");
  EXPECT_EQ(b.size(), 2u);
}

TEST(TextFormat, TableRowsMayComeInAnyOrder) {
  auto doc = parse(
      "skew S {\n  elements: 0, x\n  zero: 0\n  circ: x, 0\n  row x: x, 0\n  row 0: 0, 0\n"
      "  bullet: 0, x\n  row 0: 0, x\n  row x: x, x\n}\n");
  auto s = resolve_skew(doc, "S");
  EXPECT_EQ(s.circ(s.index_of("x"), s.index_of("x")), s.index_of("x"));
  EXPECT_EQ(s.circ(s.index_of("x"), s.index_of("0")), s.index_of("0"));
}

TEST(TextFormat, WrongStanzaKindRejected) {
  auto doc = fixture("b4.txt");
  EXPECT_THROW(resolve_skew(doc, "B4"), std::invalid_argument);
}

TEST(TextFormat, GeneratedDocumentRoundTrips) {
  auto x = generate_boolean_set({2, 1, 2}, 9);
  auto doc = bset_document(x, "G");
  auto again = parse(print(doc));
  EXPECT_TRUE(structurally_equal(resolve_bset(again, "G"), x));
}

TEST(TextFormat, MissingBottomFallsBackToLeast) {
  BalgInput in{{"1", "0"}, {{"0", "1"}}, ""};
  EXPECT_EQ(effective_bottom(in), "0");
}
