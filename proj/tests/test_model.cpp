#include "disco/model.hpp"

#include <doctest.h>

using disco::CharInterval;
using disco::DiscourseRelation;
using disco::Level1Sense;
using disco::RealizationType;
using disco::SensePath;
using disco::Span;
using disco::ViolationCode;

namespace {

Span sp(std::initializer_list<CharInterval> ivs) {
  if (ivs.size() == 0) return Span();
  return Span::canonical(std::vector<CharInterval>(ivs));
}

DiscourseRelation explicit_rel(std::string id = "r1") {
  DiscourseRelation r;
  r.id = std::move(id);
  r.realization = RealizationType::Explicit;
  r.conn_span = sp({{14, 17}});
  r.conn_text = "ama";
  r.arg1_span = sp({{0, 13}});
  r.arg2_span = sp({{18, 40}});
  r.senses = {*SensePath::parse("Comparison.Concession")};
  return r;
}

bool has_code(const std::vector<disco::Violation>& vs, ViolationCode code) {
  for (const auto& v : vs) {
    if (v.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("realization names round-trip") {
  for (RealizationType t : disco::kAllRealizationTypes) {
    const auto parsed = disco::parse_realization_type(disco::to_string(t));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == t);
  }
  CHECK_FALSE(disco::parse_realization_type("explicit").has_value());
  CHECK_FALSE(disco::parse_realization_type("").has_value());

  CHECK(disco::takes_senses(RealizationType::Explicit));
  CHECK(disco::takes_senses(RealizationType::Implicit));
  CHECK(disco::takes_senses(RealizationType::AltLex));
  CHECK_FALSE(disco::takes_senses(RealizationType::EntRel));
  CHECK_FALSE(disco::takes_senses(RealizationType::Hypophora));
  CHECK_FALSE(disco::takes_senses(RealizationType::NoRel));
}

TEST_CASE("sense paths parse, truncate and render") {
  const auto full = SensePath::parse("Temporal.Asynchronous.Precedence");
  REQUIRE(full.has_value());
  CHECK(full->level1() == Level1Sense::Temporal);
  CHECK(full->depth() == 3);
  CHECK(full->to_string() == "Temporal.Asynchronous.Precedence");
  CHECK(full->truncated(2).to_string() == "Temporal.Asynchronous");
  CHECK(full->truncated(1).to_string() == "Temporal");
  CHECK(full->truncated(3) == *full);

  const auto shallow = SensePath::parse("Expansion");
  REQUIRE(shallow.has_value());
  CHECK(shallow->depth() == 1);
  // truncating below actual depth is the identity
  CHECK(shallow->truncated(3) == *shallow);
}

TEST_CASE("sense path rejections") {
  std::string err;
  CHECK_FALSE(SensePath::parse("Expansion..Precedence", &err).has_value());
  CHECK(err.find("empty or malformed") != std::string::npos);
  CHECK_FALSE(SensePath::parse("Causal.Cause").has_value());  // unknown L1
  CHECK_FALSE(SensePath::parse("Temporal.A.B.C").has_value());  // too deep
  CHECK_FALSE(SensePath::parse("").has_value());
  CHECK_FALSE(SensePath::parse("Temporal.").has_value());
  CHECK_FALSE(SensePath::parse(".Temporal").has_value());
}

TEST_CASE("extent is the canonical union of conn and both args") {
  DiscourseRelation r;
  r.id = "r1";
  r.realization = RealizationType::Implicit;
  r.conn_text = "ve";
  r.senses = {SensePath(Level1Sense::Expansion)};
  r.arg1_span = sp({{0, 5}});
  r.arg2_span = sp({{6, 10}});
  CHECK(disco::extent(r).intervals() ==
        std::vector<CharInterval>{{0, 5}, {6, 10}});

  // adjacent pieces merge into one interval
  DiscourseRelation m = explicit_rel();
  m.conn_span = sp({{5, 6}});
  m.arg1_span = sp({{6, 10}});
  m.arg2_span = sp({{0, 5}});
  CHECK(disco::extent(m).intervals() == std::vector<CharInterval>{{0, 10}});
}

TEST_CASE("validate_relation on a well-formed Explicit token") {
  CHECK(disco::validate_relation(explicit_rel(), 41).empty());
}

TEST_CASE("validate_relation flags every broken invariant") {
  SUBCASE("empty argument") {
    auto r = explicit_rel();
    r.arg1_span = Span();
    const auto vs = disco::validate_relation(r, 41);
    CHECK(has_code(vs, ViolationCode::EmptyArgument));
  }
  SUBCASE("argument overlap") {
    auto r = explicit_rel();
    r.conn_span = Span();
    r.realization = RealizationType::Implicit;
    r.arg1_span = sp({{0, 5}});
    r.arg2_span = sp({{4, 9}});
    CHECK(has_code(disco::validate_relation(r, 41),
                   ViolationCode::ArgumentOverlap));
  }
  SUBCASE("connective overlaps an argument") {
    auto r = explicit_rel();
    r.conn_span = sp({{12, 15}});
    CHECK(has_code(disco::validate_relation(r, 41),
                   ViolationCode::ConnectiveOverlap));
  }
  SUBCASE("Implicit with a connective span") {
    auto r = explicit_rel();
    r.realization = RealizationType::Implicit;
    CHECK(has_code(disco::validate_relation(r, 41),
                   ViolationCode::ConnSpanForbidden));
  }
  SUBCASE("Implicit without inserted connective text") {
    auto r = explicit_rel();
    r.realization = RealizationType::Implicit;
    r.conn_span = Span();
    r.conn_text.clear();
    CHECK(has_code(disco::validate_relation(r, 41),
                   ViolationCode::ConnTextRequired));
  }
  SUBCASE("Explicit without a connective span") {
    auto r = explicit_rel();
    r.conn_span = Span();
    CHECK(has_code(disco::validate_relation(r, 41),
                   ViolationCode::ConnSpanRequired));
  }
  SUBCASE("EntRel with senses") {
    auto r = explicit_rel();
    r.realization = RealizationType::EntRel;
    r.conn_span = Span();
    const auto vs = disco::validate_relation(r, 41);
    CHECK(has_code(vs, ViolationCode::SensesForbidden));
  }
  SUBCASE("Explicit without senses") {
    auto r = explicit_rel();
    r.senses.clear();
    CHECK(has_code(disco::validate_relation(r, 41),
                   ViolationCode::SensesRequired));
  }
  SUBCASE("span beyond the text") {
    auto r = explicit_rel();
    CHECK(has_code(disco::validate_relation(r, 30),
                   ViolationCode::SpanOutOfRange));
  }
  SUBCASE("several defects give several violations") {
    auto r = explicit_rel();
    r.senses.clear();
    r.conn_span = Span();
    CHECK(disco::validate_relation(r, 41).size() >= 2);
  }
}

TEST_CASE("sort_key orders by extent start, extent end, then id") {
  auto a = explicit_rel("a");
  CHECK(disco::sort_key(a) ==
        std::tuple<disco::CharOffset, disco::CharOffset, std::string_view>(
            0, 40, "a"));

  auto longer = explicit_rel("a");
  longer.arg2_span = sp({{18, 41}});
  CHECK(disco::sort_key(a) < disco::sort_key(longer));  // tie on start

  auto b = explicit_rel("b");
  CHECK(disco::sort_key(a) < disco::sort_key(b));  // tie on start+end
}

TEST_CASE("validate_document catches duplicate relation ids") {
  disco::AnnotatedDocument doc;
  doc.doc_id = "d";
  doc.text = std::u32string(41, U'x');
  doc.relations = {explicit_rel("r1"), explicit_rel("r1")};
  const auto vs = disco::validate_document(doc);
  CHECK(has_code(vs, ViolationCode::DuplicateRelationId));

  doc.relations[1].id = "r2";
  CHECK(disco::validate_document(doc).empty());
}
