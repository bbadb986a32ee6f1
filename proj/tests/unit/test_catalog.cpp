#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "podo/catalog.hpp"

using namespace podo;

namespace {

MarkFragment parse_marked(std::string_view s) {
  auto r = parse_mark_string(s);
  REQUIRE(std::holds_alternative<MarkFragment>(r));
  return std::get<MarkFragment>(r);
}

}  // namespace

TEST_CASE("lintel mark with metric") {
  const auto m = parse_marked("2ПБ19-3-п (1940 x 120 x 140, 0.033)");
  CHECK(m.name == "2ПБ19-3-п");
  CHECK(m.dims == std::vector<Mm>{1940, 120, 140});
  REQUIRE(m.metric);
  CHECK(m.metric->to_string() == "0.033");
  CHECK(m.metric->value() == doctest::Approx(0.033));
}

TEST_CASE("transom mark without metric") {
  const auto m = parse_marked("ФВ 04-12 (390 x 1170)");
  CHECK(m.name == "ФВ 04-12");
  CHECK(m.dims == std::vector<Mm>{390, 1170});
  CHECK_FALSE(m.metric);
  CHECK(render_mark_string(m) == "ФВ 04-12 (390 x 1170)");
}

TEST_CASE("unmarked strings") {
  for (const char* s : {"Немаркированный проем", "Немаркированная колонна", "Немаркированная"}) {
    const auto r = parse_mark_string(s);
    REQUIRE(std::holds_alternative<Unmarked>(r));
    CHECK(std::get<Unmarked>(r).text == s);
  }
}

TEST_CASE("whitespace tolerance and canonical rendering") {
  const auto m = parse_marked("  1БФ6-5(5050x200   x300 ,0.27 )  ");
  CHECK(m.name == "1БФ6-5");
  CHECK(render_mark_string(m) == "1БФ6-5 (5050 x 200 x 300, 0.27)");
  const auto spaced = parse_marked("2БСО  12-6   АШв (11960 x 280 x 890, 2.00)");
  CHECK(spaced.name == "2БСО 12-6 АШв");
  CHECK(spaced.metric->to_string() == "2.00");
  const std::string once = render_mark_string(spaced);
  CHECK(render_mark_string(parse_marked(once)) == once);
}

TEST_CASE("non-numeric trailing tag") {
  const auto m = parse_marked("ДН 21-13АПЩ (2085 x 1274, АПЩР2)");
  CHECK(m.dims == std::vector<Mm>{2085, 1274});
  CHECK_FALSE(m.metric);
  REQUIRE(m.tag);
  CHECK(*m.tag == "АПЩР2");
  CHECK(render_mark_string(m) == "ДН 21-13АПЩ (2085 x 1274, АПЩР2)");
}

TEST_CASE("malformed marks report a byte offset") {
  // Offsets are in bytes; the Cyrillic names are two bytes per letter.
  const std::string a = "ОР 15-6 (1460 x )";
  try {
    parse_mark_string(a);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.offset() == a.find(')'));
  }
  for (const char* bad : {"ОР 15-6 (1460)", "ОР 15-6 (1460 x 570", "(1460 x 570)", "ОР 15-6 (0 x 570)",
                          "ОР 15-6 (1 x 2 x 3 x 4)", "ОР 15-6 (1460 x 570) tail", "", "ОР 15-6"}) {
    CHECK_THROWS_AS(parse_mark_string(bad), ParseError);
  }
}

TEST_CASE("decimal keeps its written precision") {
  CHECK(Decimal::parse("1.60")->to_string() == "1.60");
  CHECK(Decimal::parse("1.6")->to_string() == "1.6");
  CHECK_FALSE(*Decimal::parse("1.60") == *Decimal::parse("1.6"));
  CHECK(Decimal::parse("2.300")->value() == doctest::Approx(2.3));
  CHECK_FALSE(Decimal::parse("x"));
  CHECK_FALSE(Decimal::parse("1."));
}

TEST_CASE("builtin catalog lookups") {
  const Catalog& c = Catalog::builtin();
  const MarkRecord* f = c.lookup(MarkFamily::Footing, "2Ф 18.9-2");
  REQUIRE(f);
  CHECK(f->dims() == std::vector<Mm>{1800, 1800, 900});
  CHECK(f->mark.metric->to_string() == "1.60");
  CHECK_FALSE(c.lookup(MarkFamily::Footing, "2Ф 99.9-9"));
  CHECK_FALSE(c.lookup(MarkFamily::Beam, "2Ф 18.9-2"));
  for (MarkFamily fam : all_families()) {
    CHECK(c.records(fam).size() >= 2);
  }
  const MarkRecord* col = c.lookup(MarkFamily::Column, "КН 42-2");
  REQUIRE(col);
  REQUIRE(col->bearing);
  CHECK_FALSE(col->bearing->pos_x);
  CHECK(col->bearing->pos_y);
  CHECK(c.lookup(MarkFamily::Opening, "ДГ 21-9")->height_first);
}

TEST_CASE("catalog round trip over every record") {
  const Catalog& c = Catalog::builtin();
  std::size_t n = 0;
  for (MarkFamily fam : all_families()) {
    for (const MarkRecord& r : c.records(fam)) {
      const std::string text = render_mark_string(r);
      CHECK(parse_marked(text) == r.mark);
      ++n;
    }
  }
  CHECK(n == c.size());
}

TEST_CASE("catalog loader") {
  std::istringstream in(
      "# comment\n"
      "Column\tК 1-1 (100 x 200 x 300)\tnote\tbearing=+X,-Y\n"
      "\n"
      "Opening\tД 1 (2000 x 900)\tdoor\torder=HW\n");
  const Catalog c = Catalog::load(in);
  CHECK(c.size() == 2);
  const MarkRecord* k = c.lookup(MarkFamily::Column, "К 1-1");
  REQUIRE(k);
  CHECK(k->series_note == "note");
  CHECK(k->bearing->pos_x);
  CHECK_FALSE(k->bearing->neg_x);
  CHECK(k->bearing->neg_y);
  CHECK(c.lookup(MarkFamily::Opening, "Д 1")->height_first);

  CHECK_THROWS(Catalog::from_string("Nope\tК 1 (1 x 2)\tn\n"));
  CHECK_THROWS(Catalog::from_string("Column\tК 1 (1 x 2)\tn\nColumn\tК 1 (1 x 2)\tn\n"));
  CHECK_THROWS(Catalog::from_string("Column\tК 1 (1 x 2)\tn\tcolour=red\n"));
}

TEST_CASE("family names") {
  for (MarkFamily fam : all_families()) CHECK(family_from_name(family_name(fam)) == fam);
  CHECK_FALSE(family_from_name("Chair"));
}
