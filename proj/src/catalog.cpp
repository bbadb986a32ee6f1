#include "podo/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "utf8.hpp"

namespace podo {

extern const char* const kBuiltinCatalogText;

namespace {

constexpr std::string_view kUnmarkedPrefix = "Немаркированн";

constexpr std::pair<MarkFamily, std::string_view> kFamilies[] = {
    {MarkFamily::Column, "Column"},       {MarkFamily::Opening, "Opening"},
    {MarkFamily::Lintel, "Lintel"},       {MarkFamily::Transom, "Transom"},
    {MarkFamily::Beam, "Beam"},           {MarkFamily::Slab, "Slab"},
    {MarkFamily::Footing, "Footing"},     {MarkFamily::FoundationBeam, "FoundationBeam"},
};

class MarkScanner {
 public:
  explicit MarkScanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  bool done() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!done() && detail::is_ascii_space(text_[pos_])) ++pos_;
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  // 'x', 'X', '×', Cyrillic 'х' and 'Х' all separate dimensions.
  bool accept_times() {
    return accept("x") || accept("X") || accept("\xC3\x97") || accept("\xD1\x85") ||
           accept("\xD0\xA5");
  }

  Mm dimension() {
    skip_space();
    const std::size_t begin = pos_;
    while (!done() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == begin) throw ParseError("expected a dimension", begin);
    if (pos_ - begin > 9) throw ParseError("dimension too large", begin);
    Mm value = 0;
    std::from_chars(text_.data() + begin, text_.data() + pos_, value);
    if (value <= 0) throw ParseError("dimension must be positive", begin);
    return value;
  }

  std::string_view until_close() {
    const std::size_t begin = pos_;
    while (!done() && text_[pos_] != ')' && text_[pos_] != '(') ++pos_;
    return text_.substr(begin, pos_ - begin);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string collapse_spaces(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (detail::is_ascii_space(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    if (at == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

BearingTable parse_bearing(std::string_view value, int line_no) {
  BearingTable t{false, false, false, false};
  for (auto item : split(value, ',')) {
    item = detail::trim(item);
    if (item == "+X") t.pos_x = true;
    else if (item == "-X") t.neg_x = true;
    else if (item == "+Y") t.pos_y = true;
    else if (item == "-Y") t.neg_y = true;
    else {
      throw Error(ErrorCode::SchemaError,
                  "catalog line " + std::to_string(line_no) + ": bad bearing direction '" +
                      std::string(item) + "'");
    }
  }
  return t;
}

}  // namespace

std::string_view family_name(MarkFamily family) {
  for (const auto& [f, name] : kFamilies) {
    if (f == family) return name;
  }
  return "Column";
}

std::optional<MarkFamily> family_from_name(std::string_view name) {
  for (const auto& [f, n] : kFamilies) {
    if (n == name) return f;
  }
  return std::nullopt;
}

const std::vector<MarkFamily>& all_families() {
  static const std::vector<MarkFamily> families = [] {
    std::vector<MarkFamily> out;
    for (const auto& [f, name] : kFamilies) out.push_back(f);
    return out;
  }();
  return families;
}

double Decimal::value() const {
  double d = static_cast<double>(units);
  for (int i = 0; i < scale; ++i) d /= 10.0;
  return d;
}

std::string Decimal::to_string() const {
  const bool negative = units < 0;
  std::string digits = std::to_string(negative ? -units : units);
  if (scale > 0) {
    if (static_cast<int>(digits.size()) <= scale) {
      digits.insert(0, static_cast<std::size_t>(scale + 1) - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale), ".");
  }
  return negative ? "-" + digits : digits;
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  text = detail::trim(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty() || text.size() > 18) return std::nullopt;
  Decimal d;
  bool seen_dot = false;
  std::size_t digit_count = 0;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    d.units = d.units * 10 + (c - '0');
    ++digit_count;
    if (seen_dot) ++d.scale;
  }
  if (digit_count == 0 || (seen_dot && d.scale == 0) || text.front() == '.') return std::nullopt;
  if (negative) d.units = -d.units;
  return d;
}

std::variant<MarkFragment, Unmarked> parse_mark_string(std::string_view text) {
  const std::string_view trimmed = detail::trim(text);
  if (trimmed.substr(0, kUnmarkedPrefix.size()) == kUnmarkedPrefix) {
    return Unmarked{collapse_spaces(trimmed)};
  }

  const auto open = text.find('(');
  if (open == std::string_view::npos) throw ParseError("expected '('", text.size());
  MarkFragment mark;
  mark.name = collapse_spaces(text.substr(0, open));
  if (mark.name.empty()) throw ParseError("empty mark name", 0);
  if (mark.name.find(')') != std::string::npos) {
    throw ParseError("unexpected ')' in name", text.find(')'));
  }

  MarkScanner scan(text);
  scan.seek(open + 1);
  mark.dims.push_back(scan.dimension());
  scan.skip_space();
  if (!scan.accept_times()) throw ParseError("expected 'x'", scan.pos());
  mark.dims.push_back(scan.dimension());
  scan.skip_space();
  if (scan.accept_times()) {
    mark.dims.push_back(scan.dimension());
    scan.skip_space();
  }
  if (scan.accept(",")) {
    scan.skip_space();
    const std::size_t at = scan.pos();
    const std::string_view trailing = detail::trim(scan.until_close());
    if (trailing.empty()) throw ParseError("empty trailing item", at);
    if (auto metric = Decimal::parse(trailing)) {
      mark.metric = metric;
    } else {
      mark.tag = collapse_spaces(trailing);
    }
  }
  scan.skip_space();
  if (!scan.accept(")")) throw ParseError("expected ')'", scan.pos());
  scan.skip_space();
  if (!scan.done()) throw ParseError("unexpected text after ')'", scan.pos());
  return mark;
}

std::string render_mark_string(const MarkFragment& mark) {
  std::string out = mark.name + " (";
  for (std::size_t i = 0; i < mark.dims.size(); ++i) {
    if (i) out += " x ";
    out += std::to_string(mark.dims[i]);
  }
  if (mark.metric) {
    out += ", " + mark.metric->to_string();
  } else if (mark.tag) {
    out += ", " + *mark.tag;
  }
  out += ")";
  return out;
}

Catalog Catalog::load(std::istream& in) {
  Catalog catalog;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;

    const auto fields = split(line, '\t');
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::SchemaError, "catalog line " + std::to_string(line_no) + ": " + what);
    };
    if (fields.size() < 2 || fields.size() > 4) fail("expected 2 to 4 tab-separated fields");
    const auto family = family_from_name(detail::trim(fields[0]));
    if (!family) fail("unknown family '" + std::string(fields[0]) + "'");

    MarkRecord record;
    record.family = *family;
    auto parsed = parse_mark_string(fields[1]);
    if (!std::holds_alternative<MarkFragment>(parsed)) fail("unmarked entries are not catalog records");
    record.mark = std::get<MarkFragment>(std::move(parsed));
    if (fields.size() > 2) record.series_note = std::string(detail::trim(fields[2]));
    if (fields.size() > 3) {
      for (auto attr : split(fields[3], ';')) {
        attr = detail::trim(attr);
        if (attr.empty()) continue;
        const auto eq = attr.find('=');
        if (eq == std::string_view::npos) fail("attribute without '='");
        const auto key = attr.substr(0, eq);
        const auto value = attr.substr(eq + 1);
        if (key == "bearing") {
          record.bearing = parse_bearing(value, line_no);
        } else if (key == "order") {
          if (value != "HW" && value != "WH") fail("order must be HW or WH");
          record.height_first = value == "HW";
        } else {
          fail("unknown attribute '" + std::string(key) + "'");
        }
      }
    }
    if (record.bearing && record.family != MarkFamily::Column) fail("bearing applies to columns only");

    auto& list = catalog.records_[record.family];
    for (const auto& existing : list) {
      if (existing.name() == record.name()) fail("duplicate mark '" + record.name() + "'");
    }
    list.push_back(std::move(record));
  }
  return catalog;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidValue, "cannot open catalog file " + path);
  return load(in);
}

Catalog Catalog::from_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load(in);
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = from_string(kBuiltinCatalogText);
  return catalog;
}

const MarkRecord* Catalog::lookup(MarkFamily family, std::string_view name) const {
  const auto it = records_.find(family);
  if (it == records_.end()) return nullptr;
  const std::string wanted = collapse_spaces(name);
  for (const auto& r : it->second) {
    if (r.name() == wanted) return &r;
  }
  return nullptr;
}

const std::vector<MarkRecord>& Catalog::records(MarkFamily family) const {
  static const std::vector<MarkRecord> empty;
  const auto it = records_.find(family);
  return it == records_.end() ? empty : it->second;
}

std::size_t Catalog::size() const {
  std::size_t n = 0;
  for (const auto& [family, list] : records_) n += list.size();
  return n;
}

}  // namespace podo
