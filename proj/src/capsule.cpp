#include "podo/capsule.hpp"

#include <zlib.h>

#include <cstring>

#include "podo/axes.hpp"
#include "podo/drafting.hpp"
#include "podo/validate.hpp"

namespace podo {

namespace {

enum Tag : std::uint8_t {
  kHeader = 1,
  kSettings = 2,
  kAxisH = 3,
  kAxisV = 4,
  kColumnGroup = 5,
  kPartition = 6,
  kOpening = 7,
  kBeam = 8,
  kSlabGroup = 9,
  kStrip = 10,
  kFootingGroup = 11,
  kFoundationBeam = 12,
  kText = 13,
};

[[noreturn]] void corrupt(const std::string& what) { throw Error(ErrorCode::CorruptBody, "corrupt capsule: " + what); }

class Writer {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void varint(std::uint64_t v) {
    while (v >= 0x80) {
      buf_.push_back(static_cast<std::uint8_t>(v | 0x80));
      v >>= 7;
    }
    buf_.push_back(static_cast<std::uint8_t>(v));
  }
  void sint(std::int64_t v) { varint((static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63)); }
  void flag(bool v) { u8(v ? 1 : 0); }
  void str(const std::string& s) {
    varint(s.size());
    buf_.insert(buf_.end(), s.begin(), s.end());
  }
  void opt_str(const std::optional<std::string>& s) {
    flag(s.has_value());
    if (s) str(*s);
  }
  void opt_sint(const std::optional<Mm>& v) {
    flag(v.has_value());
    if (v) sint(*v);
  }
  void id(EntityId v) { varint(v.value); }
  void point(Point p) {
    sint(p.x);
    sint(p.y);
  }
  void anchor(const Anchor& a) {
    varint(static_cast<std::uint64_t>(a.h_axis));
    varint(static_cast<std::uint64_t>(a.v_axis));
    sint(a.dx);
    sint(a.dy);
  }
  void ref(const ColumnRef& r) {
    id(r.group);
    varint(static_cast<std::uint64_t>(r.ix));
    varint(static_cast<std::uint64_t>(r.iy));
  }

  const std::vector<std::uint8_t>& bytes() const { return buf_; }

 private:
  std::vector<std::uint8_t> buf_;
};

class Reader {
 public:
  Reader(const std::uint8_t* data, std::size_t size) : p_(data), end_(data + size) {}

  bool done() const { return p_ == end_; }
  std::uint8_t u8() {
    if (p_ == end_) corrupt("record ends early");
    return *p_++;
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      const std::uint8_t b = u8();
      v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
      if (!(b & 0x80)) return v;
    }
    corrupt("varint too long");
  }
  std::int64_t sint() {
    const std::uint64_t z = varint();
    return static_cast<std::int64_t>(z >> 1) ^ -static_cast<std::int64_t>(z & 1);
  }
  int small() {
    const std::uint64_t v = varint();
    if (v > 0x7FFFFFFF) corrupt("integer out of range");
    return static_cast<int>(v);
  }
  bool flag() {
    const std::uint8_t b = u8();
    if (b > 1) corrupt("bad flag");
    return b == 1;
  }
  std::string str() {
    const std::uint64_t n = varint();
    if (n > static_cast<std::uint64_t>(end_ - p_)) corrupt("string overruns record");
    std::string s(reinterpret_cast<const char*>(p_), static_cast<std::size_t>(n));
    p_ += n;
    return s;
  }
  std::optional<std::string> opt_str() {
    if (!flag()) return std::nullopt;
    return str();
  }
  std::optional<Mm> opt_sint() {
    if (!flag()) return std::nullopt;
    return sint();
  }
  EntityId id() {
    const std::uint64_t v = varint();
    if (v > 0xFFFFFFFFull) corrupt("id out of range");
    return EntityId{static_cast<std::uint32_t>(v)};
  }
  Point point() {
    const Mm x = sint();
    return {x, sint()};
  }
  Anchor anchor() {
    Anchor a;
    a.h_axis = small();
    a.v_axis = small();
    a.dx = sint();
    a.dy = sint();
    return a;
  }
  ColumnRef ref() {
    ColumnRef r;
    r.group = id();
    r.ix = small();
    r.iy = small();
    return r;
  }
  Reader sub(std::size_t n) {
    if (n > static_cast<std::size_t>(end_ - p_)) corrupt("record overruns body");
    Reader r(p_, n);
    p_ += n;
    return r;
  }

 private:
  const std::uint8_t* p_;
  const std::uint8_t* end_;
};

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

class RecordStream {
 public:
  template <class Fn>
  void record(Tag tag, Fn&& fill) {
    Writer w;
    fill(w);
    out_.push_back(tag);
    put_u32(out_, static_cast<std::uint32_t>(w.bytes().size()));
    out_.insert(out_.end(), w.bytes().begin(), w.bytes().end());
  }
  const std::vector<std::uint8_t>& bytes() const { return out_; }

 private:
  std::vector<std::uint8_t> out_;
};

std::vector<std::uint8_t> serialize(const Model& m) {
  RecordStream rs;
  rs.record(kHeader, [&](Writer& w) {
    w.u8(static_cast<std::uint8_t>(m.kind));
    w.varint(m.next_id);
  });
  rs.record(kSettings, [&](Writer& w) {
    const auto& s = m.settings;
    w.sint(s.axis_label_offset_mm);
    w.sint(s.dim_offset_mm);
    w.flag(s.horiz_axes_lettered);
    w.flag(s.horiz_dims_above);
    w.sint(s.gen_font_height_mm);
    w.sint(s.beam_span_tolerance_mm);
    w.varint(s.letter_alphabet.size());
    for (const auto& l : s.letter_alphabet) w.str(l);
  });
  auto axis = [&](Writer& w, const AxisGroup& g) {
    w.id(g.id);
    w.varint(static_cast<std::uint64_t>(g.count));
    w.str(g.label_start);
    if (const auto* main = std::get_if<MainAxes>(&g.kind)) {
      w.u8(0);
      w.sint(main->step_mm);
    } else {
      const auto& add = std::get<AdditionalAxes>(g.kind);
      w.u8(1);
      w.sint(add.base_axis);
      w.sint(add.offset_mm);
    }
  };
  for (const auto& g : m.axis_groups_h) rs.record(kAxisH, [&](Writer& w) { axis(w, g); });
  for (const auto& g : m.axis_groups_v) rs.record(kAxisV, [&](Writer& w) { axis(w, g); });
  for (const auto& g : m.column_groups) {
    rs.record(kColumnGroup, [&](Writer& w) {
      w.id(g.id);
      w.opt_str(g.mark);
      w.flag(g.unmarked_type.has_value());
      if (g.unmarked_type) w.u8(static_cast<std::uint8_t>(*g.unmarked_type));
      w.opt_sint(g.console_len_mm);
      w.sint(g.width_mm);
      w.sint(g.thickness_mm);
      w.anchor(g.start);
      w.anchor(g.end);
      w.point(g.center_offset);
      w.flag(g.along_x);
      w.flag(g.is_new);
      w.flag(g.console_left);
    });
  }
  for (const auto& p : m.partitions) {
    rs.record(kPartition, [&](Writer& w) {
      w.id(p.id);
      w.id(p.chain_id);
      w.u8(static_cast<std::uint8_t>(p.gost_type));
      w.sint(p.thickness_mm);
      w.sint(p.length_mm);
      w.flag(p.bearing);
      w.flag(p.along_x);
      w.anchor(p.anchor);
      w.flag(p.is_new);
    });
  }
  for (const auto& o : m.openings) {
    rs.record(kOpening, [&](Writer& w) {
      w.id(o.id);
      w.opt_str(o.mark);
      w.sint(o.gost_type);
      w.sint(o.width_mm);
      w.sint(o.height_mm);
      w.id(o.partition);
      w.flag(o.along_x);
      w.flag(o.rot180);
      w.flag(o.flip_side);
      w.sint(o.anchor_offset_mm);
      w.flag(o.is_new);
      w.flag(o.section_extra.has_value());
      if (o.section_extra) {
        const auto& e = *o.section_extra;
        w.sint(e.sill_height_mm);
        w.sint(e.opening_height_mm);
        w.flag(e.lintel.has_value());
        if (e.lintel) {
          w.opt_str(e.lintel->mark);
          w.sint(e.lintel->length_mm);
          w.sint(e.lintel->width_mm);
          w.sint(e.lintel->height_mm);
        }
        w.flag(e.transom.has_value());
        if (e.transom) {
          w.opt_str(e.transom->mark);
          w.sint(e.transom->thickness_mm);
          w.sint(e.transom->width_mm);
          w.sint(e.transom->height_mm);
        }
      }
    });
  }
  auto body = [](Writer& w, const auto& e) {
    w.id(e.id);
    w.opt_str(e.mark);
    w.sint(e.length_mm);
    w.sint(e.width_mm);
    w.sint(e.height_mm);
    w.flag(e.along_x);
  };
  for (const auto& b : m.beams) {
    rs.record(kBeam, [&](Writer& w) {
      body(w, b);
      w.anchor(b.anchor);
      w.flag(b.is_new);
      w.ref(b.end_a);
      w.ref(b.end_b);
    });
  }
  for (const auto& s : m.slab_groups) {
    rs.record(kSlabGroup, [&](Writer& w) {
      body(w, s);
      w.anchor(s.anchor);
      w.sint(s.count);
    });
  }
  for (const auto& s : m.strip_foundations) {
    rs.record(kStrip, [&](Writer& w) {
      w.id(s.id);
      w.id(s.chain_id);
      w.sint(s.width_mm);
      w.sint(s.length_mm);
      w.flag(s.along_x);
      w.anchor(s.anchor);
      w.flag(s.is_new);
    });
  }
  for (const auto& f : m.footing_groups) {
    rs.record(kFootingGroup, [&](Writer& w) {
      body(w, f);
      w.anchor(f.start);
      w.anchor(f.end);
      w.point(f.center_offset);
      w.flag(f.is_new);
    });
  }
  for (const auto& b : m.foundation_beams) {
    rs.record(kFoundationBeam, [&](Writer& w) {
      body(w, b);
      w.anchor(b.anchor);
      w.flag(b.is_new);
      w.ref(b.end_a);
      w.u8(static_cast<std::uint8_t>(b.seat));
      w.ref(b.end_b);
    });
  }
  for (const auto& t : m.texts) {
    rs.record(kText, [&](Writer& w) {
      w.id(t.id);
      w.varint(t.lines.size());
      for (const auto& l : t.lines) w.str(l);
      w.sint(t.font_height_mm);
      w.sint(t.line_step_mm);
      w.point(t.origin);
      w.point(t.leader_target);
    });
  }
  return rs.bytes();
}

template <class E>
E enum_byte(Reader& r, std::uint8_t max) {
  const std::uint8_t b = r.u8();
  if (b > max) corrupt("enum value out of range");
  return static_cast<E>(b);
}

Model deserialize(const std::vector<std::uint8_t>& raw) {
  Model m;
  Reader top(raw.data(), raw.size());
  bool seen_header = false;
  while (!top.done()) {
    const std::uint8_t tag = top.u8();
    const std::uint32_t len = top.u32();
    Reader r = top.sub(len);
    auto body = [&](auto& e) {
      e.id = r.id();
      e.mark = r.opt_str();
      e.length_mm = r.sint();
      e.width_mm = r.sint();
      e.height_mm = r.sint();
      e.along_x = r.flag();
    };
    switch (tag) {
      case kHeader:
        m.kind = enum_byte<PlanKind>(r, 2);
        m.next_id = r.id().value;
        seen_header = true;
        break;
      case kSettings: {
        auto& s = m.settings;
        s.axis_label_offset_mm = r.sint();
        s.dim_offset_mm = r.sint();
        s.horiz_axes_lettered = r.flag();
        s.horiz_dims_above = r.flag();
        s.gen_font_height_mm = r.sint();
        s.beam_span_tolerance_mm = r.sint();
        const std::uint64_t n = r.varint();
        if (n > len) corrupt("alphabet too long");
        s.letter_alphabet.clear();
        for (std::uint64_t i = 0; i < n; ++i) s.letter_alphabet.push_back(r.str());
        break;
      }
      case kAxisH:
      case kAxisV: {
        AxisGroup g;
        g.orientation = tag == kAxisH ? Orientation::H : Orientation::V;
        g.id = r.id();
        g.count = r.small();
        g.label_start = r.str();
        const std::uint8_t kind = r.u8();
        if (kind == 0) {
          g.kind = MainAxes{r.sint()};
        } else if (kind == 1) {
          AdditionalAxes add;
          add.base_axis = static_cast<int>(r.sint());
          add.offset_mm = r.sint();
          g.kind = add;
        } else {
          corrupt("unknown axis group kind");
        }
        m.axis_groups(g.orientation).push_back(std::move(g));
        break;
      }
      case kColumnGroup: {
        ColumnGroup g;
        g.id = r.id();
        g.mark = r.opt_str();
        if (r.flag()) g.unmarked_type = enum_byte<ColumnType>(r, 4);
        g.console_len_mm = r.opt_sint();
        g.width_mm = r.sint();
        g.thickness_mm = r.sint();
        g.start = r.anchor();
        g.end = r.anchor();
        g.center_offset = r.point();
        g.along_x = r.flag();
        g.is_new = r.flag();
        g.console_left = r.flag();
        m.column_groups.push_back(std::move(g));
        break;
      }
      case kPartition: {
        Partition p;
        p.id = r.id();
        p.chain_id = r.id();
        p.gost_type = enum_byte<PartitionType>(r, 5);
        p.thickness_mm = r.sint();
        p.length_mm = r.sint();
        p.bearing = r.flag();
        p.along_x = r.flag();
        p.anchor = r.anchor();
        p.is_new = r.flag();
        m.partitions.push_back(p);
        break;
      }
      case kOpening: {
        Opening o;
        o.id = r.id();
        o.mark = r.opt_str();
        o.gost_type = static_cast<int>(r.sint());
        o.width_mm = r.sint();
        o.height_mm = r.sint();
        o.partition = r.id();
        o.along_x = r.flag();
        o.rot180 = r.flag();
        o.flip_side = r.flag();
        o.anchor_offset_mm = r.sint();
        o.is_new = r.flag();
        if (r.flag()) {
          OpeningSectionExtra e;
          e.sill_height_mm = r.sint();
          e.opening_height_mm = r.sint();
          if (r.flag()) {
            Lintel l;
            l.mark = r.opt_str();
            l.length_mm = r.sint();
            l.width_mm = r.sint();
            l.height_mm = r.sint();
            e.lintel = l;
          }
          if (r.flag()) {
            Transom t;
            t.mark = r.opt_str();
            t.thickness_mm = r.sint();
            t.width_mm = r.sint();
            t.height_mm = r.sint();
            e.transom = t;
          }
          o.section_extra = e;
        }
        m.openings.push_back(std::move(o));
        break;
      }
      case kBeam: {
        Beam b;
        body(b);
        b.anchor = r.anchor();
        b.is_new = r.flag();
        b.end_a = r.ref();
        b.end_b = r.ref();
        m.beams.push_back(std::move(b));
        break;
      }
      case kSlabGroup: {
        SlabGroup s;
        body(s);
        s.anchor = r.anchor();
        s.count = static_cast<int>(r.sint());
        m.slab_groups.push_back(std::move(s));
        break;
      }
      case kStrip: {
        StripFoundation s;
        s.id = r.id();
        s.chain_id = r.id();
        s.width_mm = r.sint();
        s.length_mm = r.sint();
        s.along_x = r.flag();
        s.anchor = r.anchor();
        s.is_new = r.flag();
        m.strip_foundations.push_back(s);
        break;
      }
      case kFootingGroup: {
        FootingGroup f;
        body(f);
        f.start = r.anchor();
        f.end = r.anchor();
        f.center_offset = r.point();
        f.is_new = r.flag();
        m.footing_groups.push_back(std::move(f));
        break;
      }
      case kFoundationBeam: {
        FoundationBeam b;
        body(b);
        b.anchor = r.anchor();
        b.is_new = r.flag();
        b.end_a = r.ref();
        b.seat = enum_byte<BeamSeat>(r, 2);
        b.end_b = r.ref();
        m.foundation_beams.push_back(std::move(b));
        break;
      }
      case kText: {
        TextNote t;
        t.id = r.id();
        const std::uint64_t n = r.varint();
        if (n > len) corrupt("too many text lines");
        for (std::uint64_t i = 0; i < n; ++i) t.lines.push_back(r.str());
        t.font_height_mm = r.sint();
        t.line_step_mm = r.sint();
        t.origin = r.point();
        t.leader_target = r.point();
        m.texts.push_back(std::move(t));
        break;
      }
      default:
        continue;  // records from a later minor revision are skipped
    }
    if (!r.done()) corrupt("trailing bytes in record");
  }
  if (!seen_header) corrupt("missing header record");
  return m;
}

std::vector<std::uint8_t> deflate_raw(const std::vector<std::uint8_t>& in) {
  z_stream zs{};
  if (deflateInit2(&zs, 9, Z_DEFLATED, -15, 9, Z_DEFAULT_STRATEGY) != Z_OK) {
    throw Error(ErrorCode::InvalidValue, "deflate init failed");
  }
  std::vector<std::uint8_t> out(deflateBound(&zs, static_cast<uLong>(in.size())));
  zs.next_in = const_cast<Bytef*>(in.data());
  zs.avail_in = static_cast<uInt>(in.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error(ErrorCode::InvalidValue, "deflate failed");
  out.resize(zs.total_out);
  return out;
}

std::vector<std::uint8_t> inflate_raw(const std::uint8_t* data, std::size_t size) {
  z_stream zs{};
  if (inflateInit2(&zs, -15) != Z_OK) corrupt("inflate init failed");
  std::vector<std::uint8_t> out;
  std::uint8_t chunk[16384];
  zs.next_in = const_cast<Bytef*>(data);
  zs.avail_in = static_cast<uInt>(size);
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = chunk;
    zs.avail_out = sizeof chunk;
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      corrupt("deflate stream is damaged");
    }
    out.insert(out.end(), chunk, chunk + (sizeof chunk - zs.avail_out));
    if (rc == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
      inflateEnd(&zs);
      corrupt("deflate stream is truncated");
    }
    if (out.size() > (64u << 20)) {
      inflateEnd(&zs);
      corrupt("body expands beyond 64 MiB");
    }
  }
  const bool leftover = zs.avail_in != 0;
  inflateEnd(&zs);
  if (leftover) corrupt("bytes after the deflate stream");
  return out;
}

}  // namespace

std::vector<std::uint8_t> encode_capsule(const Model& model) {
  const auto body = deflate_raw(serialize(model));
  std::vector<std::uint8_t> out{'P', 'O', 'D', 'O'};
  put_u16(out, kCapsuleVersion);
  put_u32(out, static_cast<std::uint32_t>(body.size()));
  put_u32(out, static_cast<std::uint32_t>(crc32(0L, body.data(), static_cast<uInt>(body.size()))));
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

DecodedCapsule decode_capsule(const std::vector<std::uint8_t>& bytes) {
  return decode_capsule(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

DecodedCapsule decode_capsule(std::string_view bytes) {
  const auto* p = reinterpret_cast<const std::uint8_t*>(bytes.data());
  if (bytes.size() < 4 || std::memcmp(p, "PODO", 4) != 0) throw Error(ErrorCode::BadMagic, "not a capsule");
  if (bytes.size() < kCapsuleHeaderSize) corrupt("header is truncated");
  const std::uint16_t version = static_cast<std::uint16_t>(p[4] | (p[5] << 8));
  if (version != kCapsuleVersion) {
    throw Error(ErrorCode::VersionUnsupported, "capsule version " + std::to_string(version) + " is not supported");
  }
  const std::uint32_t length = get_u32(p + 6);
  const std::uint32_t crc = get_u32(p + 10);
  if (bytes.size() - kCapsuleHeaderSize != length) corrupt("body length does not match the header");
  const std::uint8_t* body = p + kCapsuleHeaderSize;
  if (static_cast<std::uint32_t>(crc32(0L, body, length)) != crc) corrupt("checksum mismatch");

  DecodedCapsule out;
  out.model = deserialize(inflate_raw(body, length));
  const auto issues = check_model(out.model);
  if (!issues.empty()) corrupt("decoded model is invalid: " + issues.front().message);
  out.stub = capsule_stub(out.model);
  return out;
}

DisplayList capsule_stub(const Model& model) {
  DisplayList out;
  const AxisGrid grid = resolve_grid(model);
  const Mm reach = model.settings.axis_label_offset_mm;
  const Mm font = model.settings.gen_font_height_mm;
  const Mm r = font * 3 / 2;
  const Style axis_style{Weight::Thin, Pattern::AxisDashDot};
  const Mm x_lo = grid.v.empty() ? 0 : grid.v.front().coord;
  const Mm x_hi = grid.v.empty() ? 0 : grid.v.back().coord;
  const Mm y_lo = grid.h.empty() ? 0 : grid.h.front().coord;
  const Mm y_hi = grid.h.empty() ? 0 : grid.h.back().coord;
  if (!grid.h.empty()) {
    const auto& a = grid.h.front();
    out.add(Segment{{x_lo - reach, a.coord}, {x_hi + reach, a.coord}}, axis_style, a.group);
    out.add(AxisBubble{{x_lo - reach - r, a.coord}, r, a.label, font}, Style{}, a.group);
  }
  if (!grid.v.empty()) {
    const auto& a = grid.v.front();
    out.add(Segment{{a.coord, y_lo - reach}, {a.coord, y_hi + reach}}, axis_style, a.group);
    out.add(AxisBubble{{a.coord, y_lo - reach - r}, r, a.label, font}, Style{}, a.group);
  }
  for (Side side : effective_sides(model, {})) {
    try {
      out.add(generate_span_dimensions(model, side).front());
    } catch (const Error&) {
      // fewer than two main axes: nothing to dimension
    }
  }
  return out;
}

}  // namespace podo
