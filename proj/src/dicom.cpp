#include "ctphase/dicom.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <unordered_set>

#include "ctphase/kernels.hpp"

namespace ctphase::dicom {

namespace {

constexpr std::string_view kKnownVrs[] = {
    "AE", "AS", "AT", "CS", "DA", "DS", "DT", "FL", "FD", "IS", "LO", "LT", "OB",
    "OF", "OW", "PN", "SH", "SL", "SQ", "SS", "ST", "TM", "UI", "UL", "UN", "US", "UT",
};

bool known_vr(std::string_view vr) {
  return std::find(std::begin(kKnownVrs), std::end(kKnownVrs), vr) != std::end(kKnownVrs);
}

// VRs whose explicit encoding uses a 2-byte reserved field + 32-bit length.
bool long_form_vr(std::string_view vr) {
  return vr == "OB" || vr == "OW" || vr == "OF" || vr == "SQ" || vr == "UN" || vr == "UT";
}

// Dictionary used to recover VRs when parsing Implicit VR streams.
std::string_view dict_vr(DicomTag t) {
  static const std::map<DicomTag, std::string_view> kDict = {
      {tags::kTransferSyntaxUid, "UI"},
      {tags::kSopClassUid, "UI"},
      {tags::kSopInstanceUid, "UI"},
      {tags::kModality, "CS"},
      {tags::kPatientName, "PN"},
      {tags::kPatientId, "LO"},
      {tags::kPatientBirthDate, "DA"},
      {tags::kSliceThickness, "DS"},
      {tags::kStudyInstanceUid, "UI"},
      {tags::kSeriesInstanceUid, "UI"},
      {tags::kInstanceNumber, "IS"},
      {tags::kImagePositionPatient, "DS"},
      {tags::kImageOrientationPatient, "DS"},
      {tags::kRows, "US"},
      {tags::kColumns, "US"},
      {tags::kPixelSpacing, "DS"},
      {tags::kBitsAllocated, "US"},
      {tags::kBitsStored, "US"},
      {tags::kPixelRepresentation, "US"},
      {tags::kWindowCenter, "DS"},
      {tags::kWindowWidth, "DS"},
      {tags::kRescaleIntercept, "DS"},
      {tags::kRescaleSlope, "DS"},
      {tags::kPixelData, "OW"},
  };
  auto it = kDict.find(t);
  return it == kDict.end() ? std::string_view{"UN"} : it->second;
}

constexpr std::uint32_t kUndefinedLength = 0xFFFFFFFFu;

struct Reader {
  std::span<const std::uint8_t> buf;
  std::size_t pos = 0;

  std::size_t remaining() const { return buf.size() - pos; }

  void need(std::size_t n) const {
    if (remaining() < n) {
      throw DicomError(DicomErrc::kTruncatedFile,
                       "declared length exceeds remaining bytes at offset " +
                           std::to_string(pos));
    }
  }

  std::uint16_t u16() {
    need(2);
    const std::uint16_t v = static_cast<std::uint16_t>(buf[pos]) |
                            static_cast<std::uint16_t>(buf[pos + 1]) << 8;
    pos += 2;
    return v;
  }

  std::uint32_t u32() {
    need(4);
    const std::uint32_t v = static_cast<std::uint32_t>(buf[pos]) |
                            static_cast<std::uint32_t>(buf[pos + 1]) << 8 |
                            static_cast<std::uint32_t>(buf[pos + 2]) << 16 |
                            static_cast<std::uint32_t>(buf[pos + 3]) << 24;
    pos += 4;
    return v;
  }

  std::vector<std::uint8_t> bytes(std::size_t n) {
    need(n);
    std::vector<std::uint8_t> v(buf.begin() + pos, buf.begin() + pos + n);
    pos += n;
    return v;
  }

  void skip(std::size_t n) {
    need(n);
    pos += n;
  }

  DicomTag peek_tag() const {
    DicomTag t;
    t.group = static_cast<std::uint16_t>(buf[pos]) |
              static_cast<std::uint16_t>(buf[pos + 1]) << 8;
    t.element = static_cast<std::uint16_t>(buf[pos + 2]) |
                static_cast<std::uint16_t>(buf[pos + 3]) << 8;
    return t;
  }

  DicomTag tag() {
    need(4);
    const DicomTag t = peek_tag();
    pos += 4;
    return t;
  }
};

std::string trim_padding(std::string_view raw) {
  std::size_t end = raw.size();
  while (end > 0 && (raw[end - 1] == ' ' || raw[end - 1] == '\0')) --end;
  return std::string(raw.substr(0, end));
}

bool parse_decimal(std::string_view text, double& out) {
  const std::string s(text);
  char* endp = nullptr;
  out = std::strtod(s.c_str(), &endp);
  if (endp == s.c_str()) return false;
  while (*endp == ' ') ++endp;
  return *endp == '\0' && std::isfinite(out);
}

// Skips an undefined-length sequence: items with defined lengths are skipped
// whole; anything fancier is outside the supported subset.
void skip_undefined_sequence(Reader& r) {
  for (;;) {
    const DicomTag t = r.tag();
    const std::uint32_t len = r.u32();
    if (t == DicomTag{0xFFFE, 0xE0DD}) return;  // sequence delimitation
    if (t != DicomTag{0xFFFE, 0xE000}) {
      throw DicomError(DicomErrc::kInvalidDataset,
                       "malformed sequence item " + t.str());
    }
    if (len == kUndefinedLength) {
      throw DicomError(DicomErrc::kInvalidDataset,
                       "undefined-length sequence items are not supported");
    }
    r.skip(len);
  }
}

// Reads one element; returns false when the element was a sequence (skipped,
// not retained).
bool read_element(Reader& r, bool explicit_vr, DicomElement& out) {
  out.tag = r.tag();
  std::uint32_t len = 0;
  if (explicit_vr) {
    r.need(2);
    out.vr = {static_cast<char>(r.buf[r.pos]), static_cast<char>(r.buf[r.pos + 1])};
    r.pos += 2;
    if (!known_vr(out.vr)) {
      throw DicomError(DicomErrc::kTruncatedFile,
                       "unrecognized VR '" + out.vr + "' for " + out.tag.str());
    }
    if (long_form_vr(out.vr)) {
      r.skip(2);  // reserved
      len = r.u32();
    } else {
      len = r.u16();
    }
  } else {
    len = r.u32();
    out.vr = dict_vr(out.tag);
  }

  if (out.vr == "SQ") {
    if (len == kUndefinedLength) {
      skip_undefined_sequence(r);
    } else {
      r.skip(len);
    }
    return false;
  }
  if (len == kUndefinedLength) {
    // Undefined length outside SQ means encapsulated (compressed) pixel data.
    throw DicomError(DicomErrc::kUnsupportedTransferSyntax,
                     "encapsulated pixel data is not supported");
  }
  out.value = r.bytes(len);
  return true;
}

bool plausible_element_start(std::span<const std::uint8_t> b) {
  if (b.size() < 8) return false;
  const std::uint16_t group = static_cast<std::uint16_t>(b[0]) |
                              static_cast<std::uint16_t>(b[1]) << 8;
  if (group < 0x0002 || group > 0x7FE0) return false;
  const std::string vr = {static_cast<char>(b[4]), static_cast<char>(b[5])};
  if (known_vr(vr)) return true;
  const std::uint32_t len = static_cast<std::uint32_t>(b[4]) |
                            static_cast<std::uint32_t>(b[5]) << 8 |
                            static_cast<std::uint32_t>(b[6]) << 16 |
                            static_cast<std::uint32_t>(b[7]) << 24;
  return len == kUndefinedLength || len <= b.size() - 8;
}

void append_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

void encode_explicit(std::vector<std::uint8_t>& out, const DicomElement& e) {
  append_u16(out, e.tag.group);
  append_u16(out, e.tag.element);
  out.push_back(static_cast<std::uint8_t>(e.vr[0]));
  out.push_back(static_cast<std::uint8_t>(e.vr[1]));
  if (long_form_vr(e.vr)) {
    out.push_back(0);
    out.push_back(0);
    append_u32(out, static_cast<std::uint32_t>(e.value.size()));
  } else {
    if (e.value.size() > 0xFFFF) {
      throw DicomError(DicomErrc::kInvalidDataset,
                       "value too long for short-form VR at " + e.tag.str());
    }
    append_u16(out, static_cast<std::uint16_t>(e.value.size()));
  }
  out.insert(out.end(), e.value.begin(), e.value.end());
}

}  // namespace

std::string DicomTag::str() const {
  char b[16];
  std::snprintf(b, sizeof(b), "(%04x,%04x)", group, element);
  return std::string(b);
}

DicomElement DicomElement::make_string(DicomTag tag, std::string_view vr,
                                       std::string_view text) {
  DicomElement e;
  e.tag = tag;
  e.vr = std::string(vr);
  e.value.assign(text.begin(), text.end());
  if (e.value.size() % 2 != 0) {
    e.value.push_back(vr == "UI" ? '\0' : ' ');
  }
  return e;
}

DicomElement DicomElement::make_u16(DicomTag tag, std::uint16_t v) {
  DicomElement e;
  e.tag = tag;
  e.vr = "US";
  append_u16(e.value, v);
  return e;
}

DicomElement DicomElement::make_pixel_data(std::vector<std::uint8_t> bytes) {
  DicomElement e;
  e.tag = tags::kPixelData;
  e.vr = "OW";
  e.value = std::move(bytes);
  if (e.value.size() % 2 != 0) e.value.push_back(0);
  return e;
}

std::string DicomElement::str() const {
  return trim_padding(std::string_view(reinterpret_cast<const char*>(value.data()),
                                       value.size()));
}

std::vector<double> DicomElement::decimals() const {
  std::vector<double> out;
  const std::string text = str();
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t sep = text.find('\\', start);
    const std::string_view part =
        std::string_view(text).substr(start, sep == std::string::npos ? std::string::npos
                                                                      : sep - start);
    double v = 0;
    if (!parse_decimal(part, v)) {
      throw DicomError(DicomErrc::kInvalidDataset,
                       "bad decimal string '" + std::string(part) + "' in " + tag.str());
    }
    out.push_back(v);
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return out;
}

long long DicomElement::as_int() const {
  if (vr == "US") return as_u16();
  if (vr == "UL" && value.size() >= 4) {
    return static_cast<long long>(static_cast<std::uint32_t>(value[0]) |
                                  static_cast<std::uint32_t>(value[1]) << 8 |
                                  static_cast<std::uint32_t>(value[2]) << 16 |
                                  static_cast<std::uint32_t>(value[3]) << 24);
  }
  if (vr == "SS" && value.size() >= 2) {
    return static_cast<std::int16_t>(as_u16());
  }
  if (vr == "SL" && value.size() >= 4) {
    std::uint32_t v = static_cast<std::uint32_t>(value[0]) |
                      static_cast<std::uint32_t>(value[1]) << 8 |
                      static_cast<std::uint32_t>(value[2]) << 16 |
                      static_cast<std::uint32_t>(value[3]) << 24;
    return static_cast<std::int32_t>(v);
  }
  const std::string text = str();
  char* endp = nullptr;
  const long long v = std::strtoll(text.c_str(), &endp, 10);
  if (endp == text.c_str()) {
    throw DicomError(DicomErrc::kInvalidDataset,
                     "non-integer value in " + tag.str());
  }
  return v;
}

std::uint16_t DicomElement::as_u16() const {
  if (value.size() < 2) {
    throw DicomError(DicomErrc::kInvalidDataset, "short binary value in " + tag.str());
  }
  return static_cast<std::uint16_t>(value[0]) |
         static_cast<std::uint16_t>(value[1]) << 8;
}

void DicomDataset::put(DicomElement e) {
  auto it = std::lower_bound(elements.begin(), elements.end(), e.tag,
                             [](const DicomElement& lhs, DicomTag t) { return lhs.tag < t; });
  if (it != elements.end() && it->tag == e.tag) {
    *it = std::move(e);
  } else {
    elements.insert(it, std::move(e));
  }
}

const DicomElement* DicomDataset::find(DicomTag t) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), t,
                             [](const DicomElement& lhs, DicomTag tg) { return lhs.tag < tg; });
  return (it != elements.end() && it->tag == t) ? &*it : nullptr;
}

void DicomDataset::validate() const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const DicomElement& e = elements[i];
    if (i > 0 && !(elements[i - 1].tag < e.tag)) {
      throw DicomError(DicomErrc::kInvalidDataset,
                       "elements not strictly ascending at " + e.tag.str());
    }
    if (e.vr.size() != 2 || !known_vr(e.vr)) {
      throw DicomError(DicomErrc::kInvalidDataset, "unknown VR for " + e.tag.str());
    }
    if (e.value.size() % 2 != 0) {
      throw DicomError(DicomErrc::kInvalidDataset, "odd value length at " + e.tag.str());
    }
    if (e.vr == "DS" || e.vr == "IS") {
      e.decimals();  // throws on malformed values
    }
  }
  const DicomElement* rows = find(tags::kRows);
  const DicomElement* cols = find(tags::kColumns);
  const DicomElement* pixels = find(tags::kPixelData);
  if (rows != nullptr && cols != nullptr) {
    if (pixels == nullptr) {
      throw DicomError(DicomErrc::kInvalidDataset,
                       "Rows/Columns present without PixelData");
    }
    const DicomElement* bits = find(tags::kBitsAllocated);
    const std::size_t bytes_per = bits != nullptr ? bits->as_u16() / 8 : 2;
    const std::size_t needed = static_cast<std::size_t>(rows->as_u16()) * cols->as_u16() *
                               bytes_per;
    if (pixels->value.size() != needed) {
      throw DicomError(DicomErrc::kInvalidDataset,
                       "PixelData length does not match Rows*Columns*BitsAllocated/8");
    }
  }
  const DicomElement* slope = find(tags::kRescaleSlope);
  if (slope != nullptr && slope->decimals().at(0) == 0.0) {
    throw DicomError(DicomErrc::kInvalidDataset, "RescaleSlope must be nonzero");
  }
}

DicomDataset parse_dicom(std::span<const std::uint8_t> bytes) {
  Reader r{bytes};
  if (bytes.size() >= 132 && std::memcmp(bytes.data() + 128, "DICM", 4) == 0) {
    r.pos = 132;
  } else if (!plausible_element_start(bytes)) {
    throw DicomError(DicomErrc::kBadMagic,
                     "not a DICOM stream (no DICM magic, no element start)");
  }

  // File meta group (0002,xxxx) is always Explicit VR LE.
  std::string ts;
  while (r.remaining() >= 8 && r.peek_tag().group == 0x0002) {
    DicomElement e;
    if (read_element(r, /*explicit_vr=*/true, e) && e.tag == tags::kTransferSyntaxUid) {
      ts = e.str();
    }
  }
  if (ts.empty()) {
    // No meta header: sniff whether the body carries explicit VRs.
    const auto rest = bytes.subspan(r.pos);
    if (rest.size() >= 8) {
      const std::string vr = {static_cast<char>(rest[4]), static_cast<char>(rest[5])};
      ts = known_vr(vr) ? std::string(kExplicitVrLe) : std::string(kImplicitVrLe);
    } else {
      ts = std::string(kExplicitVrLe);
    }
  }
  if (ts != kExplicitVrLe && ts != kImplicitVrLe) {
    throw DicomError(DicomErrc::kUnsupportedTransferSyntax,
                     "unsupported transfer syntax '" + ts + "'");
  }
  const bool explicit_vr = ts == kExplicitVrLe;

  DicomDataset ds;
  ds.transfer_syntax = ts;
  while (r.remaining() > 0) {
    if (r.remaining() < 8) {
      throw DicomError(DicomErrc::kTruncatedFile, "trailing partial element header");
    }
    DicomElement e;
    if (read_element(r, explicit_vr, e)) {
      ds.elements.push_back(std::move(e));
    }
  }
  std::stable_sort(ds.elements.begin(), ds.elements.end(),
                   [](const DicomElement& a, const DicomElement& b) { return a.tag < b.tag; });

  // Uncompressed pixels must cover the declared geometry.
  const DicomElement* rows = ds.find(tags::kRows);
  const DicomElement* cols = ds.find(tags::kColumns);
  const DicomElement* pixels = ds.find(tags::kPixelData);
  if (rows != nullptr && cols != nullptr && pixels != nullptr) {
    const DicomElement* bits = ds.find(tags::kBitsAllocated);
    const std::size_t bytes_per = bits != nullptr ? bits->as_u16() / 8 : 2;
    const std::size_t needed =
        static_cast<std::size_t>(rows->as_u16()) * cols->as_u16() * bytes_per;
    if (pixels->value.size() < needed) {
      throw DicomError(DicomErrc::kTruncatedFile,
                       "PixelData shorter than Rows*Columns*BitsAllocated/8");
    }
  }
  return ds;
}

DicomDataset parse_dicom_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DicomError(DicomErrc::kIo, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse_dicom(bytes);
}

std::vector<std::uint8_t> write_fixture(const DicomDataset& ds) {
  ds.validate();

  std::vector<std::uint8_t> meta;
  encode_explicit(meta, DicomElement::make_string(tags::kTransferSyntaxUid, "UI",
                                                  kExplicitVrLe));

  std::vector<std::uint8_t> out(128, 0);
  out.insert(out.end(), {'D', 'I', 'C', 'M'});
  DicomElement group_length;
  group_length.tag = {0x0002, 0x0000};
  group_length.vr = "UL";
  append_u32(group_length.value, static_cast<std::uint32_t>(meta.size()));
  encode_explicit(out, group_length);
  out.insert(out.end(), meta.begin(), meta.end());

  for (const DicomElement& e : ds.elements) {
    encode_explicit(out, e);
  }
  return out;
}

void write_fixture_file(const DicomDataset& ds, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = write_fixture(ds);
  std::ofstream outf(path, std::ios::binary | std::ios::trunc);
  if (!outf) throw DicomError(DicomErrc::kIo, "cannot write " + path.string());
  outf.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  if (!outf) throw DicomError(DicomErrc::kIo, "short write to " + path.string());
}

DicomDataset anonymize(const DicomDataset& ds, const std::set<DicomTag>& whitelist) {
  DicomDataset out;
  out.transfer_syntax = ds.transfer_syntax;
  for (const DicomElement& e : ds.elements) {
    if (whitelist.contains(e.tag)) out.elements.push_back(e);
  }
  return out;
}

const std::set<DicomTag>& default_whitelist() {
  static const std::set<DicomTag> kList = {
      tags::kSopClassUid,        tags::kSopInstanceUid,
      tags::kModality,           tags::kSliceThickness,
      tags::kStudyInstanceUid,   tags::kSeriesInstanceUid,
      tags::kInstanceNumber,     tags::kImagePositionPatient,
      tags::kImageOrientationPatient, tags::kRows,
      tags::kColumns,            tags::kPixelSpacing,
      tags::kBitsAllocated,      tags::kBitsStored,
      tags::kPixelRepresentation, tags::kWindowCenter,
      tags::kWindowWidth,        tags::kRescaleIntercept,
      tags::kRescaleSlope,       tags::kPixelData,
  };
  return kList;
}

namespace {

Image2D decode_pixels(const DicomDataset& ds) {
  const DicomElement* rows_el = ds.find(tags::kRows);
  const DicomElement* cols_el = ds.find(tags::kColumns);
  const DicomElement* pixels = ds.find(tags::kPixelData);
  if (rows_el == nullptr || cols_el == nullptr || pixels == nullptr) {
    throw DicomError(DicomErrc::kInvalidDataset,
                     "dataset lacks Rows/Columns/PixelData");
  }
  const int rows = rows_el->as_u16();
  const int cols = cols_el->as_u16();
  const DicomElement* bits_el = ds.find(tags::kBitsAllocated);
  const int bits = bits_el != nullptr ? bits_el->as_u16() : 16;
  if (bits != 8 && bits != 16) {
    throw DicomError(DicomErrc::kInvalidDataset,
                     "unsupported BitsAllocated " + std::to_string(bits));
  }
  const DicomElement* rep = ds.find(tags::kPixelRepresentation);
  const bool is_signed = rep != nullptr && rep->as_u16() == 1;

  const std::size_t n = static_cast<std::size_t>(rows) * cols;
  const std::size_t bytes_per = static_cast<std::size_t>(bits) / 8;
  if (pixels->value.size() < n * bytes_per) {
    throw DicomError(DicomErrc::kTruncatedFile, "pixel payload too small");
  }

  std::vector<std::int32_t> raw(n);
  const std::uint8_t* src = pixels->value.data();
  if (bits == 16) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint16_t v = static_cast<std::uint16_t>(src[2 * i]) |
                              static_cast<std::uint16_t>(src[2 * i + 1]) << 8;
      raw[i] = is_signed ? static_cast<std::int16_t>(v) : static_cast<std::int32_t>(v);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      raw[i] = is_signed ? static_cast<std::int8_t>(src[i]) : static_cast<std::int32_t>(src[i]);
    }
  }

  double slope = 1.0;
  double intercept = 0.0;
  if (const DicomElement* e = ds.find(tags::kRescaleSlope)) slope = e->decimals().at(0);
  if (const DicomElement* e = ds.find(tags::kRescaleIntercept)) intercept = e->decimals().at(0);
  if (slope == 0.0) {
    throw DicomError(DicomErrc::kInvalidDataset, "RescaleSlope must be nonzero");
  }

  Image2D img(rows, cols);
  kernels::ops().rescale_hu(raw.data(), img.px.data(), n, static_cast<float>(slope),
                            static_cast<float>(intercept));
  return img;
}

}  // namespace

CtScan extract_scan(const std::vector<DicomDataset>& datasets) {
  if (datasets.empty()) {
    throw DicomError(DicomErrc::kInvalidDataset, "no datasets in series");
  }
  CtScan scan;
  std::unordered_set<long long> seen_instances;
  for (const DicomDataset& ds : datasets) {
    const DicomElement* series = ds.find(tags::kSeriesInstanceUid);
    if (series == nullptr) {
      throw DicomError(DicomErrc::kInvalidDataset, "missing SeriesInstanceUID");
    }
    if (scan.series_uid.empty()) {
      scan.series_uid = series->str();
      if (const DicomElement* study = ds.find(tags::kStudyInstanceUid)) {
        scan.study_uid = study->str();
      }
    } else if (scan.series_uid != series->str()) {
      throw DicomError(DicomErrc::kMixedSeries,
                       "datasets span series '" + scan.series_uid + "' and '" +
                           series->str() + "'");
    }
    const DicomElement* instance = ds.find(tags::kInstanceNumber);
    if (instance == nullptr) {
      throw DicomError(DicomErrc::kInvalidDataset, "missing InstanceNumber");
    }
    const long long number = instance->as_int();
    if (!seen_instances.insert(number).second) {
      throw DicomError(DicomErrc::kDuplicateInstanceNumber,
                       "duplicate InstanceNumber " + std::to_string(number));
    }
    scan.slices.push_back({static_cast<int>(number), decode_pixels(ds)});
  }
  std::sort(scan.slices.begin(), scan.slices.end(),
            [](const CtSlice& a, const CtSlice& b) {
              return a.instance_number < b.instance_number;
            });
  return scan;
}

std::vector<CtScan> load_scan_tree(const std::filesystem::path& root) {
  std::map<std::string, std::vector<DicomDataset>> by_series;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".dcm") continue;
    DicomDataset ds = parse_dicom_file(entry.path());
    const DicomElement* series = ds.find(tags::kSeriesInstanceUid);
    if (series == nullptr) {
      throw DicomError(DicomErrc::kInvalidDataset,
                       "missing SeriesInstanceUID in " + entry.path().string());
    }
    by_series[series->str()].push_back(std::move(ds));
  }
  std::vector<CtScan> scans;
  scans.reserve(by_series.size());
  for (auto& [uid, datasets] : by_series) {
    scans.push_back(extract_scan(datasets));
  }
  return scans;
}

}  // namespace ctphase::dicom
