#pragma once

// Minimal but real DICOM support: Explicit and Implicit VR Little Endian
// parsing, Explicit VR LE writing, PHI stripping against a tag whitelist,
// and assembly of one series into a Hounsfield-unit scan. Compressed and
// encapsulated transfer syntaxes are rejected; sequences are skipped whole,
// never recursed.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctphase/scan.hpp"

namespace ctphase::dicom {

struct DicomTag {
  std::uint16_t group = 0;
  std::uint16_t element = 0;

  auto operator<=>(const DicomTag&) const = default;
  std::string str() const;  // "(gggg,eeee)"
};

namespace tags {
inline constexpr DicomTag kTransferSyntaxUid{0x0002, 0x0010};
inline constexpr DicomTag kSopClassUid{0x0008, 0x0016};
inline constexpr DicomTag kSopInstanceUid{0x0008, 0x0018};
inline constexpr DicomTag kModality{0x0008, 0x0060};
inline constexpr DicomTag kPatientName{0x0010, 0x0010};
inline constexpr DicomTag kPatientId{0x0010, 0x0020};
inline constexpr DicomTag kPatientBirthDate{0x0010, 0x0030};
inline constexpr DicomTag kSliceThickness{0x0018, 0x0050};
inline constexpr DicomTag kStudyInstanceUid{0x0020, 0x000D};
inline constexpr DicomTag kSeriesInstanceUid{0x0020, 0x000E};
inline constexpr DicomTag kInstanceNumber{0x0020, 0x0013};
inline constexpr DicomTag kImagePositionPatient{0x0020, 0x0032};
inline constexpr DicomTag kImageOrientationPatient{0x0020, 0x0037};
inline constexpr DicomTag kRows{0x0028, 0x0010};
inline constexpr DicomTag kColumns{0x0028, 0x0011};
inline constexpr DicomTag kPixelSpacing{0x0028, 0x0030};
inline constexpr DicomTag kBitsAllocated{0x0028, 0x0100};
inline constexpr DicomTag kBitsStored{0x0028, 0x0101};
inline constexpr DicomTag kPixelRepresentation{0x0028, 0x0103};
inline constexpr DicomTag kWindowCenter{0x0028, 0x1050};
inline constexpr DicomTag kWindowWidth{0x0028, 0x1051};
inline constexpr DicomTag kRescaleIntercept{0x0028, 0x1052};
inline constexpr DicomTag kRescaleSlope{0x0028, 0x1053};
inline constexpr DicomTag kPixelData{0x7FE0, 0x0010};
}  // namespace tags

inline constexpr std::string_view kImplicitVrLe = "1.2.840.10008.1.2";
inline constexpr std::string_view kExplicitVrLe = "1.2.840.10008.1.2.1";

enum class DicomErrc {
  kBadMagic,
  kTruncatedFile,
  kUnsupportedTransferSyntax,
  kInvalidDataset,
  kMixedSeries,
  kDuplicateInstanceNumber,
  kIo,
};

class DicomError : public std::runtime_error {
 public:
  DicomError(DicomErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  DicomErrc code() const { return code_; }

 private:
  DicomErrc code_;
};

// One data element. `value` holds the encoded bytes exactly as written to a
// file, already padded to even length.
struct DicomElement {
  DicomTag tag;
  std::string vr;
  std::vector<std::uint8_t> value;

  // Text value, padded per the encoding rules (space, or NUL for UI).
  static DicomElement make_string(DicomTag tag, std::string_view vr, std::string_view text);
  static DicomElement make_u16(DicomTag tag, std::uint16_t v);  // US
  static DicomElement make_pixel_data(std::vector<std::uint8_t> bytes);  // OW

  std::string str() const;               // decoded view, trailing pad stripped
  std::vector<double> decimals() const;  // backslash-separated DS/IS values
  long long as_int() const;              // IS text or US/UL/SS/SL binary
  std::uint16_t as_u16() const;

  bool operator==(const DicomElement&) const = default;
};

struct DicomDataset {
  std::vector<DicomElement> elements;  // strictly ascending by tag
  std::string transfer_syntax{kExplicitVrLe};

  void put(DicomElement e);  // insert in tag order, replacing an equal tag
  const DicomElement* find(DicomTag t) const;
  bool has(DicomTag t) const { return find(t) != nullptr; }
  // Throws DicomError(kInvalidDataset) when structural invariants fail.
  void validate() const;

  bool operator==(const DicomDataset&) const = default;
};

DicomDataset parse_dicom(std::span<const std::uint8_t> bytes);
DicomDataset parse_dicom_file(const std::filesystem::path& path);

// Emits preamble + "DICM" + file meta + dataset in Explicit VR Little
// Endian. parse_dicom inverts it exactly.
std::vector<std::uint8_t> write_fixture(const DicomDataset& ds);
void write_fixture_file(const DicomDataset& ds, const std::filesystem::path& path);

// Keeps exactly the whitelisted elements; the input is untouched.
DicomDataset anonymize(const DicomDataset& ds, const std::set<DicomTag>& whitelist);

// Attributes needed for pixel reconstruction and series assembly.
const std::set<DicomTag>& default_whitelist();

// Orders one series' instances by InstanceNumber and converts raw pixels to
// HU via value * RescaleSlope + RescaleIntercept (defaults 1 and 0).
CtScan extract_scan(const std::vector<DicomDataset>& datasets);

// Parses every *.dcm under root and assembles one CtScan per series,
// returned sorted by series UID.
std::vector<CtScan> load_scan_tree(const std::filesystem::path& root);

}  // namespace ctphase::dicom
