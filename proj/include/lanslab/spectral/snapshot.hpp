#pragma once

#include <filesystem>
#include <string>

#include "lanslab/spectral/field.hpp"

namespace lanslab::spectral {

/// Field snapshot file.
///
/// Layout:
///   bytes [0, 8)    magic "LANSSNP1"
///   bytes [8, 16)   header length H, unsigned 64-bit little-endian
///   bytes [16, 16+H) UTF-8 JSON header:
///       {"format":"lanslab-snapshot","version":1,"n":..,"N":..,
///        "components":..,"layout":"row-major","dtype":"float64",
///        "endianness":"little","t":..}
///   payload         components * N^n doubles, little-endian, component by
///                   component, each row-major with axis 0 slowest.
struct Snapshot {
  RealField field;
  double time = 0.0;
};

void write_snapshot(const std::filesystem::path& path, const RealField& field, double time);
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace lanslab::spectral
