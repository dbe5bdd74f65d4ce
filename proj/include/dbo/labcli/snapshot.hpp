#ifndef DBO_LABCLI_SNAPSHOT_HPP
#define DBO_LABCLI_SNAPSHOT_HPP

#include <string>

#include "dbo/field.hpp"

namespace dbo::labcli {

/// Flat binary snapshot: four 8-byte little-endian header fields
/// (magic "DBOSNAP1", version, n_points, half_length) followed by
/// n_points little-endian float64 samples.
void write_snapshot(const std::string& path, const PhysicalField& f);
PhysicalField read_snapshot(const std::string& path);

constexpr uint64_t kSnapshotVersion = 1;

} // namespace dbo::labcli

#endif
