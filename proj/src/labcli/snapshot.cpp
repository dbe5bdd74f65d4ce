#include "dbo/labcli/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace dbo::labcli {

namespace {

constexpr char kMagicBytes[9] = "DBOSNAP1"; // 8 chars + NUL

static_assert(std::endian::native == std::endian::little,
              "snapshot writer assumes a little-endian host");

void put_u64(std::ofstream& out, uint64_t v) {
    out.write(reinterpret_cast<const char*>(&v), 8);
}

void put_f64(std::ofstream& out, double v) {
    out.write(reinterpret_cast<const char*>(&v), 8);
}

uint64_t get_u64(std::ifstream& in) {
    uint64_t v = 0;
    in.read(reinterpret_cast<char*>(&v), 8);
    return v;
}

double get_f64(std::ifstream& in) {
    double v = 0;
    in.read(reinterpret_cast<char*>(&v), 8);
    return v;
}

} // namespace

void write_snapshot(const std::string& path, const PhysicalField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write snapshot '" + path + "'");
    uint64_t magic;
    std::memcpy(&magic, kMagicBytes, 8);
    put_u64(out, magic);
    put_u64(out, kSnapshotVersion);
    put_u64(out, static_cast<uint64_t>(f.grid->n_points));
    put_f64(out, f.grid->half_length);
    for (double v : f.samples) put_f64(out, v);
}

PhysicalField read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read snapshot '" + path + "'");
    uint64_t magic_expected;
    std::memcpy(&magic_expected, kMagicBytes, 8);
    const uint64_t magic = get_u64(in);
    if (magic != magic_expected) throw std::runtime_error("bad snapshot magic in '" + path + "'");
    const uint64_t version = get_u64(in);
    if (version != kSnapshotVersion)
        throw std::runtime_error("unsupported snapshot version in '" + path + "'");
    const uint64_t n = get_u64(in);
    const double half_length = get_f64(in);
    if (n < 8 || n % 2 != 0 || !(half_length > 0.0))
        throw std::runtime_error("corrupt snapshot header in '" + path + "'");
    auto grid = make_grid(static_cast<int>(n), half_length);
    std::vector<double> samples(n);
    for (uint64_t j = 0; j < n; ++j) samples[j] = get_f64(in);
    if (!in) throw std::runtime_error("truncated snapshot '" + path + "'");
    return PhysicalField(grid, std::move(samples));
}

} // namespace dbo::labcli
