#include "lanslab/spectral/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace lanslab::spectral {
namespace {

constexpr std::array<char, 8> kMagic = {'L', 'A', 'N', 'S', 'S', 'N', 'P', '1'};

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    std::array<unsigned char, sizeof(T)> b;
    std::memcpy(b.data(), &v, sizeof(T));
    std::reverse(b.begin(), b.end());
    std::memcpy(&v, b.data(), sizeof(T));
    return v;
  }
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const RealField& field, double time) {
  const Grid& grid = field.grid();
  nlohmann::ordered_json header = {
      {"format", "lanslab-snapshot"}, {"version", 1},
      {"n", grid.dimension()},        {"N", grid.points()},
      {"components", field.components()},
      {"layout", "row-major"},        {"dtype", "float64"},
      {"endianness", "little"},       {"t", time}};
  const std::string text = header.dump();

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open snapshot for writing: " + path.string());
  out.write(kMagic.data(), kMagic.size());
  const std::uint64_t len = to_little<std::uint64_t>(text.size());
  out.write(reinterpret_cast<const char*>(&len), sizeof(len));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (int c = 0; c < field.components(); ++c) {
    for (double v : field.component(c)) {
      const double le = to_little(v);
      out.write(reinterpret_cast<const char*>(&le), sizeof(le));
    }
  }
  if (!out) throw std::runtime_error("failed writing snapshot: " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open snapshot: " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("not a lanslab snapshot: " + path.string());
  std::uint64_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof(len));
  len = to_little(len);
  if (!in || len > (1u << 20)) throw std::runtime_error("corrupt snapshot header: " + path.string());
  std::string text(len, '\0');
  in.read(text.data(), static_cast<std::streamsize>(len));
  const auto header = nlohmann::json::parse(text);
  if (header.at("dtype") != "float64" || header.at("layout") != "row-major" ||
      header.at("endianness") != "little") {
    throw std::runtime_error("unsupported snapshot layout in " + path.string());
  }

  Grid grid(header.at("n").get<int>(), header.at("N").get<int>());
  Snapshot snap{RealField(grid, header.at("components").get<int>()), header.at("t").get<double>()};
  for (int c = 0; c < snap.field.components(); ++c) {
    auto data = snap.field.component(c);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size_bytes()));
    for (double& v : data) v = to_little(v);
  }
  if (!in) throw std::runtime_error("truncated snapshot payload: " + path.string());
  return snap;
}

}  // namespace lanslab::spectral
