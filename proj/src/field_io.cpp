#include "illposed/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "illposed/errors.hpp"

namespace illposed {

static_assert(std::endian::native == std::endian::little, "binary field format assumes a little-endian host");

namespace {

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is, const std::filesystem::path& path) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(T))) {
    throw ConfigError("truncated field file: " + path.string());
  }
  return v;
}

}  // namespace

void write_field(const Field& u, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open for writing: " + path.string());
  put<std::int64_t>(os, u.grid().dim());
  put<std::int64_t>(os, u.grid().points());
  put<double>(os, u.grid().half_width());
  os.write(reinterpret_cast<const char*>(u.samples().data()),
           static_cast<std::streamsize>(u.samples().size() * sizeof(double)));
}

Field read_field(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open field file: " + path.string());
  const auto dim = get<std::int64_t>(is, path);
  const auto n = get<std::int64_t>(is, path);
  const auto L = get<double>(is, path);
  if (dim < 1 || dim > 2 || n < 16 || n > (std::int64_t{1} << 26)) {
    throw ConfigError("bad field header in " + path.string());
  }
  Grid grid(static_cast<int>(dim), static_cast<int>(n), L);
  Eigen::ArrayXd v(static_cast<Eigen::Index>(grid.size()));
  if (!is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)))) {
    throw ConfigError("truncated field file: " + path.string());
  }
  return Field(grid, std::move(v));
}

void write_field_csv(const Field& u, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path.string());
  os.precision(17);
  const int n = u.grid().points();
  if (u.grid().dim() == 1) {
    os << "i,value\n";
    for (int i = 0; i < n; ++i) os << i << ',' << u[static_cast<std::size_t>(i)] << '\n';
  } else {
    os << "i,j,value\n";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) os << i << ',' << j << ',' << u.at(i, j) << '\n';
  }
}

}  // namespace illposed
