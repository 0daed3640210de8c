#include "tap/binio.hpp"

#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "binary model files assume a little-endian host");

namespace tap::binio {

namespace {

template <typename T>
void write_raw(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T read_raw(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw std::runtime_error("truncated binary stream");
    return v;
}

}  // namespace

void write_u32(std::ostream& os, std::uint32_t v) { write_raw(os, v); }
void write_u64(std::ostream& os, std::uint64_t v) { write_raw(os, v); }
void write_i64(std::ostream& os, std::int64_t v) { write_raw(os, v); }
void write_f64(std::ostream& os, double v) { write_raw(os, v); }

void write_string(std::ostream& os, const std::string& s) {
    write_u64(os, s.size());
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void write_vec(std::ostream& os, const std::vector<double>& v) {
    write_u64(os, v.size());
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(v.size() * sizeof(double)));
}

void write_matrix(std::ostream& os, const Eigen::MatrixXd& m) {
    write_u64(os, static_cast<std::uint64_t>(m.rows()));
    write_u64(os, static_cast<std::uint64_t>(m.cols()));
    os.write(reinterpret_cast<const char*>(m.data()),
             static_cast<std::streamsize>(sizeof(double) * m.size()));
}

void write_vector(std::ostream& os, const Eigen::VectorXd& v) {
    write_u64(os, static_cast<std::uint64_t>(v.size()));
    os.write(reinterpret_cast<const char*>(v.data()),
             static_cast<std::streamsize>(sizeof(double) * v.size()));
}

std::uint32_t read_u32(std::istream& is) { return read_raw<std::uint32_t>(is); }
std::uint64_t read_u64(std::istream& is) { return read_raw<std::uint64_t>(is); }
std::int64_t read_i64(std::istream& is) { return read_raw<std::int64_t>(is); }
double read_f64(std::istream& is) { return read_raw<double>(is); }

std::string read_string(std::istream& is) {
    const std::uint64_t n = read_u64(is);
    std::string s(n, '\0');
    is.read(s.data(), static_cast<std::streamsize>(n));
    if (!is) throw std::runtime_error("truncated binary stream");
    return s;
}

std::vector<double> read_vec(std::istream& is) {
    const std::uint64_t n = read_u64(is);
    std::vector<double> v(n);
    is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(double)));
    if (!is) throw std::runtime_error("truncated binary stream");
    return v;
}

Eigen::MatrixXd read_matrix(std::istream& is) {
    const auto rows = static_cast<Eigen::Index>(read_u64(is));
    const auto cols = static_cast<Eigen::Index>(read_u64(is));
    Eigen::MatrixXd m(rows, cols);
    is.read(reinterpret_cast<char*>(m.data()),
            static_cast<std::streamsize>(sizeof(double) * m.size()));
    if (!is) throw std::runtime_error("truncated binary stream");
    return m;
}

Eigen::VectorXd read_vector(std::istream& is) {
    const auto n = static_cast<Eigen::Index>(read_u64(is));
    Eigen::VectorXd v(n);
    is.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(sizeof(double) * v.size()));
    if (!is) throw std::runtime_error("truncated binary stream");
    return v;
}

}  // namespace tap::binio
