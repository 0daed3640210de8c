// Little-endian binary stream helpers for bit-exact model files.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tap::binio {

void write_u32(std::ostream& os, std::uint32_t v);
void write_u64(std::ostream& os, std::uint64_t v);
void write_i64(std::ostream& os, std::int64_t v);
void write_f64(std::ostream& os, double v);
void write_string(std::ostream& os, const std::string& s);
void write_vec(std::ostream& os, const std::vector<double>& v);
void write_matrix(std::ostream& os, const Eigen::MatrixXd& m);
void write_vector(std::ostream& os, const Eigen::VectorXd& v);

std::uint32_t read_u32(std::istream& is);
std::uint64_t read_u64(std::istream& is);
std::int64_t read_i64(std::istream& is);
double read_f64(std::istream& is);
std::string read_string(std::istream& is);
std::vector<double> read_vec(std::istream& is);
Eigen::MatrixXd read_matrix(std::istream& is);
Eigen::VectorXd read_vector(std::istream& is);

}  // namespace tap::binio
