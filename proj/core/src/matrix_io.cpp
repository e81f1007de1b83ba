#include "htldp/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "htldp/csv.hpp"
#include "htldp/errors.hpp"

namespace htldp {

namespace {

constexpr const char* kMagic = "# htldp-matrix 1";

nlohmann::json header_json(const MatrixHeader& h) {
  return {{"N", h.n}, {"seed", h.seed}, {"law", h.law}, {"normalized", h.normalized}, {"params", h.params}};
}

template <class Scalar>
void write_impl(std::ostream& os, const Matrix<Scalar>& H, const MatrixHeader& header) {
  if (H.rows() != H.cols()) throw ValidationError("write_matrix_csv: matrix is not square");
  MatrixHeader h = header;
  h.n = static_cast<std::size_t>(H.rows());
  os << kMagic << '\n' << "# " << header_json(h).dump() << '\n';
  CsvTable table;
  table.header = {"i", "j", "re", "im"};
  for (Eigen::Index i = 0; i < H.rows(); ++i) {
    for (Eigen::Index j = i; j < H.cols(); ++j) {
      const std::complex<double> z(H(i, j));
      table.rows.push_back({std::to_string(i), std::to_string(j), format_real(z.real()), format_real(z.imag())});
    }
  }
  write_csv(os, table);
}

}  // namespace

void write_matrix_csv(std::ostream& os, const ComplexMatrix& H, const MatrixHeader& header) {
  write_impl(os, H, header);
}

void write_matrix_csv(std::ostream& os, const RealMatrix& H, const MatrixHeader& header) {
  write_impl(os, H, header);
}

LoadedMatrix read_matrix_csv(std::istream& is) {
  std::string magic, meta;
  if (!std::getline(is, magic) || magic != kMagic) throw ValidationError("not an htldp matrix file");
  if (!std::getline(is, meta) || meta.rfind("# ", 0) != 0) throw ValidationError("missing matrix header line");
  LoadedMatrix out;
  try {
    const auto j = nlohmann::json::parse(meta.substr(2));
    out.header.n = j.at("N").get<std::size_t>();
    out.header.seed = j.at("seed").get<std::uint64_t>();
    out.header.law = j.at("law").get<std::string>();
    out.header.normalized = j.at("normalized").get<bool>();
    out.header.params = j.at("params").get<TailParams>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad matrix header: ") + e.what());
  }
  const CsvTable table = read_csv(is);
  const auto n = static_cast<Eigen::Index>(out.header.n);
  const std::size_t expected = out.header.n * (out.header.n + 1) / 2;
  if (table.rows.size() != expected) throw ValidationError("matrix file has the wrong number of entries");
  out.matrix = ComplexMatrix::Zero(n, n);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j, ++k) {
      const auto& row = table.rows[k];
      if (row[0] != std::to_string(i) || row[1] != std::to_string(j)) {
        throw ValidationError("matrix entries out of row-major upper-triangle order");
      }
      const std::complex<double> z(parse_real(row[2]), parse_real(row[3]));
      if (i == j && z.imag() != 0.0) throw ValidationError("diagonal entry with nonzero imaginary part");
      out.matrix(i, j) = z;
      out.matrix(j, i) = std::conj(z);
    }
  }
  return out;
}

}  // namespace htldp
