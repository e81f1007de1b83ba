#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "htldp/linalg.hpp"
#include "htldp/tail_params.hpp"

namespace htldp {

/// Replay metadata stored with a serialized matrix.
struct MatrixHeader {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string law = "weibull";
  TailParams params;
  bool normalized = false;  // entries already divided by √N
};

/// Matrix replay layout (CSV):
///
///   # htldp-matrix 1
///   # {"N":..,"seed":..,"law":..,"normalized":..,"params":{..}}
///   i,j,re,im
///   0,0,<re>,<im>
///   0,1,...
///
/// Rows cover the upper triangle i ≤ j in row-major order; the lower triangle
/// is the conjugate. Reals use shortest round-trip formatting.
void write_matrix_csv(std::ostream& os, const ComplexMatrix& H, const MatrixHeader& header);
void write_matrix_csv(std::ostream& os, const RealMatrix& H, const MatrixHeader& header);

struct LoadedMatrix {
  MatrixHeader header;
  ComplexMatrix matrix;
};

/// Throws ValidationError on malformed input (bad magic, missing entries, non-real diagonal).
LoadedMatrix read_matrix_csv(std::istream& is);

}  // namespace htldp
