#ifndef HODGELETS_IO_HPP
#define HODGELETS_IO_HPP

#include "hodgelets/complex.hpp"
#include "hodgelets/dictionary.hpp"
#include "hodgelets/hexgrid.hpp"
#include "hodgelets/kernels.hpp"

#include <string>

namespace hodgelets {

// Shortest exact decimal for byte-stable text output.
std::string format_double(double value);

// {"n_nodes": N, "edges": [[i,j],...], "triangles": [[i,j,k],...]}, 1-based.
void write_complex_json(const SimplicialComplex& x, const std::string& path);
SimplicialComplex read_complex_json(const std::string& path);

// CSV, header node,x,y.
void write_geometry_csv(const Geometry& geom, const std::string& path);
Geometry read_geometry_csv(const std::string& path);

// CSV, header index,eigenvalue.
void write_spectrum_csv(const Eigen::VectorXd& eigenvalues, const std::string& path);

// CSV, header edge,midx,midy,length,nx,ny with edge encoded i-j.
void write_hexmeta_csv(const SimplicialComplex& x, const HexMeta& meta, const std::string& path);
HexMeta read_hexmeta_csv(const SimplicialComplex& x, const std::string& path);

// CSV, header edge,value with edge encoded i-j (i < j).
void write_cochain_csv(const SimplicialComplex& x, const Cochain& flow, const std::string& path);
Cochain read_cochain_csv(const SimplicialComplex& x, const std::string& path);

// CSV, header part,m,j,coefficient, in dictionary order.
void write_coefficients_csv(const Dictionary& dict, const Eigen::VectorXd& coefficients,
                            const std::string& path);

// Bank parameters and normalization table; reproduces evaluations exactly.
// Manual banks are not serialisable.
void write_bank_json(const KernelBank& bank, const std::string& path);
KernelBank read_bank_json(const std::string& path);

} // namespace hodgelets

#endif
