#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fock/berezin.hpp"
#include "fock/experiments.hpp"
#include "fock/matrix.hpp"
#include "fock/quadrature.hpp"
#include "fock/search.hpp"
#include "fock/spectra.hpp"
#include "fock/toeplitz.hpp"

namespace fock {

/// {"alpha","nodes","weights"}
std::string quadrature_to_json(const QuadratureRule& rule);

/// {"dim","t","hermitian","entries":[[re,im],...]} in row-major order.
std::string matrix_to_json(const ComplexMatrix& a, double t);

struct LoadedMatrix {
  ComplexMatrix matrix;
  double t = 0.0;
};

/// Inverse of matrix_to_json. The hermitian flag is recomputed, not trusted.
/// Throws ParseError on malformed input.
LoadedMatrix matrix_from_json(const std::string& text);

/// Header "m,lambda".
void write_eigen_csv(std::ostream& os, const EigenSequence& e);
/// Header "m,lambda" for a plain list.
void write_values_csv(std::ostream& os, const std::vector<double>& values);

struct BerezinSample {
  cplx z;
  BerezinValue value;
};

/// Header "s,re,im,tail_bound"; s is |z|.
void write_berezin_csv(std::ostream& os, const std::vector<BerezinSample>& samples);

/// {"verdict","margin","mode","diagnostics","heuristic"}
std::string esspos_to_json(const EssPosReport& r);

/// Header "absz,ess_exact,ess_numeric,berezin_sup,ratio".
void write_counterexample_csv(std::ostream& os, const std::vector<RatioRow>& rows);

std::string search_result_to_json(const SearchResult& r);

}  // namespace fock
