#include "fock/serialize.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "fock/errors.hpp"
#include "fock/symbol_parse.hpp"

namespace fock {

using nlohmann::json;

namespace {

// JSON has no infinities; they are written as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json objective_json(const RatioObjective& o) {
  return {{"value", number(o.value)},           {"numerator", number(o.numerator)},
          {"denominator", number(o.denominator)}, {"degenerate", o.degenerate},
          {"numerator_negligible", o.numerator_negligible}, {"dim_used", o.dim_used}};
}

void set_precision(std::ostream& os) { os.precision(std::numeric_limits<double>::max_digits10); }

}  // namespace

std::string quadrature_to_json(const QuadratureRule& rule) {
  return json{{"alpha", rule.alpha}, {"nodes", rule.nodes}, {"weights", rule.weights}}.dump();
}

std::string matrix_to_json(const ComplexMatrix& a, double t) {
  json entries = json::array();
  for (const cplx& c : a.entries()) entries.push_back({c.real(), c.imag()});
  return json{{"dim", a.dim()}, {"t", t}, {"hermitian", a.hermitian()}, {"entries", std::move(entries)}}.dump();
}

LoadedMatrix matrix_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  try {
    const int dim = j.at("dim").get<int>();
    const double t = j.at("t").get<double>();
    const auto& entries = j.at("entries");
    if (dim < 1 || entries.size() != static_cast<std::size_t>(dim) * dim)
      throw ParseError("matrix json: entry count does not match dim", 0);
    std::vector<cplx> data;
    data.reserve(entries.size());
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 2) throw ParseError("matrix json: entries must be [re, im] pairs", 0);
      data.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    LoadedMatrix out{ComplexMatrix(dim, std::move(data)), t};
    out.matrix.refresh_hermitian_flag();
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix json: ") + e.what(), 0);
  }
}

void write_values_csv(std::ostream& os, const std::vector<double>& values) {
  set_precision(os);
  os << "m,lambda\n";
  for (std::size_t m = 0; m < values.size(); ++m) os << m << ',' << values[m] << '\n';
}

void write_eigen_csv(std::ostream& os, const EigenSequence& e) { write_values_csv(os, e.values); }

void write_berezin_csv(std::ostream& os, const std::vector<BerezinSample>& samples) {
  set_precision(os);
  os << "s,re,im,tail_bound\n";
  for (const auto& s : samples)
    os << std::abs(s.z) << ',' << s.value.value.real() << ',' << s.value.value.imag() << ',' << s.value.tail_bound
       << '\n';
}

std::string esspos_to_json(const EssPosReport& r) {
  json diags = json::array();
  for (const auto& d : r.diagnostics) diags.push_back({{"probe", d.probe}, {"value", number(d.value)}});
  return json{{"verdict", to_string(r.verdict)},
              {"margin", number(r.margin)},
              {"mode", to_string(r.mode)},
              {"diagnostics", std::move(diags)},
              {"heuristic", r.heuristic}}
      .dump(2);
}

void write_counterexample_csv(std::ostream& os, const std::vector<RatioRow>& rows) {
  set_precision(os);
  os << "absz,ess_exact,ess_numeric,berezin_sup,ratio\n";
  for (const auto& r : rows)
    os << r.absz << ',' << r.ess_norm_exact << ',' << r.ess_norm_numeric << ',' << r.berezin_sup << ',' << r.ratio
       << '\n';
}

std::string search_result_to_json(const SearchResult& r) {
  const auto& c = r.config;
  json config{{"rings", c.rings},
              {"r_max", c.r_max},
              {"iters", c.iters},
              {"seed", c.seed},
              {"tail", c.tail},
              {"start", c.start},
              {"s_grid", c.s_grid},
              {"window_frac", c.window_frac},
              {"restart_period", c.restart_period},
              {"initial_temperature", c.initial_temperature},
              {"candidate_threshold", c.candidate_threshold}};
  json history = json::array();
  for (const auto& [it, v] : r.history) history.push_back({it, number(v)});
  return json{{"profile", print_symbol(r.best_profile)},
              {"objective", objective_json(r.objective)},
              {"objective_double_dim", objective_json(r.objective_double_dim)},
              {"history", std::move(history)},
              {"history_hash", history_hash(r)},
              {"seed", r.seed},
              {"evaluations", r.evaluations},
              {"label", r.label},
              {"config", std::move(config)}}
      .dump(2);
}

}  // namespace fock
