#pragma once

// JSON and CSV serialisation. Network and state files use 1-based site
// labels; in memory everything is 0-based.

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "spinweave/dynamics.hpp"
#include "spinweave/error.hpp"
#include "spinweave/network.hpp"
#include "spinweave/protocols.hpp"

namespace spinweave {

using json = nlohmann::json;

inline json network_to_json(const NetworkSpec& spec) {
  json edges = json::array();
  for (const Edge& e : spec.edges())
    edges.push_back({e.from + 1, e.to + 1, e.amplitude.real(), e.amplitude.imag()});
  json onsite = json::array();
  for (std::size_t i = 0; i < spec.n_sites(); ++i)
    if (spec.onsite()[i] != 0.0) onsite.push_back({i + 1, spec.onsite()[i]});
  json ports = json::object();
  for (const auto& [name, sites] : spec.ports()) {
    json list = json::array();
    for (std::size_t s : sites) list.push_back(s + 1);
    ports[name] = list;
  }
  return {{"n_sites", spec.n_sites()}, {"edges", edges}, {"onsite", onsite}, {"ports", ports}};
}

namespace detail {
[[noreturn]] inline void malformed(const std::string& what) { throw Error(ErrorKind::malformed_input, what); }

inline std::size_t site_label(const json& v, std::size_t n_sites) {
  if (!v.is_number_integer()) malformed("site label must be an integer");
  const auto label = v.get<long long>();
  if (label < 1 || static_cast<std::size_t>(label) > n_sites)
    malformed("site label " + std::to_string(label) + " outside 1.." + std::to_string(n_sites));
  return static_cast<std::size_t>(label - 1);
}

inline double number(const json& v) {
  if (!v.is_number()) malformed("expected a number");
  return v.get<double>();
}
}  // namespace detail

/// Validates structure and invariants; any problem is a malformed-input error.
inline NetworkSpec network_from_json(const json& j) {
  using detail::malformed;
  if (!j.is_object()) malformed("network must be a JSON object");
  if (!j.contains("n_sites") || !j["n_sites"].is_number_integer() || j["n_sites"].get<long long>() < 1)
    malformed("n_sites must be a positive integer");
  const auto n = static_cast<std::size_t>(j["n_sites"].get<long long>());
  NetworkSpec spec(n);
  try {
    for (const json& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 4) malformed("edge must be [i, j, re, im]");
      spec.add_edge(detail::site_label(e[0], n), detail::site_label(e[1], n),
                    cplx(detail::number(e[2]), detail::number(e[3])));
    }
    for (const json& o : j.value("onsite", json::array())) {
      if (!o.is_array() || o.size() != 2) malformed("onsite entry must be [i, energy]");
      spec.add_onsite(detail::site_label(o[0], n), detail::number(o[1]));
    }
    const json ports = j.value("ports", json::object());
    if (!ports.is_object()) malformed("ports must be an object");
    for (const auto& [name, list] : ports.items()) {
      if (!list.is_array()) malformed("port '" + name + "' must be a list");
      std::vector<std::size_t> sites;
      for (const json& s : list) sites.push_back(detail::site_label(s, n));
      spec.set_port(name, sites);
    }
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::malformed_input) throw;
    malformed(err.what());
  } catch (const json::exception& err) {
    malformed(err.what());
  }
  return spec;
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    detail::malformed(err.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::invalid_argument, "write failed for " + path);
}

inline NetworkSpec load_network(const std::string& path) { return network_from_json(parse_json_text(read_text_file(path))); }

inline void save_network(const std::string& path, const NetworkSpec& spec) {
  write_text_file(path, network_to_json(spec).dump(2) + "\n");
}

inline json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

/// {basis: {k, n_sites, states}, vacuum: [re, im], amplitudes: [[re, im], ...]}
inline json state_to_json(const StateVector& psi, const ExcitationBasis& basis) {
  if (basis.dim() != psi.dim()) throw Error(ErrorKind::dimension_mismatch, "state does not match basis");
  json states = json::array();
  for (const auto& st : basis.states()) {
    json labels = json::array();
    for (std::size_t s : st) labels.push_back(s + 1);
    states.push_back(labels);
  }
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) amps.push_back(complex_pair(psi.amplitudes(i)));
  return {{"basis", {{"k", basis.k()}, {"n_sites", basis.n_sites()}, {"states", states}}},
          {"vacuum", complex_pair(psi.vacuum)},
          {"amplitudes", amps}};
}

/// {matrix: [[re, im] x 4] row-major, arrival, fidelity_to_target, leakage}
inline json gate_report(const Matrix2c& m, double arrival, double fidelity_to_target, double leakage) {
  json entries = json::array();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) entries.push_back(complex_pair(m(r, c)));
  return {{"matrix", entries}, {"arrival", arrival}, {"fidelity_to_target", fidelity_to_target}, {"leakage", leakage}};
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline constexpr const char* csv_header = "theta_or_chi,kappa,arrival_prob,phase,nu,chi0,seed";

/// Shortest text that reads back to the same double; NaN becomes an empty field.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << csv_header << '\n';
  for (const auto& r : records)
    out << format_double(r.theta_or_chi) << ',' << format_double(r.kappa) << ',' << format_double(r.arrival_prob)
        << ',' << format_double(r.phase) << ',' << format_double(r.nu) << ',' << format_double(r.chi0) << ','
        << r.seed << '\n';
  return out.str();
}

inline std::vector<ExperimentRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != csv_header) detail::malformed("unexpected CSV header");
  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    if (f.size() != 7) detail::malformed("CSV row needs 7 fields");
    const auto num = [](const std::string& s) {
      if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) detail::malformed("bad CSV number '" + s + "'");
      return v;
    };
    try {
      records.push_back({num(f[0]), num(f[1]), num(f[2]), num(f[3]), num(f[4]), num(f[5]), std::stoull(f[6])});
    } catch (const std::logic_error&) {
      detail::malformed("bad CSV row '" + line + "'");
    }
  }
  return records;
}

}  // namespace spinweave
