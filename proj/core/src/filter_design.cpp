/*
 * Copyright 2026 the rdftfb authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "rdftfb/filter_design.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rdftfb/errors.hpp"
#include "rdftfb/frequency_response.hpp"

namespace rdftfb {

namespace {

/// Attenuation a Kaiser window needs so the passband stays within
/// +-ripple_db of 0 dB. Kaiser designs have equal passband and stopband
/// ripple delta; the worse passband excursion is -20log10(1-delta).
double passband_implied_atten(double ripple_db) {
  const double delta = 1.0 - std::pow(10.0, -ripple_db / 20.0);
  return -20.0 * std::log10(delta);
}

double design_attenuation(const FilterSpec& spec) {
  return std::max(spec.stopband_atten_db,
                  passband_implied_atten(spec.passband_ripple_db));
}

/// Symmetric Kaiser-window lowpass with unit DC gain. Half the taps are
/// computed and mirrored so symmetry holds bitwise.
std::vector<double> kaiser_lowpass(int length, double cutoff, double beta) {
  std::vector<double> h(static_cast<std::size_t>(length));
  const double center = 0.5 * static_cast<double>(length - 1);
  const double i0_beta = kaiser_bessel_i0(beta);
  for (int n = 0; n <= (length - 1) / 2; ++n) {
    const double t = static_cast<double>(n) - center;
    double ideal;
    if (t == 0.0) {
      ideal = cutoff;
    } else {
      ideal = std::sin(std::numbers::pi * cutoff * t) / (std::numbers::pi * t);
    }
    const double frac = center > 0.0 ? t / center : 0.0;
    const double window =
        kaiser_bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - frac * frac))) /
        i0_beta;
    const double value = ideal * window;
    h[static_cast<std::size_t>(n)] = value;
    h[static_cast<std::size_t>(length - 1 - n)] = value;
  }
  double sum = 0.0;
  for (double v : h) sum += v;
  for (double& v : h) v /= sum;
  return h;
}

}  // namespace

double kaiser_bessel_i0(double x) {
  const double half = x / 2.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 1000; ++k) {
    const double r = half / static_cast<double>(k);
    term *= r * r;
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

double kaiser_beta(double atten_db) {
  if (atten_db > 50.0) {
    return 0.1102 * (atten_db - 8.7);
  }
  if (atten_db >= 21.0) {
    return 0.5842 * std::pow(atten_db - 21.0, 0.4) +
           0.07886 * (atten_db - 21.0);
  }
  return 0.0;
}

int estimate_kaiser_length(const FilterSpec& spec) {
  spec.validate();
  const double atten = design_attenuation(spec);
  const double delta_omega = spec.transition_width() * std::numbers::pi;
  const double taps = (atten - 7.95) / (2.285 * delta_omega);
  return static_cast<int>(std::ceil(taps)) + 1;
}

SpecCheck verify_spec(const PrototypeFilter& filter, const FilterSpec& spec,
                      int grid_points) {
  const auto resp = frequency_response(filter.coeffs, grid_points);
  SpecCheck check;
  double passband_dev = 0.0;
  double stopband_max = FrequencyResponse::kMagnitudeFloorDb;
  for (std::size_t i = 0; i < resp.size(); ++i) {
    const double f = resp.grid[i];
    if (f <= spec.passband_edge) {
      passband_dev = std::max(passband_dev, std::abs(resp.magnitude_db[i]));
    }
    if (f >= spec.stopband_edge) {
      stopband_max = std::max(stopband_max, resp.magnitude_db[i]);
    }
  }
  check.passband_deviation_db = passband_dev;
  check.stopband_atten_db = -stopband_max;
  check.passband_ok = passband_dev <= spec.passband_ripple_db;
  check.stopband_ok = check.stopband_atten_db >= spec.stopband_atten_db;
  const auto edges = measure_edges(resp, -6.0);
  check.edge_minus6db = edges.high;
  return check;
}

PrototypeFilter design_kaiser(const FilterSpec& spec,
                              const KaiserOptions& options) {
  spec.validate();
  double atten = design_attenuation(spec);
  double beta = kaiser_beta(atten);
  int length = estimate_kaiser_length(spec);
  if (length > options.max_length) {
    std::ostringstream os;
    os << "estimated tap count " << length << " exceeds the configured maximum "
       << options.max_length;
    raise(ErrorCode::infeasible, os.str());
  }
  if (length < 2) length = 2;

  // Length growth fixes marginal edge placement; if the response is
  // ripple-limited instead, a slightly stronger window is tried.
  for (int attempt = 0; length <= options.max_length; ++attempt, ++length) {
    PrototypeFilter filter;
    filter.coeffs = kaiser_lowpass(length, spec.cutoff(), beta);
    filter.symmetric = true;
    const SpecCheck check = verify_spec(filter, spec, options.grid_points);
    if (check.pass()) {
      // The design cutoff is the -6 dB bandwidth by construction (the
      // measured crossing lands a fraction of a grid step away); using
      // the exact value keeps the aliasing bound sharp, e.g. factor N
      // on a 1/N prototype is rejected as the equality case.
      filter.nominal_bandwidth = spec.cutoff();
      return filter;
    }
    if (attempt % 8 == 7) {
      atten += 0.5;
      beta = kaiser_beta(atten);
    }
  }
  std::ostringstream os;
  os << "no design up to " << options.max_length
     << " taps meets the specification";
  raise(ErrorCode::infeasible, os.str());
}

PrototypeFilter load_coefficients(std::istream& in) {
  PrototypeFilter filter;
  std::optional<double> declared_bandwidth;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      // Comments may carry the design bandwidth across a round-trip.
      const std::string comment = line.substr(hash + 1);
      const auto key = comment.find("nominal_bandwidth");
      const auto eq = comment.find('=');
      if (key != std::string::npos && eq != std::string::npos && eq > key) {
        try {
          const double value = std::stod(comment.substr(eq + 1));
          if (std::isfinite(value) && value > 0.0 && value < 1.0) {
            declared_bandwidth = value;
          }
        } catch (const std::exception&) {
          // Not a directive; plain comment text.
        }
      }
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      std::size_t consumed = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &consumed);
      } catch (const std::exception&) {
        consumed = 0;
      }
      if (consumed != token.size()) {
        std::ostringstream os;
        os << "line " << line_number << ": not a number: '" << token << "'";
        raise(ErrorCode::parse, os.str());
      }
      if (!std::isfinite(value)) {
        std::ostringstream os;
        os << "line " << line_number << ": non-finite coefficient";
        raise(ErrorCode::parse, os.str());
      }
      filter.coeffs.push_back(value);
    }
  }
  if (filter.coeffs.empty()) {
    raise(ErrorCode::parse, "coefficient file contains no values");
  }
  filter.symmetric = PrototypeFilter::is_symmetric(filter.coeffs);
  if (declared_bandwidth.has_value()) {
    filter.nominal_bandwidth = declared_bandwidth;
  } else {
    try {
      const auto resp = frequency_response(filter.coeffs, 4096);
      const auto edges = measure_edges(resp, -6.0);
      if (edges.found_high) filter.nominal_bandwidth = edges.high;
    } catch (const Error&) {
      // No -6 dB crossing (e.g. an all-pass); bandwidth stays unknown.
    }
  }
  return filter;
}

PrototypeFilter load_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorCode::io, "cannot open coefficient file: " + path);
  }
  return load_coefficients(in);
}

void save_coefficients(const PrototypeFilter& filter, std::ostream& out,
                       const std::string& header_comment) {
  if (!header_comment.empty()) {
    out << "# " << header_comment << "\n";
  }
  char buf[64];
  if (filter.nominal_bandwidth.has_value()) {
    std::snprintf(buf, sizeof(buf), "# nominal_bandwidth = %.17g\n",
                  *filter.nominal_bandwidth);
    out << buf;
  }
  for (double c : filter.coeffs) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", c);
    out << buf;
  }
}

void save_coefficients_file(const PrototypeFilter& filter,
                            const std::string& path,
                            const std::string& header_comment) {
  std::ofstream out(path);
  if (!out) {
    raise(ErrorCode::io, "cannot write coefficient file: " + path);
  }
  save_coefficients(filter, out, header_comment);
}

}  // namespace rdftfb
