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
#include "rdftfb/frequency_response.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "rdftfb/errors.hpp"

namespace rdftfb {

namespace {

std::vector<double> uniform_grid(int num_points) {
  if (num_points < 2) {
    raise(ErrorCode::invalid, "response evaluation needs at least 2 grid points");
  }
  std::vector<double> grid(static_cast<std::size_t>(num_points));
  const double step = 1.0 / static_cast<double>(num_points - 1);
  for (int i = 0; i < num_points; ++i) {
    grid[static_cast<std::size_t>(i)] = static_cast<double>(i) * step;
  }
  grid.back() = 1.0;
  return grid;
}

std::vector<double> floored_magnitude_db(
    const std::vector<std::complex<double>>& values) {
  std::vector<double> db(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double mag = std::abs(values[i]);
    db[i] = mag > 0.0
                ? std::max(20.0 * std::log10(mag),
                           FrequencyResponse::kMagnitudeFloorDb)
                : FrequencyResponse::kMagnitudeFloorDb;
  }
  return db;
}

}  // namespace

FrequencyResponse FrequencyResponse::from_values(
    std::vector<double> grid, std::vector<std::complex<double>> values) {
  if (grid.size() != values.size() || grid.size() < 2) {
    raise(ErrorCode::invalid, "response grid and values must match, length >= 2");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      raise(ErrorCode::invalid, "response grid must be strictly increasing");
    }
  }
  FrequencyResponse resp;
  resp.grid = std::move(grid);
  resp.values = std::move(values);
  resp.magnitude_db = floored_magnitude_db(resp.values);
  return resp;
}

FrequencyResponse frequency_response(std::span<const double> coeffs,
                                     int num_points) {
  auto grid = uniform_grid(num_points);
  std::vector<std::complex<double>> values(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double omega = std::numbers::pi * grid[p];
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      const double phase = omega * static_cast<double>(n);
      acc += coeffs[n] * std::complex<double>(std::cos(phase), -std::sin(phase));
    }
    values[p] = acc;
  }
  return FrequencyResponse::from_values(std::move(grid), std::move(values));
}

FrequencyResponse frequency_response(
    std::span<const std::complex<double>> coeffs, int num_points,
    bool mirrored) {
  auto grid = uniform_grid(num_points);
  const double sign = mirrored ? -1.0 : 1.0;
  std::vector<std::complex<double>> values(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double omega = sign * std::numbers::pi * grid[p];
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      const double phase = omega * static_cast<double>(n);
      acc += coeffs[n] * std::complex<double>(std::cos(phase), -std::sin(phase));
    }
    values[p] = acc;
  }
  return FrequencyResponse::from_values(std::move(grid), std::move(values));
}

BandEdges measure_edges(const FrequencyResponse& resp, double level_db) {
  if (!(level_db < 0.0)) {
    raise(ErrorCode::invalid, "edge level must be negative dB (relative to peak)");
  }
  if (resp.size() < 2) {
    raise(ErrorCode::invalid, "response too short to measure");
  }

  const auto peak_it =
      std::max_element(resp.magnitude_db.begin(), resp.magnitude_db.end());
  const std::size_t peak =
      static_cast<std::size_t>(peak_it - resp.magnitude_db.begin());
  const double threshold = *peak_it + level_db;

  auto interpolate = [&](std::size_t above, std::size_t below) {
    const double m0 = resp.magnitude_db[above];
    const double m1 = resp.magnitude_db[below];
    const double f0 = resp.grid[above];
    const double f1 = resp.grid[below];
    if (m1 == m0) return f1;
    const double t = (threshold - m0) / (m1 - m0);
    return f0 + t * (f1 - f0);
  };

  BandEdges edges;
  edges.low = resp.grid.front();
  edges.high = resp.grid.back();

  for (std::size_t i = peak + 1; i < resp.size(); ++i) {
    if (resp.magnitude_db[i] < threshold) {
      edges.high = interpolate(i - 1, i);
      edges.found_high = true;
      break;
    }
  }
  for (std::size_t i = peak; i-- > 0;) {
    if (resp.magnitude_db[i] < threshold) {
      edges.low = interpolate(i + 1, i);
      edges.found_low = true;
      break;
    }
  }

  if (!edges.found_low && !edges.found_high) {
    raise(ErrorCode::not_found, "response never falls to the requested level");
  }
  return edges;
}

void write_csv(const FrequencyResponse& resp, std::ostream& out) {
  out << "freq,real,imag,mag_db\n";
  char line[160];
  for (std::size_t i = 0; i < resp.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g,%.12g\n", resp.grid[i],
                  resp.values[i].real(), resp.values[i].imag(),
                  resp.magnitude_db[i]);
    out << line;
  }
}

}  // namespace rdftfb
