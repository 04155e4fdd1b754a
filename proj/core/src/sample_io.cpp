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
#include "rdftfb/sample_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rdftfb/errors.hpp"

namespace rdftfb {

namespace {

double parse_field(const std::string& token, int line_number) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != token.size() || !std::isfinite(value)) {
    std::ostringstream os;
    os << "line " << line_number << ": bad sample value '" << token << "'";
    raise(ErrorCode::parse, os.str());
  }
  return value;
}

}  // namespace

std::vector<std::complex<double>> read_samples(std::istream& in) {
  std::vector<std::complex<double>> samples;
  std::string line;
  int line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line.find("re") != std::string::npos &&
          line.find_first_of("0123456789") == std::string::npos) {
        continue;  // header row
      }
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      std::ostringstream os;
      os << "line " << line_number << ": expected 're,im'";
      raise(ErrorCode::parse, os.str());
    }
    const double re = parse_field(line.substr(0, comma), line_number);
    const double im = parse_field(line.substr(comma + 1), line_number);
    samples.emplace_back(re, im);
  }
  if (samples.empty()) {
    raise(ErrorCode::parse, "sample stream is empty");
  }
  return samples;
}

std::vector<std::complex<double>> read_samples_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::io, "cannot open sample file: " + path);
  return read_samples(in);
}

void write_samples(const std::vector<std::complex<double>>& samples,
                   std::ostream& out) {
  out << "re,im\n";
  char buf[80];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", s.real(), s.imag());
    out << buf;
  }
}

void write_samples_file(const std::vector<std::complex<double>>& samples,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::io, "cannot write sample file: " + path);
  write_samples(samples, out);
}

void write_wide_outputs(
    const std::vector<std::vector<std::complex<double>>>& outputs,
    std::ostream& out) {
  out << "n";
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    out << ",y" << k << "_re,y" << k << "_im";
  }
  out << "\n";
  const std::size_t rows = outputs.empty() ? 0 : outputs.front().size();
  char buf[80];
  for (std::size_t n = 0; n < rows; ++n) {
    out << n;
    for (const auto& column : outputs) {
      std::snprintf(buf, sizeof(buf), ",%.12g,%.12g", column[n].real(),
                    column[n].imag());
      out << buf;
    }
    out << "\n";
  }
}

void write_subband_output(const std::vector<std::complex<double>>& samples,
                          std::ostream& out) {
  out << "n,re,im\n";
  char buf[96];
  for (std::size_t n = 0; n < samples.size(); ++n) {
    std::snprintf(buf, sizeof(buf), "%zu,%.12g,%.12g\n", n, samples[n].real(),
                  samples[n].imag());
    out << buf;
  }
}

}  // namespace rdftfb
