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
#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace rdftfb {

/// Complex sample stream CSV: header `re,im`, one sample per line.
std::vector<std::complex<double>> read_samples(std::istream& in);
std::vector<std::complex<double>> read_samples_file(const std::string& path);

void write_samples(const std::vector<std::complex<double>>& samples,
                   std::ostream& out);
void write_samples_file(const std::vector<std::complex<double>>& samples,
                        const std::string& path);

/// Wide channelizer output: header `n,y0_re,y0_im,...`, one row per sample.
void write_wide_outputs(
    const std::vector<std::vector<std::complex<double>>>& outputs,
    std::ostream& out);

/// Single-subband output: header `n,re,im`.
void write_subband_output(const std::vector<std::complex<double>>& samples,
                          std::ostream& out);

}  // namespace rdftfb
