// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace fso {

/// In-place complex FFT on split re/im arrays; n must be a power of two.
/// The inverse transform includes the 1/n scaling.
void fft_pow2(double* re, double* im, std::size_t n, bool inverse);

/// Exact DFT of arbitrary length (Bluestein's chirp transform on top of the
/// power-of-two FFT). Inverse includes the 1/n scaling.
void dft(std::vector<double>& re, std::vector<double>& im, bool inverse);

}  // namespace fso
