#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fusetrack::kernels {

enum class Backend { scalar, avx2, neon };

// Reduction kernels. SIMD variants reorder the accumulation, so results may
// differ from the scalar reference by a few ulps.
double sum(const double* v, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
/// Bhattacharyya coefficient core: sum_i sqrt(a[i] * b[i]).
double bhat_sum(const double* a, const double* b, std::size_t n);

// Elementwise kernels. All variants produce bit-identical results.
void scale(double* v, std::size_t n, double s);
void mul(double* out, const double* a, const double* b, std::size_t n);
/// out[i] = alpha * a[i] + beta * b[i]
void axpby(double* out, double alpha, const double* a, double beta, const double* b,
           std::size_t n);
/// Kernel-profile weights for one row of region pixels:
///   w[i] = max(0, 1 - ((dx0 + i)^2 + dy^2) * inv_h2)
/// where dx0 = x0 - cx, dy = y - cy and inv_h2 = 1 / (hx^2 + hy^2).
void region_weight_row(double dx0, double dy, double inv_h2, double* w, std::size_t n);

// Pixel kernels over interleaved 8-bit RGB. Bit-identical across variants.
//
// luma_row: fixed-point BT.601 luma, rounded to nearest (ties up):
//   gray = (299 r + 587 g + 114 b + 500) / 1000
void luma_row(const std::uint8_t* rgb, std::uint8_t* gray, std::size_t n);
/// 8-neighbor binary pattern codes for n pixels of `center`. Bit 7 is the
/// top-left neighbor, remaining bits follow clockwise (T, TR, R, BR, B, BL, L);
/// a bit is set when neighbor >= center. Caller must guarantee center[-1] and
/// center[n] (and the same columns of `above`/`below`) are readable.
void lbp_row(const std::uint8_t* above, const std::uint8_t* center,
             const std::uint8_t* below, std::uint8_t* codes, std::size_t n);
/// 8x8x8 RGB histogram bin indices: bin = (r>>5)<<6 | (g>>5)<<3 | (b>>5).
void color_bin_row(const std::uint8_t* rgb, std::uint16_t* bins, std::size_t n);

Backend backend();
void set_backend(Backend b);  // throws std::runtime_error if unavailable here
std::vector<Backend> available_backends();
const char* backend_name(Backend b);
bool parse_backend(const std::string& name, Backend& out);

}  // namespace fusetrack::kernels
