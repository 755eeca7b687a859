#pragma once

#include <cstddef>
#include <cstdint>

namespace fusetrack::kernels::detail {

struct Table {
  double (*sum)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*bhat_sum)(const double*, const double*, std::size_t);
  void (*scale)(double*, std::size_t, double);
  void (*mul)(double*, const double*, const double*, std::size_t);
  void (*axpby)(double*, double, const double*, double, const double*, std::size_t);
  void (*region_weight_row)(double, double, double, double*, std::size_t);
  void (*luma_row)(const std::uint8_t*, std::uint8_t*, std::size_t);
  void (*lbp_row)(const std::uint8_t*, const std::uint8_t*, const std::uint8_t*,
                  std::uint8_t*, std::size_t);
  void (*color_bin_row)(const std::uint8_t*, std::uint16_t*, std::size_t);
};

const Table* avx2_table();  // null when not compiled in
const Table* neon_table();

}  // namespace fusetrack::kernels::detail
