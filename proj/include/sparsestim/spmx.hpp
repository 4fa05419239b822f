#pragma once

// SPMX binary sparse-matrix container.
//
// Layout (little-endian):
//   magic   "SPMX" (53 50 4D 58)
//   version u32 = 1
//   rows    u64
//   cols    u64
//   nnz     u64
//   indptr  (rows + 1) x u64
//   indices nnz x u32
//   values  nnz x f32

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "sparsestim/csr_matrix.hpp"

namespace sparsestim {

inline constexpr std::uint32_t kSpmxVersion = 1;
inline constexpr std::uint64_t kSpmxHeaderBytes = 4 + 4 + 3 * 8;

std::uint64_t spmx_size_bytes(std::uint64_t rows, std::uint64_t nnz);

/// Values are narrowed to f32; everything else is stored exactly.
std::vector<std::uint8_t> encode_spmx(const CsrMatrix& a);

/// Rejects wrong magic/version, truncated or oversized payloads, and any
/// structural violation of the CSR invariants.
CsrMatrix decode_spmx(std::span<const std::uint8_t> bytes);

void write_spmx(const CsrMatrix& a, const std::filesystem::path& path);
CsrMatrix read_spmx(const std::filesystem::path& path);

}  // namespace sparsestim
