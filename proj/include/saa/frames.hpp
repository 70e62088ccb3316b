#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace saa {

inline constexpr int kFrameBits = 56;
inline constexpr int kChipCount = 112;
inline constexpr std::uint32_t kCrc24Poly = 0xFFF409;  // x^24 implicit

struct encoding_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct unsupported_encoding_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 56-bit DF4 surveillance altitude reply, MSB-first bit order.
/// Layout: DF(5) FS(3) DR(5) UM(6) AC(13) AP(24).
struct Df4Frame {
  std::array<std::uint8_t, kFrameBits> bits{};

  std::uint32_t df_format() const { return field(0, 5); }
  std::uint32_t flight_status() const { return field(5, 3); }
  std::uint32_t downlink_request() const { return field(8, 5); }
  std::uint32_t utility_msg() const { return field(13, 6); }
  std::uint32_t altitude_code() const { return field(19, 13); }
  std::uint32_t address_parity() const { return field(32, 24); }

  std::string to_hex() const;
  static Df4Frame from_hex(std::string_view hex);
  static Df4Frame from_bits(const std::array<std::uint8_t, kFrameBits>& b);

 private:
  std::uint32_t field(int start, int len) const {
    std::uint32_t v = 0;
    for (int i = 0; i < len; ++i) v = (v << 1) | (bits[start + i] & 1u);
    return v;
  }
};

/// PPM chip expansion of the 56 payload bits: chip pair (2k, 2k+1) = (b_k, !b_k).
struct ChipVector {
  std::array<std::uint8_t, kChipCount> chips{};
};

/// CRC-24 remainder of bits * x^24 modulo the Mode S generator, MSB-first.
std::uint32_t crc24(std::span<const std::uint8_t> bits);

/// 13-bit AC field for the 25-ft code: 11-bit count of (ft+1000)/25 with
/// M-bit = 0 and Q-bit = 1 interleaved at their standard positions.
std::uint32_t encode_altitude(int altitude_ft);

/// Inverse of encode_altitude; rejects M = 1 and Q = 0 fields.
int decode_altitude(std::uint32_t ac);

Df4Frame build_frame(int altitude_ft, std::uint32_t address,
                     std::uint32_t flight_status = 0,
                     std::uint32_t downlink_request = 0,
                     std::uint32_t utility_msg = 0);

bool check_crc(const Df4Frame& frame, std::uint32_t expected_address);

ChipVector ppm_expand(const std::array<std::uint8_t, kFrameBits>& payload);

/// Ascending indices of the set chips; always 56 of them for a valid frame.
std::vector<int> nonzero_chip_indices(const ChipVector& chips);

}  // namespace saa
