#include "saa/frames.hpp"

namespace saa {

namespace {

// Count-bit positions within the 13-bit AC field (0 = MSB). The M bit sits at
// index 6 and the Q bit at index 8; the remaining 11 positions carry the
// binary count, most significant first.
constexpr int kCountBitPos[11] = {0, 1, 2, 3, 4, 5, 7, 9, 10, 11, 12};
constexpr int kMBitPos = 6;
constexpr int kQBitPos = 8;

constexpr int kMinAltitudeFt = -1000;
constexpr int kMaxAltitudeFt = 50175;

void store_field(std::array<std::uint8_t, kFrameBits>& bits, int start, int len,
                 std::uint32_t value) {
  for (int i = 0; i < len; ++i)
    bits[start + i] = static_cast<std::uint8_t>((value >> (len - 1 - i)) & 1u);
}

}  // namespace

std::uint32_t crc24(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw std::invalid_argument("crc24: empty input");
  std::uint32_t reg = 0;
  for (std::uint8_t b : bits) {
    std::uint32_t feedback = ((reg >> 23) & 1u) ^ (b & 1u);
    reg = (reg << 1) & 0xFFFFFFu;
    if (feedback) reg ^= kCrc24Poly;
  }
  return reg;
}

std::uint32_t encode_altitude(int altitude_ft) {
  if (altitude_ft < kMinAltitudeFt || altitude_ft > kMaxAltitudeFt)
    throw encoding_error("altitude out of range for the 25-ft code");
  if ((altitude_ft - kMinAltitudeFt) % 25 != 0)
    throw encoding_error("altitude must be a multiple of 25 ft");
  std::uint32_t count = static_cast<std::uint32_t>((altitude_ft + 1000) / 25);
  std::uint32_t ac = 0;
  for (int i = 0; i < 11; ++i) {
    std::uint32_t bit = (count >> (10 - i)) & 1u;
    ac |= bit << (12 - kCountBitPos[i]);
  }
  ac |= 1u << (12 - kQBitPos);  // Q = 1, M already 0
  return ac;
}

int decode_altitude(std::uint32_t ac) {
  if ((ac >> (12 - kMBitPos)) & 1u)
    throw unsupported_encoding_error("metric altitude (M = 1) not supported");
  if (!((ac >> (12 - kQBitPos)) & 1u))
    throw unsupported_encoding_error("Gillham code (Q = 0) not supported");
  std::uint32_t count = 0;
  for (int i = 0; i < 11; ++i)
    count = (count << 1) | ((ac >> (12 - kCountBitPos[i])) & 1u);
  return static_cast<int>(count) * 25 - 1000;
}

Df4Frame build_frame(int altitude_ft, std::uint32_t address,
                     std::uint32_t flight_status, std::uint32_t downlink_request,
                     std::uint32_t utility_msg) {
  Df4Frame f;
  store_field(f.bits, 0, 5, 0b00100);
  store_field(f.bits, 5, 3, flight_status & 0x7u);
  store_field(f.bits, 8, 5, downlink_request & 0x1Fu);
  store_field(f.bits, 13, 6, utility_msg & 0x3Fu);
  store_field(f.bits, 19, 13, encode_altitude(altitude_ft));
  std::uint32_t parity = crc24(std::span<const std::uint8_t>(f.bits.data(), 32));
  store_field(f.bits, 32, 24, parity ^ (address & 0xFFFFFFu));
  return f;
}

bool check_crc(const Df4Frame& frame, std::uint32_t expected_address) {
  std::uint32_t parity =
      crc24(std::span<const std::uint8_t>(frame.bits.data(), 32));
  return (parity ^ (expected_address & 0xFFFFFFu)) == frame.address_parity();
}

ChipVector ppm_expand(const std::array<std::uint8_t, kFrameBits>& payload) {
  ChipVector cv;
  for (int k = 0; k < kFrameBits; ++k) {
    cv.chips[2 * k] = payload[k] & 1u;
    cv.chips[2 * k + 1] = payload[k] & 1u ? 0u : 1u;
  }
  return cv;
}

std::vector<int> nonzero_chip_indices(const ChipVector& chips) {
  std::vector<int> idx;
  idx.reserve(kFrameBits);
  for (int i = 0; i < kChipCount; ++i)
    if (chips.chips[i]) idx.push_back(i);
  return idx;
}

std::string Df4Frame::to_hex() const {
  static const char* digits = "0123456789ABCDEF";
  std::string out(14, '0');
  for (int n = 0; n < 14; ++n) {
    std::uint32_t nib = field(4 * n, 4);
    out[n] = digits[nib];
  }
  return out;
}

Df4Frame Df4Frame::from_hex(std::string_view hex) {
  if (hex.size() != 14) throw std::invalid_argument("frame hex must be 14 chars");
  Df4Frame f;
  for (int n = 0; n < 14; ++n) {
    char c = hex[n];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else throw std::invalid_argument("frame hex has a non-hex character");
    store_field(f.bits, 4 * n, 4, static_cast<std::uint32_t>(v));
  }
  return f;
}

Df4Frame Df4Frame::from_bits(const std::array<std::uint8_t, kFrameBits>& b) {
  Df4Frame f;
  for (int i = 0; i < kFrameBits; ++i) f.bits[i] = b[i] & 1u;
  return f;
}

}  // namespace saa
