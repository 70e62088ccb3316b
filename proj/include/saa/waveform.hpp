#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "saa/common.hpp"
#include "saa/frames.hpp"

namespace saa {

/// Mode S downlink preamble chips (8 us, chip duration T).
inline constexpr std::array<std::uint8_t, 16> kPreambleChips = {
    1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0};

/// Trapezoidal Mode S transmit pulse: T is half the PPM symbol time, rise and
/// decay take tau_r each, and the amplitude is normalized to unit average
/// power over the pulse.
struct PulseSpec {
  double half_symbol_s = 0.5e-6;   // T
  double rise_time_s = 0.01e-6;    // tau_r
  double amplitude = 1.0;          // A

  /// Amplitude solving (1/T) * integral of z^2 = 1.
  static PulseSpec unit_power(double half_symbol_s, double rise_time_s);
};

double trapezoid(double t, const PulseSpec& spec);

/// Truncated unit-energy square-root raised cosine receive filter sampled at
/// the receiver rate, plus the carried group-delay metadata.
struct FilterSpec {
  double bandwidth_hz = 6e6;
  double rolloff = 0.95;
  int span_symbols = 8;            // total width in PPM symbol durations (2T)
  std::vector<double> taps;        // symmetric, sum of squares = 1
  double group_delay_s = 0.0;
};

/// Unit-energy RRC tap vector at sample spacing sample_s. The sampling rate
/// must satisfy sample_s = (1 + rolloff) / (2 * bandwidth).
std::vector<double> rrc_taps(double bandwidth_hz, double rolloff,
                             int span_symbols, double ppm_symbol_s,
                             double sample_s);

FilterSpec make_rrc_filter(double bandwidth_hz, double rolloff, int span_symbols,
                           double ppm_symbol_s, double sample_s,
                           double group_delay_s);

/// The M in-pulse samples of g = z (*) h, g_m = g(m*Ts - T/2).
struct SampledPulse {
  std::vector<double> g;
  int samples_per_half_symbol = 0;  // M
  int center_index = 0;             // n_c = floor(M/2)
  double center_tap = 0.0;          // g_nc
};

SampledPulse sample_pulse(const PulseSpec& pulse, const FilterSpec& filter,
                          double sample_s);

/// Complex baseband sample vector with its acquisition metadata.
struct SampledSignal {
  std::vector<cdbl> samples;
  double sample_period_s = 0.0;
  double group_delay_s = 0.0;
};

/// Clean sampled DF4 reply: zeros(d), then the 128-chip train (16 preamble +
/// 112 PPM data chips) each spanning the M pulse samples, then zeros(D - d).
std::vector<cdbl> synthesize_clean(const Df4Frame& frame, const PulseSpec& pulse,
                                   const FilterSpec& filter, double sample_s,
                                   int delay_index, int total_pad);

/// Two-column (re, im) CSV dump for debugging.
void write_signal_csv(const SampledSignal& signal, const std::string& path);

}  // namespace saa
