#include "saa/waveform.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace saa {

PulseSpec PulseSpec::unit_power(double half_symbol_s, double rise_time_s) {
  if (rise_time_s <= 0.0 || rise_time_s >= half_symbol_s / 2.0)
    throw std::invalid_argument("pulse rise time must satisfy 0 < tau_r < T/2");
  PulseSpec spec;
  spec.half_symbol_s = half_symbol_s;
  spec.rise_time_s = rise_time_s;
  // (1/T) * integral z^2 = A^2 (T - 4 tau_r / 3) / T
  spec.amplitude = std::sqrt(half_symbol_s /
                             (half_symbol_s - 4.0 * rise_time_s / 3.0));
  return spec;
}

double trapezoid(double t, const PulseSpec& spec) {
  const double T = spec.half_symbol_s;
  const double tr = spec.rise_time_s;
  const double A = spec.amplitude;
  if (t < -T / 2 || t > T / 2) return 0.0;
  if (t < -T / 2 + tr) return A * (t + T / 2) / tr;
  if (t <= T / 2 - tr) return A;
  return A * (-t + T / 2) / tr;
}

namespace {

// Square-root raised cosine impulse response (unnormalized), symbol period Ts.
double rrc_shape(double t, double symbol_s, double beta) {
  const double u = t / symbol_s;
  if (std::abs(u) < 1e-12) return 1.0 - beta + 4.0 * beta / kPi;
  if (std::abs(std::abs(u) - 1.0 / (4.0 * beta)) < 1e-9) {
    return (beta / std::sqrt(2.0)) *
           ((1.0 + 2.0 / kPi) * std::sin(kPi / (4.0 * beta)) +
            (1.0 - 2.0 / kPi) * std::cos(kPi / (4.0 * beta)));
  }
  double num = std::sin(kPi * u * (1.0 - beta)) +
               4.0 * beta * u * std::cos(kPi * u * (1.0 + beta));
  double den = kPi * u * (1.0 - 16.0 * beta * beta * u * u);
  return num / den;
}

}  // namespace

std::vector<double> rrc_taps(double bandwidth_hz, double rolloff,
                             int span_symbols, double ppm_symbol_s,
                             double sample_s) {
  if (rolloff <= 0.0 || rolloff > 1.0)
    throw std::invalid_argument("rolloff must lie in (0, 1]");
  double nyquist = (1.0 + rolloff) / (2.0 * bandwidth_hz);
  if (std::abs(sample_s - nyquist) > 1e-9 * nyquist)
    throw std::invalid_argument("sample period must equal (1+beta)/(2B)");
  if (span_symbols < 1) throw std::invalid_argument("filter span too small");

  int half = static_cast<int>(std::floor(span_symbols * ppm_symbol_s /
                                         (2.0 * sample_s)));
  std::vector<double> taps(2 * half + 1);
  double energy = 0.0;
  for (int k = -half; k <= half; ++k) {
    double v = rrc_shape(k * sample_s, sample_s, rolloff);
    taps[k + half] = v;
    energy += v * v;
  }
  double scale = 1.0 / std::sqrt(energy);
  for (double& v : taps) v *= scale;
  return taps;
}

FilterSpec make_rrc_filter(double bandwidth_hz, double rolloff, int span_symbols,
                           double ppm_symbol_s, double sample_s,
                           double group_delay_s) {
  FilterSpec f;
  f.bandwidth_hz = bandwidth_hz;
  f.rolloff = rolloff;
  f.span_symbols = span_symbols;
  f.taps = rrc_taps(bandwidth_hz, rolloff, span_symbols, ppm_symbol_s, sample_s);
  f.group_delay_s = group_delay_s;
  return f;
}

SampledPulse sample_pulse(const PulseSpec& pulse, const FilterSpec& filter,
                          double sample_s) {
  if (filter.taps.empty() || filter.taps.size() % 2 == 0)
    throw std::invalid_argument("filter taps must be odd-length and nonempty");
  const int M = static_cast<int>(std::floor(pulse.half_symbol_s / sample_s));
  if (M < 1) throw std::invalid_argument("sampling too coarse for the pulse");
  const int half = static_cast<int>(filter.taps.size() / 2);

  SampledPulse sp;
  sp.samples_per_half_symbol = M;
  sp.g.resize(M);
  for (int m = 0; m < M; ++m) {
    double acc = 0.0;
    for (int k = -half; k <= half; ++k) {
      double t = (m - k) * sample_s - pulse.half_symbol_s / 2.0;
      acc += filter.taps[k + half] * trapezoid(t, pulse);
    }
    sp.g[m] = acc;
  }
  sp.center_index = M / 2;
  sp.center_tap = sp.g[sp.center_index];
  return sp;
}

std::vector<cdbl> synthesize_clean(const Df4Frame& frame, const PulseSpec& pulse,
                                   const FilterSpec& filter, double sample_s,
                                   int delay_index, int total_pad) {
  if (delay_index < 0 || delay_index > total_pad)
    throw std::invalid_argument("delay index must satisfy 0 <= d <= D");
  SampledPulse sp = sample_pulse(pulse, filter, sample_s);
  const int M = sp.samples_per_half_symbol;

  std::array<std::uint8_t, 128> q{};
  for (int i = 0; i < 16; ++i) q[i] = kPreambleChips[i];
  ChipVector cv = ppm_expand(frame.bits);
  for (int i = 0; i < kChipCount; ++i) q[16 + i] = cv.chips[i];

  std::vector<cdbl> s(static_cast<size_t>(128) * M + total_pad, cdbl(0.0, 0.0));
  for (int k = 0; k < 128; ++k) {
    if (!q[k]) continue;
    for (int m = 0; m < M; ++m)
      s[static_cast<size_t>(delay_index) + static_cast<size_t>(k) * M + m] =
          cdbl(sp.g[m], 0.0);
  }
  return s;
}

void write_signal_csv(const SampledSignal& signal, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "re,im\n";
  for (const cdbl& v : signal.samples)
    out << v.real() << ',' << v.imag() << '\n';
}

}  // namespace saa
