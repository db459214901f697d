#include "hillspectra/potential.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace hillspectra {

namespace {

const cxd I(0.0, 1.0);

// deterministic uniform [0,1) from a 64-bit draw, independent of the
// standard library's distribution implementation
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Weight Weight::sobolev(double a) {
  Weight w;
  w.family = Family::Sobolev;
  w.a = a;
  return w;
}

Weight Weight::exponential(double c) {
  Weight w;
  w.family = Family::Exponential;
  w.c = c;
  return w;
}

Weight Weight::gevrey(double c, double g) {
  Weight w;
  w.family = Family::Gevrey;
  w.c = c;
  w.g = g;
  return w;
}

Weight Weight::from_name(const std::string& name, double a, double c, double g) {
  if (name == "sobolev") return sobolev(a);
  if (name == "exponential") return exponential(c);
  if (name == "gevrey") return gevrey(c, g);
  throw Error(Errc::BadParam, "unknown weight family '" + name + "'");
}

double Weight::omega(int m) const {
  double t = std::abs(static_cast<double>(m));
  switch (family) {
    case Family::Sobolev: return std::pow(1.0 + t, a);
    case Family::Exponential: return std::exp(c * t);
    case Family::Gevrey: return std::exp(c * std::pow(t, g));
  }
  return 1.0;
}

double Weight::big_omega(int m) const {
  if (m == 0) return omega(0);
  return omega(m) / std::abs(static_cast<double>(m));
}

std::string Weight::name() const {
  switch (family) {
    case Family::Sobolev: return "sobolev";
    case Family::Exponential: return "exponential";
    case Family::Gevrey: return "gevrey";
  }
  return "?";
}

PotentialSpec PotentialSpec::from_coeffs(std::map<int, cxd> coeffs,
                                         std::string family) {
  for (const auto& [k, v] : coeffs) {
    if (k % 2 != 0)
      throw Error(Errc::OddIndex,
                  "coefficient index " + std::to_string(k) + " is odd");
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(Errc::NonFinite,
                  "coefficient at index " + std::to_string(k) + " is not finite");
  }
  coeffs.erase(0);
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second == cxd(0.0, 0.0))
      it = coeffs.erase(it);
    else
      ++it;
  }
  PotentialSpec p;
  p.coeffs_ = std::move(coeffs);
  p.family_ = std::move(family);
  int kmax = 0;
  for (const auto& [k, v] : p.coeffs_) kmax = std::max(kmax, std::abs(k));
  p.F_ = kmax / 2;
  return p;
}

PotentialSpec PotentialSpec::zero() {
  return from_coeffs({}, "zero");
}

PotentialSpec PotentialSpec::mathieu(double c) {
  // v = 2c cos 2x, Q = c sin 2x
  std::map<int, cxd> m;
  m[2] = cxd(0.0, -c / 2.0);
  m[-2] = std::conj(m[2]);
  return from_coeffs(std::move(m), "mathieu");
}

PotentialSpec PotentialSpec::delta_comb(double s, double x0, int F) {
  if (s == 0.0) throw Error(Errc::BadParam, "delta_comb jump s must be nonzero");
  if (!(x0 > 0.0 && x0 < pi))
    throw Error(Errc::BadParam, "delta_comb location x0 must lie in (0, pi)");
  if (F < 1) throw Error(Errc::BadParam, "band limit F must be positive");
  // Q is a mean-zero sawtooth with jump s at x0:
  // Q(x) = -s x / pi + s H(x - x0) + s (x0/pi - 1/2) on [0, pi)
  std::map<int, cxd> m;
  for (int k = 2; k <= 2 * F; k += 2) {
    cxd qk = -(s * I / (pi * k)) * std::exp(-I * static_cast<double>(k) * x0);
    m[k] = qk;
    m[-k] = std::conj(qk);
  }
  auto p = from_coeffs(std::move(m), "delta_comb");
  p.comb_ = CombData{s, x0};
  return p;
}

PotentialSpec PotentialSpec::gasymov(double s, double r, int F) {
  if (s == 0.0) throw Error(Errc::BadParam, "gasymov scale s must be nonzero");
  if (!(r > 0.0 && r < 1.0))
    throw Error(Errc::BadParam, "gasymov ratio r must lie in (0, 1)");
  if (F < 1) throw Error(Errc::BadParam, "band limit F must be positive");
  std::map<int, cxd> m;
  for (int k = 2; k <= 2 * F; k += 2) m[k] = s * std::pow(r, k);
  return from_coeffs(std::move(m), "gasymov");
}

PotentialSpec PotentialSpec::sawtooth(double s, int F) {
  if (s == 0.0) throw Error(Errc::BadParam, "sawtooth scale s must be nonzero");
  if (F < 1) throw Error(Errc::BadParam, "band limit F must be positive");
  // Q(x) = s (1/2 - x/pi) on (0, pi), jump s at the period points
  std::map<int, cxd> m;
  for (int k = 2; k <= 2 * F; k += 2) {
    cxd qk = s * I / (pi * k);
    m[k] = qk;
    m[-k] = std::conj(qk);
  }
  return from_coeffs(std::move(m), "sawtooth");
}

PotentialSpec PotentialSpec::random_weighted(const Weight& w, std::uint64_t seed,
                                             int F, double target_norm) {
  if (F < 1) throw Error(Errc::BadParam, "band limit F must be positive");
  if (!(target_norm > 0.0))
    throw Error(Errc::BadParam, "target norm must be positive");
  // magnitudes |v_m| = A / (Omega(m) m^{3/4}) put v in H(Omega) marginally;
  // A is fixed so the weighted norm equals target_norm, phases are random
  double sum = 0.0;
  for (int m = 1; m <= F; ++m) sum += 2.0 / std::pow(m, 1.5);
  double A = target_norm / std::sqrt(sum);
  std::mt19937_64 rng(seed);
  std::map<int, cxd> coeffs;
  for (int m = 1; m <= F; ++m) {
    double mag_v = A / (w.big_omega(m) * std::pow(m, 0.75));
    double theta = 2.0 * pi * unit_uniform(rng);
    cxd vm = mag_v * std::exp(I * theta);
    // v_m is the coefficient of v against e^{2imx}; q_{2m} = v_m / (2im)
    cxd q2m = vm / (2.0 * I * static_cast<double>(m));
    coeffs[2 * m] = q2m;
    coeffs[-2 * m] = std::conj(q2m);
  }
  return from_coeffs(std::move(coeffs), "random_weighted");
}

PotentialSpec PotentialSpec::builtin(const std::string& name, int F,
                                     std::uint64_t seed) {
  if (name == "zero") return zero();
  if (name == "mathieu") return mathieu(1.0);
  if (name == "delta_comb") return delta_comb(1.0, pi / 2.0, F);
  if (name == "gasymov") return gasymov(1.0, 0.5, F);
  if (name == "sawtooth") return sawtooth(1.0, F);
  if (name == "random_weighted")
    return random_weighted(Weight::sobolev(2.0), seed, F, 1.0);
  throw Error(Errc::BadParam, "unknown builtin family '" + name + "'");
}

cxd PotentialSpec::q(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? cxd(0.0, 0.0) : it->second;
}

cxd PotentialSpec::v_plus(int k) const {
  return I * static_cast<double>(k) * q(k);
}

cxd PotentialSpec::q_eval(double x) const {
  cxd sum(0.0, 0.0);
  for (const auto& [k, v] : coeffs_) sum += v * std::exp(I * static_cast<double>(k) * x);
  return sum;
}

cxd PotentialSpec::q_at_zero() const {
  double width = 2.0 * F_ + 2.0;
  cxd sum(0.0, 0.0);
  for (const auto& [k, v] : coeffs_) sum += (1.0 - std::abs(k) / width) * v;
  return sum;
}

double PotentialSpec::q_l2() const {
  double s = 0.0;
  for (const auto& [k, v] : coeffs_) s += std::norm(v);
  return std::sqrt(s);
}

bool PotentialSpec::is_real() const {
  for (const auto& [k, v] : coeffs_) {
    cxd mirror = q(-k);
    if (std::abs(mirror - std::conj(v)) > 1e-14 * (1.0 + std::abs(v)))
      return false;
  }
  return true;
}

double PotentialSpec::weighted_norm(const Weight& w) const {
  // v_m = 2im q_{2m} against e^{2imx}; norm^2 = sum |v_m|^2 Omega(m)^2
  double s = 0.0;
  for (const auto& [k, v] : coeffs_) {
    int m = k / 2;
    double vm = 2.0 * std::abs(m) * std::abs(v);
    s += vm * vm * w.big_omega(m) * w.big_omega(m);
  }
  return std::sqrt(s);
}

PotentialSpec::SineCosineCoeffs PotentialSpec::sine_cosine_coeffs(int kmax) const {
  if (kmax < 1) throw Error(Errc::BadParam, "kmax must be at least 1");
  SineCosineCoeffs out;
  out.dir.assign(kmax + 1, cxd(0.0, 0.0));
  out.neu.assign(kmax + 1, cxd(0.0, 0.0));
  for (int k = 1; k <= kmax; ++k) {
    if (k % 2 == 0) {
      // only q = +-k survive the integral against e^{iqx}
      out.dir[k] = (I / std::sqrt(2.0)) * (q(k) - q(-k));
      out.neu[k] = (q(k) + q(-k)) / std::sqrt(2.0);
    } else {
      cxd sd(0.0, 0.0), sn(0.0, 0.0);
      for (const auto& [qi, v] : coeffs_) {
        double denom = static_cast<double>(k) * k - static_cast<double>(qi) * qi;
        sd += v / denom;
        sn += v * static_cast<double>(qi) / denom;
      }
      out.dir[k] = (2.0 * std::sqrt(2.0) * k / pi) * sd;
      out.neu[k] = (-2.0 * std::sqrt(2.0) * I / pi) * sn;
    }
  }
  return out;
}

}  // namespace hillspectra
