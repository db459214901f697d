#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hillspectra/types.hpp"

namespace hillspectra {

// submultiplicative weight omega on even integers; Omega(m) = omega(m)/|m|
struct Weight {
  enum class Family { Sobolev, Exponential, Gevrey };

  static Weight sobolev(double a);
  static Weight exponential(double c);
  static Weight gevrey(double c, double g);
  static Weight from_name(const std::string& name, double a, double c, double g);

  double omega(int m) const;
  double big_omega(int m) const;  // omega(m)/|m| for m != 0, omega(0) at m = 0
  std::string name() const;

  Family family = Family::Sobolev;
  double a = 2.0;
  double c = 0.1;
  double g = 0.5;
};

// pi-periodic distribution v = Q' given by even-harmonic coefficients
// Q(x) ~ sum_k q_k e^{ikx} with q_0 = 0 and sum |q_k|^2 < inf
class PotentialSpec {
 public:
  // validates: even indices only, finite values, q_0 forced to zero
  static PotentialSpec from_coeffs(std::map<int, cxd> coeffs,
                                   std::string family = "custom");

  static PotentialSpec zero();
  static PotentialSpec mathieu(double c);
  static PotentialSpec delta_comb(double s, double x0, int F);
  static PotentialSpec gasymov(double s, double r, int F);
  static PotentialSpec sawtooth(double s, int F);
  static PotentialSpec random_weighted(const Weight& w, std::uint64_t seed,
                                       int F, double target_norm);
  static PotentialSpec builtin(const std::string& name, int F,
                               std::uint64_t seed = 1);

  const std::map<int, cxd>& coeffs() const { return coeffs_; }
  const std::string& family() const { return family_; }
  int band_limit() const { return F_; }  // max |k| present is 2F

  cxd q(int k) const;        // q_k (zero outside the band)
  cxd v_plus(int k) const;   // ik q_k, the forward coefficient of v
  cxd q_eval(double x) const;
  cxd q_at_zero() const;     // Fejer-smoothed value of Q at x = 0
  double q_l2() const;
  bool is_real() const;      // q_{-k} == conj(q_k) for all k

  // H(Omega) norm of v over modes m = k/2: (sum |m Omega(2m) q_{2m}|^2 ... )
  double weighted_norm(const Weight& w) const;

  // expansion coefficients of Q in the sine frame (index k >= 1) and the
  // cosine frame (index k >= 0); both returned up to kmax inclusive
  struct SineCosineCoeffs {
    std::vector<cxd> dir;  // dir[k], k = 0..kmax, dir[0] unused (= 0)
    std::vector<cxd> neu;  // neu[k], k = 0..kmax
  };
  SineCosineCoeffs sine_cosine_coeffs(int kmax) const;

  // piecewise-constant jump data when the family is delta_comb
  struct CombData {
    double s;
    double x0;
  };
  std::optional<CombData> comb() const { return comb_; }

 private:
  std::map<int, cxd> coeffs_;
  std::string family_ = "custom";
  int F_ = 0;
  std::optional<CombData> comb_;
};

}  // namespace hillspectra
