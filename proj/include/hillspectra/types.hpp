#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hillspectra {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double pi = 3.14159265358979323846;

// boundary conditions on [0, pi]; Neu means vanishing quasi-derivative y' - Qy
enum class Bc { PerPlus, PerMinus, Dir, Neu };

const char* bc_name(Bc bc);
Bc bc_from_name(const std::string& s);

// even modes pair with periodic eigenvalues, odd with antiperiodic
inline Bc bc_for_mode(int n) { return (n % 2 == 0) ? Bc::PerPlus : Bc::PerMinus; }

enum class Errc {
  OddIndex,
  NonFinite,
  BadParam,
  TruncationTooSmall,
  OnSpectrumOfFree,
  NearSingular,
  ComplementSingular,
  ModeOutsideWindow,
  EigensolveFailure,
  OverlappingDiscs,
  CountMismatch,
  EnclosureViolation,
  NotConverged,
  DegeneratePair,
  NullMatch,
  FrameMismatch,
  StepFailure,
  RootCountUnstable,
  InsufficientData,
};

const char* errc_name(Errc c);

// config-type errors exit 2 from the CLI, numerical failures exit 3
bool errc_is_config(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace hillspectra
