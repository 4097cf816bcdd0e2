#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace l0kit {

enum class Errc {
  DegenerateAtom,
  EmptySpace,
  SpaceMismatch,
  EmptyFamily,
  PieceCountMismatch,
  DimMismatch,
  EmptySection,
  BadEpsilon,
  BadValue,
  Unsupported,
  PrefixExhausted,
  NotConvexWeights,
  OutsideEnlargement,
  NotSelfMap,
  NoConvergence,
  CertificateViolation,
  HypothesisViolation,
};

std::string_view errc_name(Errc code) noexcept;

/// Library error. `atoms` lists the atoms where the failure was detected when
/// that is meaningful (OutsideEnlargement, NotSelfMap, ...); `residual` carries
/// the best residual reached for NoConvergence.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<std::size_t> atoms = {},
        double residual = 0.0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        message_(what),
        atoms_(std::move(atoms)),
        residual_(residual) {}

  Errc code() const noexcept { return code_; }
  /// The description without the code prefix.
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::size_t>& atoms() const noexcept { return atoms_; }
  double residual() const noexcept { return residual_; }

 private:
  Errc code_;
  std::string message_;
  std::vector<std::size_t> atoms_;
  double residual_;
};

inline std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DegenerateAtom: return "DegenerateAtom";
    case Errc::EmptySpace: return "EmptySpace";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::PieceCountMismatch: return "PieceCountMismatch";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::EmptySection: return "EmptySection";
    case Errc::BadEpsilon: return "BadEpsilon";
    case Errc::BadValue: return "BadValue";
    case Errc::Unsupported: return "Unsupported";
    case Errc::PrefixExhausted: return "PrefixExhausted";
    case Errc::NotConvexWeights: return "NotConvexWeights";
    case Errc::OutsideEnlargement: return "OutsideEnlargement";
    case Errc::NotSelfMap: return "NotSelfMap";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::CertificateViolation: return "CertificateViolation";
    case Errc::HypothesisViolation: return "HypothesisViolation";
  }
  return "Unknown";
}

}  // namespace l0kit
