// SPDX-License-Identifier: Apache-2.0
#include "eds/error.hpp"

namespace eds {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::SingularCurve: return "singular-curve";
    case ErrorKind::NotOnCurve: return "not-on-curve";
    case ErrorKind::TorsionPoint: return "torsion-point";
    case ErrorKind::BadReductionPrime: return "bad-reduction-prime";
    case ErrorKind::IndexCapExceeded: return "index-cap-exceeded";
    case ErrorKind::ApparitionNotFound: return "apparition-not-found";
    case ErrorKind::ClassEmpty: return "class-empty";
    case ErrorKind::AmbiguousOrder: return "ambiguous-order";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Integrity: return "integrity";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace eds
