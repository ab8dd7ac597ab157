#include "untwist/error.hpp"

namespace untwist {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::NonUnimodularIntersection: return "NonUnimodularIntersection";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfSlide: return "SelfSlide";
    case ErrorCode::SlideOverLinkComponent: return "SlideOverLinkComponent";
    case ErrorCode::NonUnitFraming: return "NonUnitFraming";
    case ErrorCode::NotSurgeryComponent: return "NotSurgeryComponent";
    case ErrorCode::InvalidSign: return "InvalidSign";
    case ErrorCode::TraceMismatch: return "TraceMismatch";
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace untwist
