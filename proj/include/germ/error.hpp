#ifndef GERM_ERROR_HPP
#define GERM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germ {

// Stable machine-readable error codes; the CLI maps these onto exit statuses.
enum class ErrorCode {
    DivisionByZero,
    IncompatibleRamification,
    InsufficientTruncation,
    NotIrreducible,
    NotDistinct,
    UnsupportedExtension,
    DegenerateAxis,
    GermNotVanishing,
    ParseError,
    UnknownIdentifier,
    SchemaError,
    RangeError,
    DegenerateContact,
    InvalidCertificate,
    TangentConeNotNormalized,
    InvalidInput,
    InternalError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

// Parse failures carry the byte offset of the offending token.
class ParseFailure : public Error {
  public:
    ParseFailure(ErrorCode code, const std::string& message, std::size_t offset)
        : Error(code, message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::IncompatibleRamification: return "IncompatibleRamification";
        case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NotDistinct: return "NotDistinct";
        case ErrorCode::UnsupportedExtension: return "UnsupportedExtension";
        case ErrorCode::DegenerateAxis: return "DegenerateAxis";
        case ErrorCode::GermNotVanishing: return "GermNotVanishing";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::DegenerateContact: return "DegenerateContact";
        case ErrorCode::InvalidCertificate: return "InvalidCertificate";
        case ErrorCode::TangentConeNotNormalized: return "TangentConeNotNormalized";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace germ

#endif
