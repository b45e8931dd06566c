#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace onerel {

  enum class ErrorCode {
    UnknownGenerator,
    MalformedToken,
    ZeroExponent,
    EmptyWord,
    NotCyclicallyReduced,
    DuplicateVertex,
    UnknownEndpoint,
    LoopEdge,
    DuplicateEdge,
    ZeroVertices,
    EmptyGraph,
    InvalidLetter,
    GraphMismatch,
    TooFewVertices,
    RankMismatch,
    TrivialElement,
    PowersShareRoot,
    ModulusMismatch,
    Disconnected,
    Malformed,
    WrongGraph,
    NotForest,
    DiameterOutOfRange,
    NonCommutingImages,
    InvalidArgument,
  };

  constexpr std::string_view to_string(ErrorCode c) noexcept {
    switch (c) {
      case ErrorCode::UnknownGenerator: return "UnknownGenerator";
      case ErrorCode::MalformedToken: return "MalformedToken";
      case ErrorCode::ZeroExponent: return "ZeroExponent";
      case ErrorCode::EmptyWord: return "EmptyWord";
      case ErrorCode::NotCyclicallyReduced: return "NotCyclicallyReduced";
      case ErrorCode::DuplicateVertex: return "DuplicateVertex";
      case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
      case ErrorCode::LoopEdge: return "LoopEdge";
      case ErrorCode::DuplicateEdge: return "DuplicateEdge";
      case ErrorCode::ZeroVertices: return "ZeroVertices";
      case ErrorCode::EmptyGraph: return "EmptyGraph";
      case ErrorCode::InvalidLetter: return "InvalidLetter";
      case ErrorCode::GraphMismatch: return "GraphMismatch";
      case ErrorCode::TooFewVertices: return "TooFewVertices";
      case ErrorCode::RankMismatch: return "RankMismatch";
      case ErrorCode::TrivialElement: return "TrivialElement";
      case ErrorCode::PowersShareRoot: return "PowersShareRoot";
      case ErrorCode::ModulusMismatch: return "ModulusMismatch";
      case ErrorCode::Disconnected: return "Disconnected";
      case ErrorCode::Malformed: return "Malformed";
      case ErrorCode::WrongGraph: return "WrongGraph";
      case ErrorCode::NotForest: return "NotForest";
      case ErrorCode::DiameterOutOfRange: return "DiameterOutOfRange";
      case ErrorCode::NonCommutingImages: return "NonCommutingImages";
      case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
  }

  //! Exception thrown by every operation in the library; `code()` identifies
  //! the failure kind so callers can branch without parsing messages.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void fail(ErrorCode code, std::string const& detail) {
    throw Error(code, detail);
  }

}  // namespace onerel
