#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frugal {

enum class ErrorKind {
  LoopEdge,
  DuplicateId,
  DanglingEndpoint,
  MissingEdge,
  InvalidRotation,
  NonPlanarEmbedding,
  NoLightVertex,
  ListTooSmall,
  ExtensionFailed,
  DegreeBoundBreached,
  NotReducible,
  NoLightDegree2,
  Precondition,
  OddDegree,
  NotRegular,
  NotBipartite,
  NotEvenRegular,
  OddK,
  EvenK,
  InvalidColouring,
  ClassColouringBudgetExhausted,
  ParseError,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorKind::NoLightVertex: return "NoLightVertex";
    case ErrorKind::ListTooSmall: return "ListTooSmall";
    case ErrorKind::ExtensionFailed: return "ExtensionFailed";
    case ErrorKind::DegreeBoundBreached: return "DegreeBoundBreached";
    case ErrorKind::NotReducible: return "NotReducible";
    case ErrorKind::NoLightDegree2: return "NoLightDegree2";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::NotEvenRegular: return "NotEvenRegular";
    case ErrorKind::OddK: return "OddK";
    case ErrorKind::EvenK: return "EvenK";
    case ErrorKind::InvalidColouring: return "InvalidColouring";
    case ErrorKind::ClassColouringBudgetExhausted: return "ClassColouringBudgetExhausted";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Structural or precondition failure raised by any algorithm in the library.
/// Colouring defects are not errors; validators return them as values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace frugal
