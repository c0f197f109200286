#ifndef SLLS_ERROR_H_
#define SLLS_ERROR_H_

#include <stdexcept>
#include <string>

namespace slls {

enum class ErrorCode {
  kDomain,            // argument outside an operation's domain
  kOverflow,          // a power or position exceeds 64 bits
  kUnreachable,       // path destination not reachable from source
  kBoundExceeded,     // oracle / analysis size guard
  kInsufficientData,  // log too short for the requested labels
  kOutOfRange,        // certificate lengths outside the log
  kMissingLabel,      // pool assembly could not find a label
  kMalformed,         // structurally invalid certificate input
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace slls

#endif  // SLLS_ERROR_H_
