#pragma once

#include <stdexcept>
#include <string>

namespace velc {

// Error categories surfaced by the CLI as machine-parsable codes.
enum class ErrorCode {
    io,         // unreadable/unwritable files
    parse,      // malformed input text
    config,     // inconsistent run configuration
    dimension,  // tensor/model shape mismatch
    domain,     // value outside an operation's domain
    numeric,    // non-finite value produced
    usage,      // bad command invocation
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::io: return "E_IO";
    case ErrorCode::parse: return "E_PARSE";
    case ErrorCode::config: return "E_CONFIG";
    case ErrorCode::dimension: return "E_DIM";
    case ErrorCode::domain: return "E_DOMAIN";
    case ErrorCode::numeric: return "E_NUMERIC";
    case ErrorCode::usage: return "E_USAGE";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace velc
