#pragma once
#include <stdexcept>
#include <string>

namespace deligne {

// Exit-code classes shared by the library, the C API and the CLI.
enum class ErrorKind { Parse = 1, Domain = 2, Internal = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ErrorKind::Parse, m) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error(ErrorKind::Domain, m) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& m) : Error(ErrorKind::Internal, m) {}
};

// Internal invariant check; unlike assert() it stays on in release builds.
#define DELIGNE_CHECK(cond, msg)                                                     \
    do {                                                                             \
        if (!(cond)) throw ::deligne::InternalError(std::string("internal: ") + msg); \
    } while (0)

// checked int64 arithmetic for ring and character coefficients
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw InternalError("coefficient overflow");
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw InternalError("coefficient overflow");
    return r;
}

}  // namespace deligne
