#pragma once

#include <stdexcept>
#include <string>

namespace tilelab {

enum class ErrorCode {
    invalid_profile,
    domain,
    shape,
    not_partite,
    resource,
    structural,
    undefined_frobenius,
    parse,
    overflow,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::invalid_profile: return "invalid-profile";
        case ErrorCode::domain: return "domain";
        case ErrorCode::shape: return "shape";
        case ErrorCode::not_partite: return "not-partite";
        case ErrorCode::resource: return "resource";
        case ErrorCode::structural: return "structural";
        case ErrorCode::undefined_frobenius: return "undefined-frobenius";
        case ErrorCode::parse: return "parse";
        case ErrorCode::overflow: return "overflow";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

constexpr long long kDefaultBudget = 10'000'000;

// Search-node counter shared down a recursion. Exceeding the limit aborts
// the search with a resource error rather than running unbounded.
class Budget {
public:
    explicit Budget(long long limit = kDefaultBudget) : limit_(limit) {}

    void spend(long long nodes = 1) {
        used_ += nodes;
        if (used_ > limit_)
            fail(ErrorCode::resource,
                 "search budget exceeded (" + std::to_string(limit_) +
                     " nodes); raise --budget to continue");
    }

    long long used() const { return used_; }
    long long limit() const { return limit_; }

private:
    long long limit_;
    long long used_ = 0;
};

}  // namespace tilelab
