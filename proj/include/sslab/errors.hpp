#pragma once

#include <stdexcept>
#include <string>

namespace sslab {

// Size guard on exhaustive operations (permutation enumeration, schedule search).
class guard_error : public std::invalid_argument {
public:
    explicit guard_error(const std::string& what) : std::invalid_argument(what) {}
};

// Increment sequence rejected; one code per violated rule.
class sequence_error : public std::invalid_argument {
public:
    enum class code {
        empty,
        non_positive,
        not_decreasing,
        last_not_one,
        first_not_below_n,
    };

    sequence_error(code c, const std::string& what)
        : std::invalid_argument(what), code_(c) {}

    code which() const noexcept { return code_; }

private:
    code code_;
};

// A family rule cannot produce a valid sequence for this n.
class infeasible_error : public std::invalid_argument {
public:
    explicit infeasible_error(const std::string& what) : std::invalid_argument(what) {}
};

// A simple-process move count exceeds the key's chain position.
class bound_violation : public std::domain_error {
public:
    bound_violation(int key, int pass, const std::string& what)
        : std::domain_error(what), key_(key), pass_(pass) {}

    int key() const noexcept { return key_; }
    int pass() const noexcept { return pass_; }

private:
    int key_;
    int pass_;
};

// Malformed or truncated descriptor bit stream.
class codec_error : public std::runtime_error {
public:
    explicit codec_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sslab
